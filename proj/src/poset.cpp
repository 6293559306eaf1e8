// Copyright 2026 The Echelon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "echelon/poset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace echelon {

std::vector<int> bitset_elements(const Bitset& b) {
  std::vector<int> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

Poset Poset::from_covers(int n, std::span<const Cover> pairs, std::vector<std::string> names) {
  if (n < 0) throw InputError("poset size must be non-negative");
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw InputError("names must have one entry per element");

  std::vector<std::vector<int>> succ(n);
  std::vector<int> indegree(n, 0);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw InputError("cover pair (" + std::to_string(x) + "," + std::to_string(y) +
                       ") out of range for n=" + std::to_string(n));
    if (x == y) continue;
    succ[x].push_back(y);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int y : s) ++indegree[y];
  }

  // Kahn order; leftovers mean a cycle.
  std::vector<int> topo;
  topo.reserve(n);
  std::queue<int> ready;
  for (int x = 0; x < n; ++x)
    if (indegree[x] == 0) ready.push(x);
  while (!ready.empty()) {
    int x = ready.front();
    ready.pop();
    topo.push_back(x);
    for (int y : succ[x])
      if (--indegree[y] == 0) ready.push(y);
  }
  if (static_cast<int>(topo.size()) != n) throw CycleError("cover pairs contain a cycle");

  Poset p;
  p.n_ = n;
  p.down_.assign(n, Bitset(n));
  p.up_.assign(n, Bitset(n));
  for (int x = 0; x < n; ++x) p.down_[x].set(x);
  for (int x : topo)
    for (int y : succ[x]) p.down_[y] |= p.down_[x];
  for (int y = 0; y < n; ++y)
    for (auto x = p.down_[y].find_first(); x != Bitset::npos; x = p.down_[y].find_next(x))
      p.up_[x].set(y);

  p.up_covers_.assign(n, {});
  p.down_covers_.assign(n, {});
  for (int x = 0; x < n; ++x) {
    for (int y : succ[x]) {
      // x covers-below y iff the interval [x, y] has exactly two elements.
      if ((p.up_[x] & p.down_[y]).count() == 2) {
        p.covers_.emplace_back(x, y);
        p.up_covers_[x].push_back(y);
        p.down_covers_[y].push_back(x);
      }
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  for (auto& v : p.down_covers_) std::sort(v.begin(), v.end());
  p.names_ = std::move(names);
  return p;
}

bool Poset::covers(int x, int y) const {
  const auto& up = up_covers_[x];
  return std::binary_search(up.begin(), up.end(), y);
}

Bitset Poset::up_set_of(const Bitset& xs) const {
  Bitset out(n_);
  for (auto x = xs.find_first(); x != Bitset::npos; x = xs.find_next(x)) out |= up_[x];
  return out;
}

Bitset Poset::down_set_of(const Bitset& xs) const {
  Bitset out(n_);
  for (auto x = xs.find_first(); x != Bitset::npos; x = xs.find_next(x)) out |= down_[x];
  return out;
}

bool Poset::is_down_set(const Bitset& xs) const {
  for (auto x = xs.find_first(); x != Bitset::npos; x = xs.find_next(x))
    if (!down_[x].is_subset_of(xs)) return false;
  return true;
}

Bitset Poset::full_set() const {
  Bitset b(n_);
  b.set();
  return b;
}

std::vector<int> Poset::minimals() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (down_covers_[x].empty()) out.push_back(x);
  return out;
}

std::vector<int> Poset::maximals() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (up_covers_[x].empty()) out.push_back(x);
  return out;
}

std::optional<int> Poset::minimum() const {
  auto m = minimals();
  if (m.size() == 1) return m.front();
  return std::nullopt;
}

std::optional<int> Poset::maximum() const {
  auto m = maximals();
  if (m.size() == 1) return m.front();
  return std::nullopt;
}

bool Poset::is_connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto* nbrs : {&up_covers_[x], &down_covers_[x]})
      for (int y : *nbrs)
        if (!seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
  }
  return reached == n_;
}

Poset Poset::dual() const {
  Poset d;
  d.n_ = n_;
  d.down_ = up_;
  d.up_ = down_;
  d.up_covers_ = down_covers_;
  d.down_covers_ = up_covers_;
  d.covers_.reserve(covers_.size());
  for (auto [x, y] : covers_) d.covers_.emplace_back(y, x);
  std::sort(d.covers_.begin(), d.covers_.end());
  d.names_ = names_;
  return d;
}

std::string Poset::name(int x) const {
  if (names_.empty()) return std::to_string(x);
  return names_[x];
}

bool Poset::same_order(const Poset& other) const {
  return n_ == other.n_ && down_ == other.down_;
}

int Subposet::to_child(int parent_element) const {
  auto it = std::find(to_parent.begin(), to_parent.end(), parent_element);
  if (it == to_parent.end()) return -1;
  return static_cast<int>(it - to_parent.begin());
}

Subposet induced_subposet(const Poset& p, const std::vector<int>& elements) {
  const int m = static_cast<int>(elements.size());
  std::vector<std::string> names;
  if (!p.names().empty())
    for (int e : elements) names.push_back(p.name(e));
  Poset sub = Poset::from_relation(
      m, [&](int a, int b) { return p.leq(elements[a], elements[b]); }, std::move(names));
  return {std::move(sub), elements};
}

Subposet interval(const Poset& p, int x, int y) {
  if (!p.leq(x, y))
    throw DomainError("interval: " + p.name(x) + " is not below " + p.name(y));
  return induced_subposet(p, bitset_elements(p.up_set(x) & p.down_set(y)));
}

std::vector<long long> mobius_row(const Poset& p, int x) {
  const int n = p.size();
  std::vector<long long> mu(n, 0);
  // Elements of the up-set ordered by down-set size form a linear extension.
  auto above = bitset_elements(p.up_set(x));
  std::stable_sort(above.begin(), above.end(), [&](int a, int b) {
    return p.down_set(a).count() < p.down_set(b).count();
  });
  for (int y : above) {
    if (y == x) {
      mu[y] = 1;
      continue;
    }
    long long s = 0;
    const Bitset between = p.up_set(x) & p.down_set(y);
    for (auto z = between.find_first(); z != Bitset::npos; z = between.find_next(z))
      if (static_cast<int>(z) != y) s += mu[z];
    mu[y] = -s;
  }
  return mu;
}

long long mobius(const Poset& p, int x, int y) {
  if (!p.leq(x, y))
    throw DomainError("mobius: " + p.name(x) + " is not below " + p.name(y));
  return mobius_row(p, x)[y];
}

std::optional<std::vector<int>> rank_function(const Poset& p) {
  const int n = p.size();
  constexpr int kUnset = std::numeric_limits<int>::min();
  std::vector<int> rank(n, kUnset);
  for (int start = 0; start < n; ++start) {
    if (rank[start] != kUnset) continue;
    std::vector<int> component{start};
    rank[start] = 0;
    for (std::size_t k = 0; k < component.size(); ++k) {
      int x = component[k];
      for (int y : p.covers_up(x)) {
        if (rank[y] == kUnset) {
          rank[y] = rank[x] + 1;
          component.push_back(y);
        } else if (rank[y] != rank[x] + 1) {
          return std::nullopt;
        }
      }
      for (int y : p.covers_down(x)) {
        if (rank[y] == kUnset) {
          rank[y] = rank[x] - 1;
          component.push_back(y);
        } else if (rank[y] != rank[x] - 1) {
          return std::nullopt;
        }
      }
    }
    int lowest = kUnset;
    for (int x : component) lowest = (lowest == kUnset) ? rank[x] : std::min(lowest, rank[x]);
    for (int x : component) rank[x] -= lowest;
  }
  return rank;
}

bool is_eulerian(const Poset& p) {
  auto rank = rank_function(p);
  if (!rank) return false;
  for (int x = 0; x < p.size(); ++x) {
    auto mu = mobius_row(p, x);
    const Bitset& up = p.up_set(x);
    for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
      long long expected = (((*rank)[y] - (*rank)[x]) % 2 == 0) ? 1 : -1;
      if (mu[y] != expected) return false;
    }
  }
  return true;
}

bool is_linear_extension(const Poset& p, std::span<const int> order) {
  const int n = p.size();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int k = 0; k < n; ++k) {
    int x = order[k];
    if (x < 0 || x >= n || pos[x] != -1) return false;
    pos[x] = k;
  }
  for (auto [x, y] : p.cover_pairs())
    if (pos[x] > pos[y]) return false;
  return true;
}

LinearExtension::LinearExtension(const Poset& p, std::vector<int> order)
    : order_(std::move(order)) {
  if (!is_linear_extension(p, order_))
    throw InputError("sequence is not a linear extension of the poset");
  pos_.assign(order_.size(), 0);
  for (int k = 0; k < size(); ++k) pos_[order_[k]] = k;
}

LinearExtension LinearExtension::from_positions(const Poset& p, const std::vector<int>& one_based) {
  const int n = p.size();
  if (static_cast<int>(one_based.size()) != n)
    throw InputError("extension has " + std::to_string(one_based.size()) +
                     " positions, poset has " + std::to_string(n) + " elements");
  std::vector<int> order(n, -1);
  for (int x = 0; x < n; ++x) {
    int k = one_based[x] - 1;
    if (k < 0 || k >= n || order[k] != -1)
      throw InputError("extension positions are not a bijection onto 1..n");
    order[k] = x;
  }
  return LinearExtension(p, std::move(order));
}

std::vector<int> LinearExtension::positions() const {
  std::vector<int> out(pos_);
  for (int& k : out) ++k;
  return out;
}

Bitset LinearExtension::prefix(int x) const {
  Bitset b(order_.size());
  for (int k = 0; k <= pos_[x]; ++k) b.set(order_[k]);
  return b;
}

Bitset LinearExtension::suffix(int x) const {
  Bitset b(order_.size());
  for (int k = pos_[x]; k < size(); ++k) b.set(order_[k]);
  return b;
}

int LinearExtension::latest(const Bitset& xs) const {
  int best = -1;
  for (auto x = xs.find_first(); x != Bitset::npos; x = xs.find_next(x))
    if (best < 0 || pos_[x] > pos_[best]) best = static_cast<int>(x);
  return best;
}

LinearExtension LinearExtension::reversed_for(const Poset& dual) const {
  std::vector<int> rev(order_.rbegin(), order_.rend());
  return LinearExtension(dual, std::move(rev));
}

ElementBijection::ElementBijection(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (int y : image_) {
    if (y < 0 || y >= size() || hit[y]) throw InputError("image array is not a permutation");
    hit[y] = 1;
  }
}

ElementBijection ElementBijection::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return ElementBijection(std::move(id));
}

ElementBijection ElementBijection::inverse() const {
  std::vector<int> inv(image_.size());
  for (int x = 0; x < size(); ++x) inv[image_[x]] = x;
  return ElementBijection(std::move(inv));
}

ElementBijection ElementBijection::after(const ElementBijection& other) const {
  if (other.size() != size()) throw InputError("composing bijections of different sizes");
  std::vector<int> out(image_.size());
  for (int x = 0; x < size(); ++x) out[x] = image_[other(x)];
  return ElementBijection(std::move(out));
}

std::vector<int> ElementBijection::fixed_points() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (image_[x] == x) out.push_back(x);
  return out;
}

std::vector<std::vector<int>> ElementBijection::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(image_.size(), 0);
  for (int x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    std::vector<int> orbit;
    for (int y = x; !seen[y]; y = image_[y]) {
      seen[y] = 1;
      orbit.push_back(y);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

bool ElementBijection::is_identity() const {
  for (int x = 0; x < size(); ++x)
    if (image_[x] != x) return false;
  return true;
}

}  // namespace echelon
