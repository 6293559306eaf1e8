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

#include "echelon/trim.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "echelon/errors.hpp"
#include "echelon/linear_extensions.hpp"

namespace echelon {
namespace {

// Cover steps from the bottom (up = false) or to the top (up = true) along a
// longest path.
std::vector<int> heights(const Poset& p, bool to_top) {
  const LinearExtension order = first_linear_extension(p);
  const int n = p.size();
  std::vector<int> h(n, 0);
  for (int k = 0; k < n; ++k) {
    const int x = to_top ? order.at(n - 1 - k) : order.at(k);
    const auto& nbrs = to_top ? p.covers_up(x) : p.covers_down(x);
    for (int c : nbrs) h[x] = std::max(h[x], h[c] + 1);
  }
  return h;
}

bool acyclic(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> out(n);
  for (auto [a, b] : arcs) {
    out[a].push_back(b);
    ++indegree[b];
  }
  std::vector<int> ready;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : out[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return seen == n;
}

// Index-lexicographically least saturated chain bottom -> top inside `allowed`
// with exactly `length` covers.
std::optional<std::vector<int>> least_chain_within(const Lattice& l, const Bitset& allowed,
                                                   int length) {
  const Poset& p = l.poset();
  const std::vector<int> up = heights(p, true);
  std::vector<int> chain{l.bottom()};
  std::function<bool(int)> extend = [&](int x) {
    if (x == l.top()) return static_cast<int>(chain.size()) - 1 == length;
    for (int y : p.covers_up(x)) {
      if (!allowed[y] || up[y] < length - static_cast<int>(chain.size())) continue;
      chain.push_back(y);
      if (extend(y)) return true;
      chain.pop_back();
    }
    return false;
  };
  if (!allowed[l.bottom()]) return std::nullopt;
  if (extend(l.bottom())) return chain;
  return std::nullopt;
}

bool saturated_chain_within(const Lattice& l, const Bitset& allowed) {
  if (!allowed[l.bottom()]) return false;
  Bitset reached(l.size());
  reached.set(l.bottom());
  std::vector<int> stack{l.bottom()};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : l.poset().covers_up(x))
      if (allowed[y] && !reached[y]) {
        reached.set(y);
        stack.push_back(y);
      }
  }
  return reached[l.top()];
}

}  // namespace

int TrimData::gamma_of(int x, int y) const {
  auto it = gamma.find({x, y});
  if (it == gamma.end()) throw DomainError("gamma: not a cover relation");
  return it->second;
}

int longest_chain_length(const Poset& p) {
  if (p.size() == 0) return 0;
  const std::vector<int> h = heights(p, false);
  return *std::max_element(h.begin(), h.end());
}

bool is_extremal(const Lattice& l) {
  const int k = longest_chain_length(l.poset());
  return static_cast<int>(l.join_irreducibles().size()) == k &&
         static_cast<int>(l.meet_irreducibles().size()) == k;
}

Bitset left_modular_elements(const Lattice& l) {
  const int n = l.size();
  Bitset out(n);
  for (int x = 0; x < n; ++x) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y)
      for (int z : bitset_elements(l.poset().up_set(y)))
        if (l.meet(l.join(y, x), z) != l.join(y, l.meet(x, z))) {
          ok = false;
          break;
        }
    if (ok) out.set(x);
  }
  return out;
}

std::vector<std::vector<int>> maximum_length_chains(const Poset& p, std::uint64_t cap) {
  std::vector<std::vector<int>> chains;
  const auto bottom = p.minimum();
  const auto top = p.maximum();
  if (!bottom || !top) throw DomainError("maximum_length_chains: poset is not bounded");
  const std::vector<int> down = heights(p, false);
  const std::vector<int> up = heights(p, true);
  const int length = down[*top];
  std::vector<int> chain{*bottom};
  std::function<void(int)> extend = [&](int x) {
    if (x == *top) {
      if (chains.size() >= cap)
        throw CapacityError("maximum_length_chains: more than " + std::to_string(cap) + " chains");
      chains.push_back(chain);
      return;
    }
    for (int y : p.covers_up(x)) {
      if (down[y] != down[x] + 1 || down[y] + up[y] != length) continue;
      chain.push_back(y);
      extend(y);
      chain.pop_back();
    }
  };
  extend(*bottom);
  return chains;
}

int gamma_label(const Lattice& l, const std::vector<int>& chain, int x, int y) {
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (l.leq(y, l.join(chain[i], x))) return static_cast<int>(i);
  throw DomainError("gamma_label: no chain element reaches the upper end of the cover");
}

TrimData trim_data_for_chain(const Lattice& l, const std::vector<int>& chain) {
  const Poset& p = l.poset();
  const int k = static_cast<int>(l.join_irreducibles().size());
  if (static_cast<int>(chain.size()) != k + 1 ||
      static_cast<int>(l.meet_irreducibles().size()) != k || chain.front() != l.bottom() ||
      chain.back() != l.top())
    throw DomainError("trim_data_for_chain: not a maximum-length chain of an extremal lattice");
  for (int i = 1; i <= k; ++i)
    if (!p.covers(chain[i - 1], chain[i]))
      throw DomainError("trim_data_for_chain: chain is not saturated");

  TrimData t;
  t.chain = chain;
  for (int i = 1; i <= k; ++i) {
    std::vector<int> js, ms;
    for (int j : l.join_irreducibles())
      if (l.join(j, chain[i - 1]) == chain[i]) js.push_back(j);
    for (int m : l.meet_irreducibles())
      if (l.meet(m, chain[i]) == chain[i - 1]) ms.push_back(m);
    if (js.size() != 1 || ms.size() != 1)
      throw InternalInconsistency("trim: chain step " + std::to_string(i) +
                                  " does not determine a unique j_i and m_i");
    t.ji_seq.push_back(js.front());
    t.mi_seq.push_back(ms.front());
    t.kappa[js.front()] = ms.front();
  }
  if (t.kappa.size() != static_cast<std::size_t>(k))
    throw InternalInconsistency("trim: j_i are not distinct");

  for (auto [x, y] : p.cover_pairs()) t.gamma[{x, y}] = gamma_label(l, chain, x, y);

  std::map<int, int> vertex;
  for (int j : l.join_irreducibles()) vertex.emplace(j, static_cast<int>(vertex.size()));
  std::vector<std::pair<int, int>> compact;
  for (int j : l.join_irreducibles())
    for (int j2 : l.join_irreducibles())
      if (j != j2 && !l.leq(j, t.kappa.at(j2))) {
        t.galois_arcs.emplace_back(j, j2);
        compact.emplace_back(vertex[j], vertex[j2]);
      }
  if (!acyclic(k, compact)) throw InternalInconsistency("trim: Galois graph has a cycle");

  t.words.resize(l.size());
  for (int u = 0; u < l.size(); ++u) {
    auto& w = t.words[u];
    for (int y : p.covers_up(u)) w.push_back(t.gamma.at({u, y}));
    w.push_back(k + 1);
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end())
      throw InternalInconsistency("trim: repeated gamma label among upper covers");
  }
  return t;
}

std::optional<TrimData> trim_data(const Lattice& l) {
  if (!is_extremal(l)) return std::nullopt;
  const int k = longest_chain_length(l.poset());
  const Bitset lm = left_modular_elements(l);
  if (!saturated_chain_within(l, lm)) return std::nullopt;
  if (auto chain = least_chain_within(l, lm, k)) return trim_data_for_chain(l, *chain);
  return trim_data_for_chain(l, maximum_length_chains(l.poset(), 1).front());
}

bool is_trim(const Lattice& l) { return trim_data(l).has_value(); }

LabelSets trim_label_sets(const Lattice& l, const TrimData& t) {
  const int n = l.size();
  LabelSets sets{std::vector<Bitset>(n, Bitset(n)), std::vector<Bitset>(n, Bitset(n))};
  for (auto [x, y] : l.poset().cover_pairs()) {
    const int j = t.label(x, y);
    sets.down[y].set(j);
    sets.up[x].set(j);
  }
  return sets;
}

bool is_independent_in_galois_graph(const TrimData& t, const Bitset& js) {
  for (auto [a, b] : t.galois_arcs)
    if (js[a] && js[b]) return false;
  return true;
}

std::uint64_t count_galois_independent_sets(const Lattice& l, const TrimData& t) {
  const std::vector<int>& js = l.join_irreducibles();
  if (js.size() > 30) throw CapacityError("count_galois_independent_sets: too many vertices");
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << js.size()); ++mask) {
    Bitset s(l.size());
    for (std::size_t b = 0; b < js.size(); ++b)
      if (mask >> b & 1) s.set(js[b]);
    if (is_independent_in_galois_graph(t, s)) ++count;
  }
  return count;
}

LinearExtension vertebral_extension(const Lattice& l, const TrimData& t) {
  std::vector<int> order(l.size());
  for (int x = 0; x < l.size(); ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return t.words[a] < t.words[b]; });
  for (int k = 1; k < l.size(); ++k)
    if (t.words[order[k - 1]] == t.words[order[k]])
      throw InternalInconsistency("vertebral_extension: two elements share a word");
  if (!is_linear_extension(l.poset(), order))
    throw InternalInconsistency("vertebral_extension: word order is not a linear extension");
  return LinearExtension(l.poset(), std::move(order));
}

ElementBijection trim_rowmotion(const Lattice& l, const TrimData& t) {
  const LabelSets sets = trim_label_sets(l, t);
  std::map<Bitset, int> by_up;
  for (int w = 0; w < l.size(); ++w)
    if (!by_up.emplace(sets.up[w], w).second)
      throw InternalInconsistency("trim_rowmotion: upward label sets are not distinct");
  std::vector<int> image(l.size());
  for (int x = 0; x < l.size(); ++x) {
    auto it = by_up.find(sets.down[x]);
    if (it == by_up.end())
      throw InternalInconsistency("trim_rowmotion: no element has U = D(" + l.poset().name(x) +
                                  ")");
    image[x] = it->second;
    const auto maxima = upsilon_maxima(l, x);
    if (std::find(maxima.begin(), maxima.end(), image[x]) == maxima.end())
      throw InternalInconsistency("trim_rowmotion: image is not a maximal element of upsilon");
  }
  for (auto [j, m] : t.kappa)
    if (image[j] != m) throw InternalInconsistency("trim_rowmotion: disagrees with kappa");
  return ElementBijection(std::move(image));
}

IntervalTrim interval_trim_restriction(const Lattice& l, const TrimData& t, int v, int w) {
  Subposet sub = interval(l.poset(), v, w);
  Lattice lw(sub.poset);
  std::vector<int> chain;
  for (int u : t.chain) {
    const int c = sub.to_child(l.meet(l.join(v, u), w));
    if (chain.empty() || chain.back() != c) chain.push_back(c);
  }
  TrimData local = trim_data_for_chain(lw, chain);

  std::set<int> labels;
  for (auto [x, y] : sub.poset.cover_pairs())
    labels.insert(t.gamma_of(sub.to_parent[x], sub.to_parent[y]));
  if (static_cast<int>(labels.size()) != local.k())
    throw InternalInconsistency("interval_trim_restriction: label count differs from k'");
  std::map<int, int> phi;
  for (int g : labels) phi.emplace(g, static_cast<int>(phi.size()) + 1);
  for (auto [x, y] : sub.poset.cover_pairs())
    if (local.gamma_of(x, y) != phi.at(t.gamma_of(sub.to_parent[x], sub.to_parent[y])))
      throw InternalInconsistency("interval_trim_restriction: gamma relabeling law fails");
  return {std::move(sub), std::move(lw), std::move(local)};
}

}  // namespace echelon
