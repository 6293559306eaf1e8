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

#include "echelon/lattice.hpp"

#include <string>

#include "echelon/errors.hpp"

namespace echelon {
namespace {

// The element whose principal set equals `bounds`, or -1.
int generator_of(const std::vector<Bitset>& principal, const Bitset& bounds) {
  for (auto z = bounds.find_first(); z != Bitset::npos; z = bounds.find_next(z))
    if (principal[z] == bounds) return static_cast<int>(z);
  return -1;
}

}  // namespace

bool meet_semidistributive_by_definition(const Lattice& l) {
  const int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!l.leq(x, y)) continue;
      int top = l.bottom();
      for (int z = 0; z < n; ++z)
        if (l.meet(z, y) == x) top = l.join(top, z);
      if (l.meet(top, y) != x) return false;
    }
  return true;
}

bool meet_semidistributive_by_irreducibles(const Lattice& l) {
  for (int j : l.join_irreducibles()) {
    const Bitset u = upsilon(l, j);
    if (l.meet(l.join_of(u), j) != l.lower_cover(j)) return false;
  }
  return true;
}

Lattice::Lattice(Poset p) : poset_(std::move(p)) {
  const int n = poset_.size();
  if (n == 0) throw NotALatticeError("empty poset is not a lattice", -1, -1);
  std::vector<Bitset> downs(n), ups(n);
  for (int x = 0; x < n; ++x) {
    downs[x] = poset_.down_set(x);
    ups[x] = poset_.up_set(x);
  }
  meet_.assign(static_cast<std::size_t>(n) * n, -1);
  join_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      const int m = generator_of(downs, downs[x] & downs[y]);
      if (m < 0)
        throw NotALatticeError("elements " + poset_.name(x) + " and " + poset_.name(y) +
                                   " have no meet",
                               x, y);
      const int j = generator_of(ups, ups[x] & ups[y]);
      if (j < 0)
        throw NotALatticeError("elements " + poset_.name(x) + " and " + poset_.name(y) +
                                   " have no join",
                               x, y);
      meet_[index(x, y)] = meet_[index(y, x)] = m;
      join_[index(x, y)] = join_[index(y, x)] = j;
    }
  bottom_ = *poset_.minimum();
  top_ = *poset_.maximum();
  for (int x = 0; x < n; ++x) {
    if (is_join_irreducible(x)) join_irreducibles_.push_back(x);
    if (is_meet_irreducible(x)) meet_irreducibles_.push_back(x);
  }
}

int Lattice::meet_of(const Bitset& xs) const {
  int m = top_;
  for (auto z = xs.find_first(); z != Bitset::npos; z = xs.find_next(z))
    m = meet(m, static_cast<int>(z));
  return m;
}

int Lattice::join_of(const Bitset& xs) const {
  int j = bottom_;
  for (auto z = xs.find_first(); z != Bitset::npos; z = xs.find_next(z))
    j = join(j, static_cast<int>(z));
  return j;
}

int Lattice::lower_cover(int j) const {
  if (!is_join_irreducible(j))
    throw DomainError("lower_cover: " + poset_.name(j) + " is not join-irreducible");
  return poset_.covers_down(j).front();
}

int Lattice::upper_cover(int m) const {
  if (!is_meet_irreducible(m))
    throw DomainError("upper_cover: " + poset_.name(m) + " is not meet-irreducible");
  return poset_.covers_up(m).front();
}

Lattice Lattice::dual() const {
  Lattice d = *this;
  d.poset_ = poset_.dual();
  std::swap(d.meet_, d.join_);
  std::swap(d.bottom_, d.top_);
  std::swap(d.join_irreducibles_, d.meet_irreducibles_);
  return d;
}

Lattice as_lattice(const Poset& p) { return Lattice(p); }

bool is_lattice(const Poset& p) {
  try {
    Lattice l(p);
    return true;
  } catch (const NotALatticeError&) {
    return false;
  }
}

int popdown(const Lattice& l, int x) {
  int m = x;
  for (int c : l.poset().covers_down(x)) m = l.meet(m, c);
  return m;
}

Bitset upsilon(const Lattice& l, int x) {
  const int target = popdown(l, x);
  Bitset out(l.size());
  for (int z = 0; z < l.size(); ++z)
    if (l.meet(z, x) == target) out.set(z);
  return out;
}

std::vector<int> upsilon_maxima(const Lattice& l, int x) {
  const Bitset u = upsilon(l, x);
  std::vector<int> out;
  for (int z : bitset_elements(u)) {
    Bitset above = l.poset().up_set(z) & u;
    if (above.count() == 1) out.push_back(z);
  }
  return out;
}

bool is_meet_semidistributive(const Lattice& l) {
  const bool by_definition = meet_semidistributive_by_definition(l);
  if (by_definition != meet_semidistributive_by_irreducibles(l))
    throw InternalInconsistency("meet-semidistributivity: definition and criterion disagree");
  return by_definition;
}

bool is_join_semidistributive(const Lattice& l) { return is_meet_semidistributive(l.dual()); }

bool is_semidistributive(const Lattice& l) {
  return is_meet_semidistributive(l) && is_join_semidistributive(l);
}

bool is_distributive(const Lattice& l) {
  const int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

bool is_modular(const Lattice& l) {
  const int n = l.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!l.leq(a, b)) continue;
      for (int x = 0; x < n; ++x)
        if (l.join(a, l.meet(x, b)) != l.meet(l.join(a, x), b)) return false;
    }
  return true;
}

int canonical_edge_label(const Lattice& l, int x, int y) {
  if (!l.poset().covers(x, y))
    throw DomainError("canonical_edge_label: " + l.poset().name(x) + " < " + l.poset().name(y) +
                      " is not a cover");
  Bitset s(l.size());
  for (int z = 0; z < l.size(); ++z)
    if (l.join(z, x) == y) s.set(z);
  const int m = l.meet_of(s);
  if (!s[m])
    throw NotSemidistributiveError("canonical_edge_label: {z : z join " + l.poset().name(x) +
                                   " = " + l.poset().name(y) + "} has no minimum");
  return m;
}

LabelSets label_sets(const Lattice& l) {
  const int n = l.size();
  LabelSets sets{std::vector<Bitset>(n, Bitset(n)), std::vector<Bitset>(n, Bitset(n))};
  for (auto [x, y] : l.poset().cover_pairs()) {
    const int j = canonical_edge_label(l, x, y);
    sets.down[y].set(j);
    sets.up[x].set(j);
  }
  return sets;
}

ElementBijection barnard_rowmotion(const Lattice& l) {
  if (!is_semidistributive(l))
    throw NotSemidistributiveError("barnard_rowmotion: lattice is not semidistributive");
  const LabelSets sets = label_sets(l);
  std::map<Bitset, int> by_up;
  for (int w = 0; w < l.size(); ++w)
    if (!by_up.emplace(sets.up[w], w).second)
      throw InternalInconsistency("barnard_rowmotion: upward label sets are not distinct");
  std::vector<int> image(l.size());
  for (int w = 0; w < l.size(); ++w) {
    auto it = by_up.find(sets.down[w]);
    if (it == by_up.end())
      throw InternalInconsistency("barnard_rowmotion: no element has U = D(" +
                                  l.poset().name(w) + ")");
    image[w] = it->second;
    const std::vector<int> maxima = upsilon_maxima(l, w);
    if (maxima.size() != 1 || maxima.front() != image[w])
      throw InternalInconsistency("barnard_rowmotion: label matching and max upsilon disagree at " +
                                  l.poset().name(w));
  }
  return ElementBijection(std::move(image));
}

ElementBijection birkhoff_rowmotion(const Lattice& l) {
  if (!is_distributive(l)) throw DomainError("birkhoff_rowmotion: lattice is not distributive");
  const int n = l.size();
  Bitset irreducible(n);
  for (int j : l.join_irreducibles()) irreducible.set(j);
  const Poset& p = l.poset();
  std::vector<int> image(n);
  for (int x = 0; x < n; ++x) {
    const Bitset ideal = p.down_set(x) & irreducible;
    // Up-closure inside Q of the maximal elements of the ideal.
    Bitset blocked(n);
    for (int j : bitset_elements(ideal))
      if ((p.up_set(j) & ideal).count() == 1) blocked |= p.up_set(j);
    const Bitset complement = irreducible - blocked;
    const int y = l.join_of(complement);
    if ((p.down_set(y) & irreducible) != complement)
      throw InternalInconsistency("birkhoff_rowmotion: image ideal is not principal");
    image[x] = y;
  }
  return ElementBijection(std::move(image));
}

int max_extension_upsilon(const Lattice& l, const LinearExtension& sigma, int x) {
  return sigma.latest(upsilon(l, x));
}

std::map<int, std::pair<int, int>> dilworth_profile(const Lattice& l) {
  std::map<int, std::pair<int, int>> profile;
  for (int x = 0; x < l.size(); ++x) {
    ++profile[static_cast<int>(l.poset().covers_up(x).size())].first;
    ++profile[static_cast<int>(l.poset().covers_down(x).size())].second;
  }
  return profile;
}

}  // namespace echelon
