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

#include "echelon/macneille.hpp"

#include <map>
#include <string>

#include "echelon/errors.hpp"

namespace echelon {
namespace {

Bitset closure(const Poset& p, const Bitset& xs) { return lower_bounds(p, upper_bounds(p, xs)); }

// Elements with index < i.
Bitset below_index(int n, int i) {
  Bitset b(n);
  for (int k = 0; k < i; ++k) b.set(k);
  return b;
}

}  // namespace

Bitset upper_bounds(const Poset& p, const Bitset& xs) {
  Bitset out = p.full_set();
  for (auto x = xs.find_first(); x != Bitset::npos; x = xs.find_next(x))
    out &= p.up_set(static_cast<int>(x));
  return out;
}

Bitset lower_bounds(const Poset& p, const Bitset& xs) {
  Bitset out = p.full_set();
  for (auto x = xs.find_first(); x != Bitset::npos; x = xs.find_next(x))
    out &= p.down_set(static_cast<int>(x));
  return out;
}

std::vector<Bitset> macneille_cuts(const Poset& p) {
  const int n = p.size();
  std::vector<Bitset> prefixes(n + 1);
  for (int i = 0; i <= n; ++i) prefixes[i] = below_index(n, i);

  std::vector<Bitset> cuts;
  Bitset a = closure(p, p.empty_set());
  while (true) {
    cuts.push_back(a);
    bool advanced = false;
    for (int i = n - 1; i >= 0; --i) {
      if (a[i]) continue;
      Bitset seed = a & prefixes[i];
      seed.set(i);
      Bitset b = closure(p, seed);
      if ((b & prefixes[i]) == (a & prefixes[i])) {
        a = std::move(b);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return cuts;
}

Completion macneille_completion(const Poset& p) {
  std::vector<Bitset> cuts = macneille_cuts(p);
  const int m = static_cast<int>(cuts.size());
  std::map<Bitset, int> index;
  for (int c = 0; c < m; ++c) index.emplace(cuts[c], c);

  std::vector<int> embed(p.size());
  std::vector<std::string> names(m);
  for (int c = 0; c < m; ++c) names[c] = "cut" + std::to_string(c);
  for (int x = 0; x < p.size(); ++x) {
    auto it = index.find(p.down_set(x));
    if (it == index.end()) throw InternalInconsistency("macneille: principal down-set is not a cut");
    embed[x] = it->second;
    names[it->second] = p.name(x);
  }
  Poset order = Poset::from_relation(
      m, [&](int a, int b) { return cuts[a].is_subset_of(cuts[b]); }, std::move(names));
  Completion result{Lattice(std::move(order)), std::move(embed), std::move(cuts)};

  const Lattice& l = result.lattice;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != l.leq(result.embed[x], result.embed[y]))
        throw InternalInconsistency("macneille: embedding is not an order embedding");
  for (int c = 0; c < m; ++c) {
    Bitset below(m), above(m);
    for (int x : bitset_elements(result.cuts[c])) below.set(result.embed[x]);
    for (int u : bitset_elements(upper_bounds(p, result.cuts[c]))) above.set(result.embed[u]);
    if (l.join_of(below) != c || l.meet_of(above) != c)
      throw InternalInconsistency("macneille: element is not a join and meet of embedded elements");
  }
  return result;
}

}  // namespace echelon
