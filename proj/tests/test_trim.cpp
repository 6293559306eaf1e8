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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "echelon/echelon.hpp"
#include "echelon/errors.hpp"
#include "echelon/generators.hpp"
#include "echelon/lattice.hpp"
#include "echelon/linear_extensions.hpp"
#include "echelon/trim.hpp"

using namespace echelon;

namespace {

enum { kBot = 0, kA = 1, kB = 2, kC = 3, kTop = 4 };

std::vector<Lattice> trim_lattices(int max_n) {
  std::vector<Lattice> out;
  for (int n = 1; n <= max_n; ++n)
    for (const Poset& p : all_lattices(n)) {
      Lattice l(p);
      if (is_trim(l)) out.push_back(std::move(l));
    }
  return out;
}

bool acyclic(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<int> indegree(n, 0);
  for (auto [a, b] : arcs) ++indegree[b];
  std::vector<int> ready;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (auto [a, b] : arcs)
      if (a == v && --indegree[b] == 0) ready.push_back(b);
  }
  return seen == n;
}

Bitset set_of(int n, std::initializer_list<int> xs) {
  Bitset b(n);
  for (int x : xs) b.set(x);
  return b;
}

}  // namespace

TEST_CASE("trim recognition") {
  const Lattice n(n5());
  const auto t = trim_data(n);
  REQUIRE(t.has_value());
  CHECK(t->k() == 3);
  CHECK(t->chain == std::vector<int>{kBot, kA, kB, kTop});
  CHECK(is_extremal(n));

  const Lattice m(m3());
  CHECK_FALSE(is_extremal(m));
  CHECK_FALSE(is_trim(m));
  CHECK(longest_chain_length(m3()) == 2);

  CHECK(is_trim(Lattice(r5_example())));
  for (const Poset& q : all_posets(4)) CHECK(is_trim(Lattice(j_of_poset(q))));
  CHECK(left_modular_elements(n) == set_of(5, {kBot, kA, kB, kTop}));
}

TEST_CASE("gamma labels on N5") {
  const Lattice n(n5());
  const TrimData t = *trim_data(n);
  CHECK(t.gamma_of(kBot, kC) == 3);
  CHECK(t.label(kBot, kC) == kC);
  CHECK(t.gamma_of(kC, kTop) == 1);
  CHECK(t.label(kC, kTop) == kA);
  CHECK(gamma_label(n, t.chain, kC, kTop) == 1);
  for (int i = 1; i <= t.k(); ++i) CHECK(t.gamma_of(t.chain[i - 1], t.chain[i]) == i);
  CHECK(t.ji_seq == std::vector<int>{kA, kB, kC});
  CHECK(t.mi_seq == std::vector<int>{kC, kA, kB});
}

TEST_CASE("kappa and the Galois graph") {
  const TrimData t = *trim_data(Lattice(n5()));
  CHECK(t.kappa == std::map<int, int>{{kA, kC}, {kB, kA}, {kC, kB}});
  std::vector<std::pair<int, int>> arcs = t.galois_arcs;
  std::sort(arcs.begin(), arcs.end());
  CHECK(arcs == std::vector<std::pair<int, int>>{{kB, kA}, {kC, kB}});
  CHECK(count_galois_independent_sets(Lattice(n5()), t) == 5);
  CHECK(is_independent_in_galois_graph(t, set_of(5, {kA, kC})));
  CHECK_FALSE(is_independent_in_galois_graph(t, set_of(5, {kA, kB})));

  const Lattice c(chain(4));
  const TrimData tc = *trim_data(c);
  // Every later join-irreducible points at every earlier one.
  CHECK(tc.galois_arcs.size() == 3);
  CHECK(count_galois_independent_sets(c, tc) == 4);
  for (int i = 0; i < tc.k(); ++i) CHECK(tc.kappa.at(tc.ji_seq[i]) == tc.mi_seq[i]);
}

TEST_CASE("vertebral extensions") {
  const Lattice n(n5());
  const TrimData t = *trim_data(n);
  CHECK(t.words[kBot] == std::vector<int>{1, 3, 4});
  CHECK(t.words[kC] == std::vector<int>{1, 4});
  CHECK(t.words[kA] == std::vector<int>{2, 4});
  CHECK(t.words[kB] == std::vector<int>{3, 4});
  CHECK(t.words[kTop] == std::vector<int>{4});
  CHECK(vertebral_extension(n, t).order() == std::vector<int>{kBot, kC, kA, kB, kTop});

  const Lattice c(chain(5));
  CHECK(vertebral_extension(c, *trim_data(c)).order() == std::vector<int>{0, 1, 2, 3, 4});

  const Lattice t4(tamari(4));
  int chains = 0;
  for (const auto& chain : maximum_length_chains(t4.poset())) {
    const LinearExtension s = vertebral_extension(t4, trim_data_for_chain(t4, chain));
    CHECK(is_linear_extension(t4.poset(), s.order()));
    ++chains;
  }
  CHECK(chains > 1);
}

TEST_CASE("trim rowmotion") {
  const Lattice n(n5());
  const TrimData t = *trim_data(n);
  const ElementBijection row = trim_rowmotion(n, t);
  CHECK(row == ElementBijection({kTop, kC, kA, kB, kBot}));
  for (auto [j, m] : t.kappa) CHECK(row(j) == m);

  const Lattice r(r5_example());
  CHECK(trim_rowmotion(r, *trim_data(r)) == ElementBijection({4, 2, 1, 0, 3}));
  const Lattice c(chain(4));
  CHECK(trim_rowmotion(c, *trim_data(c)) == ElementBijection({3, 0, 1, 2}));
}

TEST_CASE("interval restriction") {
  const Lattice n(n5());
  const TrimData t = *trim_data(n);
  const IntervalTrim upper = interval_trim_restriction(n, t, kA, kTop);
  CHECK(upper.data.k() == 2);
  std::vector<int> chain;
  for (int c : upper.data.chain) chain.push_back(upper.sub.to_parent[c]);
  CHECK(chain == std::vector<int>{kA, kB, kTop});

  const IntervalTrim point = interval_trim_restriction(n, t, kC, kC);
  CHECK(point.data.chain.size() == 1);

  const Lattice r(r5_example());
  const IntervalTrim diamond = interval_trim_restriction(r, *trim_data(r), 0, 3);
  CHECK(diamond.lattice.size() == 4);
  CHECK(diamond.data.k() == 2);
}

TEST_CASE("errors") {
  const Lattice n(n5());
  CHECK_THROWS_AS(trim_data_for_chain(n, {kBot, kC, kTop}), DomainError);
  CHECK_THROWS_AS(maximum_length_chains(boolean(4), 5), CapacityError);
}

TEST_CASE("property: trim structure on small lattices") {
  for (const Lattice& l : trim_lattices(8)) {
    const TrimData canonical = *trim_data(l);
    CHECK(acyclic(l.size(), canonical.galois_arcs));
    CHECK(canonical.k() == static_cast<int>(l.join_irreducibles().size()));
    CHECK(canonical.k() == static_cast<int>(l.meet_irreducibles().size()));

    for (const auto& chain : maximum_length_chains(l.poset())) {
      const TrimData t = trim_data_for_chain(l, chain);
      for (auto [x, y] : l.poset().cover_pairs()) CHECK(t.label(x, y) == canonical.label(x, y));
      CHECK(t.kappa == canonical.kappa);
      for (int i = 1; i <= t.k(); ++i) {
        CHECK(l.join(t.ji_seq[i - 1], t.chain[i - 1]) == t.chain[i]);
        CHECK(l.meet(t.mi_seq[i - 1], t.chain[i]) == t.chain[i - 1]);
      }
      std::set<std::vector<int>> words;
      for (const auto& w : t.words) {
        CHECK(std::is_sorted(w.begin(), w.end()));
        CHECK(std::adjacent_find(w.begin(), w.end()) == w.end());
        CHECK(w.back() == t.k() + 1);
        words.insert(w);
      }
      CHECK(words.size() == static_cast<std::size_t>(l.size()));
    }

    const LabelSets sets = trim_label_sets(l, canonical);
    std::set<Bitset> downs, ups;
    for (int x = 0; x < l.size(); ++x) {
      Bitset kappa_up(l.size());
      for (int j : bitset_elements(sets.up[x])) kappa_up.set(canonical.kappa.at(j));
      CHECK(l.join_of(sets.down[x]) == x);
      CHECK(l.meet_of(kappa_up) == x);
      CHECK(is_independent_in_galois_graph(canonical, sets.down[x]));
      CHECK(is_independent_in_galois_graph(canonical, sets.up[x]));
      downs.insert(sets.down[x]);
      ups.insert(sets.up[x]);
    }
    CHECK(downs.size() == static_cast<std::size_t>(l.size()));
    CHECK(ups.size() == static_cast<std::size_t>(l.size()));
    CHECK(count_galois_independent_sets(l, canonical) == static_cast<std::uint64_t>(l.size()));
  }
}

TEST_CASE("property: vertebral echelonmotion is trim rowmotion") {
  std::vector<Lattice> lattices = trim_lattices(7);
  lattices.emplace_back(tamari(4));
  lattices.emplace_back(tamari(5));
  for (const Lattice& l : lattices) {
    for (const auto& chain : maximum_length_chains(l.poset())) {
      const TrimData t = trim_data_for_chain(l, chain);
      CHECK(echelonmotion(l.poset(), vertebral_extension(l, t)) == trim_rowmotion(l, t));
    }
  }
}

TEST_CASE("property: upper intervals inherit the vertebral order") {
  for (const Lattice& l : trim_lattices(8)) {
    const TrimData t = *trim_data(l);
    const LinearExtension s = vertebral_extension(l, t);
    for (int v = 0; v < l.size(); ++v) {
      const IntervalTrim up = interval_trim_restriction(l, t, v, l.top());
      std::vector<int> expected = up.sub.to_parent;
      std::sort(expected.begin(), expected.end(),
                [&](int a, int b) { return s.position(a) < s.position(b); });
      std::vector<int> got;
      const LinearExtension local = vertebral_extension(up.lattice, up.data);
      for (int c : local.order()) got.push_back(up.sub.to_parent[c]);
      CHECK(got == expected);
      for (int w : bitset_elements(l.poset().up_set(v))) interval_trim_restriction(l, t, v, w);
    }
  }
}

TEST_CASE("search: trim lattices that are not semidistributive") {
  int found = 0;
  for (int n = 1; n <= 8; ++n)
    for (const Poset& p : all_lattices(n)) {
      const Lattice l(p);
      if (!is_trim(l) || is_semidistributive(l)) continue;
      ++found;
      for (const auto& chain : maximum_length_chains(p)) {
        const TrimData t = trim_data_for_chain(l, chain);
        CHECK(echelonmotion(p, vertebral_extension(l, t)) == trim_rowmotion(l, t));
      }
      CHECK_FALSE(is_echelon_independent_fast(p).independent);
    }
  MESSAGE(found << " trim, non-semidistributive lattices with at most 8 elements");
  CHECK(found > 0);
}
