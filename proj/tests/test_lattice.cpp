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

#include <set>

#include "echelon/echelon.hpp"
#include "echelon/generators.hpp"
#include "echelon/lattice.hpp"
#include "echelon/linear_extensions.hpp"
#include "echelon/trim.hpp"
#include "oracles.hpp"

using namespace echelon;

namespace {

int named(const Poset& p, const std::string& name) {
  for (int x = 0; x < p.size(); ++x)
    if (p.name(x) == name) return x;
  FAIL("no element named " << name);
  return -1;
}

Bitset named_set(const Poset& p, std::initializer_list<const char*> names) {
  Bitset b(p.size());
  for (const char* n : names) b.set(named(p, n));
  return b;
}

std::vector<Lattice> small_lattices(int max_n) {
  std::vector<Lattice> out;
  for (int n = 1; n <= max_n; ++n)
    for (const Poset& p : all_lattices(n)) out.emplace_back(p);
  return out;
}

// N5 indices: 0 = bottom, 1 = a, 2 = b, 3 = c, 4 = top, with a < b.
enum { kBot = 0, kA = 1, kB = 2, kC = 3, kTop = 4 };

}  // namespace

TEST_CASE("lattice recognition") {
  CHECK(is_lattice(r5_example()));
  CHECK(is_lattice(chain(4)));
  CHECK_THROWS_AS(Lattice(bruhat_symmetric(3)), NotALatticeError);
  CHECK_THROWS_AS(Lattice{Poset()}, NotALatticeError);
  CHECK_FALSE(is_lattice(v_poset()));
  try {
    Lattice l(antichain(2));
    FAIL("antichain accepted");
  } catch (const NotALatticeError& e) {
    CHECK(e.x() == 0);
    CHECK(e.y() == 1);
  }
}

TEST_CASE("meet, join and irreducibles on N5") {
  const Lattice l(n5());
  CHECK(l.meet(kB, kC) == kBot);
  CHECK(l.join(kA, kC) == kTop);
  CHECK(l.bottom() == kBot);
  CHECK(l.top() == kTop);
  CHECK(l.join_irreducibles() == std::vector<int>{kA, kB, kC});
  CHECK(l.meet_irreducibles() == std::vector<int>{kA, kB, kC});
  CHECK(l.lower_cover(kB) == kA);
  CHECK(l.upper_cover(kA) == kB);
  CHECK_THROWS_AS(l.lower_cover(kTop), DomainError);
  CHECK(l.meet_of(Bitset(5)) == kTop);
  CHECK(l.join_of(Bitset(5)) == kBot);
  const Lattice d = l.dual();
  CHECK(d.meet(kA, kC) == kTop);
  CHECK(d.bottom() == kTop);
}

TEST_CASE("popdown and upsilon") {
  for (const Lattice& l : {Lattice(n5()), Lattice(r5_example()), Lattice(m3())}) {
    CHECK(popdown(l, l.bottom()) == l.bottom());
    CHECK(upsilon(l, l.bottom()).count() == static_cast<std::size_t>(l.size()));
  }
  const Lattice n(n5());
  CHECK(popdown(n, kB) == kA);
  Bitset only_a(5);
  only_a.set(kA);
  CHECK(upsilon(n, kB) == only_a);

  const Poset w = weak_order_symmetric(3);
  const Lattice weak(w);
  const int s1 = named(w, "213");
  CHECK(upsilon(weak, s1) == named_set(w, {"123", "132", "312"}));
  CHECK(upsilon_maxima(weak, s1) == std::vector<int>{named(w, "312")});
}

TEST_CASE("semidistributivity, distributivity, modularity") {
  CHECK(is_semidistributive(Lattice(n5())));
  CHECK_FALSE(is_semidistributive(Lattice(m3())));
  CHECK_FALSE(is_meet_semidistributive(Lattice(m3())));
  CHECK(is_semidistributive(Lattice(r5_example())));
  CHECK(is_distributive(Lattice(r5_example())));
  CHECK(is_modular(Lattice(r5_example())));
  CHECK_FALSE(is_distributive(Lattice(m3())));
  CHECK(is_modular(Lattice(m3())));
  CHECK_FALSE(is_modular(Lattice(n5())));
  CHECK_FALSE(is_distributive(Lattice(n5())));
}

TEST_CASE("canonical edge labels") {
  const Lattice n(n5());
  CHECK(canonical_edge_label(n, kBot, kC) == kC);
  CHECK(canonical_edge_label(n, kB, kTop) == kC);
  for (int j : n.join_irreducibles()) CHECK(canonical_edge_label(n, n.lower_cover(j), j) == j);
  CHECK_THROWS_AS(canonical_edge_label(n, kBot, kB), DomainError);
  CHECK_THROWS_AS(canonical_edge_label(Lattice(m3()), 1, 4), NotSemidistributiveError);
}

TEST_CASE("Barnard rowmotion") {
  const Poset w = weak_order_symmetric(3);
  const ElementBijection row = barnard_rowmotion(Lattice(w));
  const std::pair<const char*, const char*> expected[] = {
      {"123", "321"}, {"213", "312"}, {"132", "231"}, {"231", "213"}, {"312", "132"}, {"321", "123"}};
  for (auto [from, to] : expected) CHECK(w.name(row(named(w, from))) == to);

  CHECK(barnard_rowmotion(Lattice(n5())) == ElementBijection({kTop, kC, kA, kB, kBot}));
  CHECK(barnard_rowmotion(Lattice(r5_example())) == ElementBijection({4, 2, 1, 0, 3}));
  CHECK_THROWS_AS(barnard_rowmotion(Lattice(m3())), NotSemidistributiveError);
}

TEST_CASE("Birkhoff rowmotion") {
  CHECK(birkhoff_rowmotion(Lattice(r5_example())) == ElementBijection({4, 2, 1, 0, 3}));
  CHECK(birkhoff_rowmotion(Lattice(chain(4))) == ElementBijection({3, 0, 1, 2}));
  CHECK(birkhoff_rowmotion(Lattice(boolean(2))) == ElementBijection({3, 2, 1, 0}));
  CHECK_THROWS_AS(birkhoff_rowmotion(Lattice(n5())), DomainError);
}

TEST_CASE("latest element of upsilon") {
  const Poset r = r5_example();
  const Lattice l(r);
  const LinearExtension s0(r, {0, 1, 2, 3, 4});
  CHECK(max_extension_upsilon(l, s0, 3) == 0);
  CHECK(max_extension_upsilon(l, s0, 0) == 4);
  const Lattice n(n5());
  const LinearExtension vertebral(n5(), {kBot, kC, kA, kB, kTop});
  CHECK(max_extension_upsilon(n, vertebral, kA) == kC);
}

TEST_CASE("Dilworth profiles") {
  using Profile = std::map<int, std::pair<int, int>>;
  CHECK(dilworth_profile(Lattice(m3())) == Profile{{0, {1, 1}}, {1, {3, 3}}, {3, {1, 1}}});
  CHECK(dilworth_profile(Lattice(chain(4)))[1] == std::pair{3, 3});
  CHECK(dilworth_profile(Lattice(n5())) == Profile{{0, {1, 1}}, {1, {3, 3}}, {2, {1, 1}}});
}

TEST_CASE("property: lattice tables agree with scanning for bounds") {
  for (const Lattice& l : small_lattices(7)) {
    const Poset& p = l.poset();
    for (int x = 0; x < l.size(); ++x)
      for (int y = 0; y < l.size(); ++y) {
        CHECK(l.meet(x, y) == oracle::meet(p, x, y));
        CHECK(l.join(x, y) == oracle::join(p, x, y));
      }
    for (int x = 0; x < l.size(); ++x) {
      Bitset below = p.down_set(x);
      below.reset(x);
      CHECK(l.is_join_irreducible(x) == (x != l.bottom() && l.join_of(below) != x));
    }
  }
}

TEST_CASE("property: enumeration counts") {
  const int posets[] = {1, 2, 5, 16, 63, 318};
  for (int n = 1; n <= 6; ++n) CHECK(all_posets(n).size() == static_cast<std::size_t>(posets[n - 1]));
  const int lattices[] = {1, 1, 1, 2, 5, 15, 53};
  for (int n = 1; n <= 7; ++n) CHECK(all_lattices(n).size() == static_cast<std::size_t>(lattices[n - 1]));
}

TEST_CASE("property: maximal elements of meet complements are meet-irreducible") {
  for (const Lattice& base : small_lattices(7))
    for (const Lattice& l : {base, base.dual()})
      for (auto [x, y] : l.poset().cover_pairs()) {
        Bitset s(l.size());
        for (int z = 0; z < l.size(); ++z)
          if (l.meet(z, y) == x) s.set(z);
        for (int z : bitset_elements(s))
          if ((l.poset().up_set(z) & s).count() == 1) CHECK(l.is_meet_irreducible(z));
      }
}

TEST_CASE("property: both semidistributivity routes agree on each side") {
  int semidistributive = 0;
  for (const Lattice& l : small_lattices(7)) {
    CHECK(meet_semidistributive_by_definition(l) == meet_semidistributive_by_irreducibles(l));
    const Lattice d = l.dual();
    CHECK(meet_semidistributive_by_definition(d) == meet_semidistributive_by_irreducibles(d));
    semidistributive += is_semidistributive(l);
  }
  CHECK(semidistributive > 0);
}

TEST_CASE("property: popdown Moebius values on semidistributive and trim lattices") {
  for (const Lattice& l : small_lattices(7)) {
    if (!is_semidistributive(l) && !is_trim(l)) continue;
    for (int x = 0; x < l.size(); ++x) {
      const long mu = oracle::mobius(l.poset(), popdown(l, x), x);
      CHECK((mu == 1 || mu == -1));
    }
  }
}

TEST_CASE("search: a lattice element whose popdown interval has Moebius value zero") {
  bool found = false;
  for (const Lattice& l : small_lattices(7)) {
    for (int x = 0; x < l.size() && !found; ++x)
      if (mobius(l.poset(), popdown(l, x), x) == 0) {
        found = true;
        CHECK_FALSE(is_semidistributive(l));
        CHECK_FALSE(is_trim(l));
        MESSAGE("first instance has " << l.size() << " elements, x = " << x);
      }
    if (found) break;
  }
  CHECK(found);
}

TEST_CASE("property: label sets are injective and form equal families") {
  for (const Lattice& l : small_lattices(7)) {
    if (!is_semidistributive(l)) continue;
    const LabelSets sets = label_sets(l);
    const std::set<Bitset> downs(sets.down.begin(), sets.down.end());
    const std::set<Bitset> ups(sets.up.begin(), sets.up.end());
    CHECK(downs.size() == static_cast<std::size_t>(l.size()));
    CHECK(ups.size() == static_cast<std::size_t>(l.size()));
    CHECK(downs == ups);
    const ElementBijection row = barnard_rowmotion(l);
    for (int w = 0; w < l.size(); ++w) CHECK(upsilon_maxima(l, w) == std::vector<int>{row(w)});
  }
}

TEST_CASE("property: echelonmotion is rowmotion on semidistributive lattices") {
  for (const Lattice& l : small_lattices(7)) {
    const Poset& p = l.poset();
    if (!is_semidistributive(l)) {
      CHECK_FALSE(is_echelon_independent_fast(p).independent);
      continue;
    }
    const ElementBijection row = barnard_rowmotion(l);
    for_each_linear_extension(p, [&](const LinearExtension& s) {
      CHECK(echelonmotion(p, s) == row);
      return true;
    });
  }
}

TEST_CASE("property: Birkhoff and Barnard rowmotion agree on distributive lattices") {
  for (const Poset& q : all_posets(4)) {
    const Lattice l(j_of_poset(q));
    REQUIRE(is_distributive(l));
    CHECK(birkhoff_rowmotion(l) == barnard_rowmotion(l));
  }
}

TEST_CASE("property: echelonmotion never lands after the latest element of upsilon") {
  for (const Lattice& l : small_lattices(7)) {
    const Poset& p = l.poset();
    bool all_nonzero = true;
    for (int x = 0; x < l.size(); ++x) all_nonzero = all_nonzero && mobius(p, popdown(l, x), x) != 0;
    for_each_linear_extension(p, [&](const LinearExtension& s) {
      const ElementBijection e = echelonmotion(p, s);
      std::vector<int> latest(l.size());
      for (int x = 0; x < l.size(); ++x) {
        latest[x] = max_extension_upsilon(l, s, x);
        if (mobius(p, popdown(l, x), x) != 0) CHECK(s.position(e(x)) <= s.position(latest[x]));
      }
      const std::set<int> distinct(latest.begin(), latest.end());
      if (all_nonzero && distinct.size() == latest.size()) CHECK(e.image() == latest);
      return true;
    });
  }
}

TEST_CASE("property: Dilworth symmetry and the cover-count conjecture on modular lattices") {
  int modular = 0;
  for (const Lattice& l : small_lattices(7)) {
    if (!is_modular(l)) continue;
    ++modular;
    for (const auto& [k, counts] : dilworth_profile(l)) CHECK(counts.first == counts.second);
    const Poset& p = l.poset();
    for_each_linear_extension(p, [&](const LinearExtension& s) {
      const ElementBijection e = echelonmotion(p, s);
      for (int x = 0; x < p.size(); ++x)
        CHECK(p.covers_up(e(x)).size() == p.covers_down(x).size());
      return true;
    });
  }
  CHECK(modular == 33);
}
