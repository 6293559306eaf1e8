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

#include <random>
#include <set>

#include "echelon/canonical.hpp"
#include "echelon/errors.hpp"
#include "echelon/generators.hpp"
#include "echelon/io.hpp"
#include "echelon/lattice.hpp"
#include "echelon/linear_extensions.hpp"
#include "echelon/suites.hpp"
#include "oracles.hpp"

using namespace echelon;

namespace {

std::vector<std::string> jsonl(const SuiteReport& r) {
  std::vector<std::string> out;
  for (const auto& i : r.instances) out.push_back(instance_to_json(r, i).dump());
  return out;
}

}  // namespace

TEST_CASE("named families") {
  const Poset b2 = boolean(2);
  CHECK(b2.size() == 4);
  CHECK(b2.cover_pairs().size() == 4);
  CHECK(isomorphic(tamari(3), n5()));
  const Poset s3 = bruhat_symmetric(3);
  CHECK(s3.size() == 6);
  CHECK_FALSE(is_lattice(s3));
  CHECK(is_lattice(weak_order_symmetric(3)));
  CHECK(subspace_lattice(2, 3).size() == 16);
  CHECK(product_of_chains(2, 3).size() == 6);
  CHECK(face_lattice_polygon(4).size() == 10);
  CHECK(j_of_poset(antichain(3)).size() == 8);

  const std::vector<int> catalan{1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) CHECK(tamari(n).size() == catalan[n - 1]);
}

TEST_CASE("enumerated families") {
  const std::vector<std::size_t> posets{1, 2, 5, 16, 63, 318};
  for (int n = 1; n <= 6; ++n) CHECK(all_posets(n).size() == posets[n - 1]);
  const std::vector<std::size_t> lattices{1, 1, 1, 2, 5, 15, 53, 222};
  for (int n = 1; n <= 8; ++n) CHECK(all_lattices(n).size() == lattices[n - 1]);
  const std::vector<std::size_t> connected{1, 1, 3, 10, 44, 238};
  for (int n = 1; n <= 6; ++n)
    CHECK(generate_scope("connected_posets:" + std::to_string(n)).size() == connected[n - 1]);
}

TEST_CASE("generator expressions") {
  CHECK(isomorphic(generate("boolean:3"), boolean(3)));
  CHECK(isomorphic(generate("n5"), n5()));
  const Poset sub = generate("subspace:2:3");
  CHECK(sub.size() == 16);
  CHECK(sub.cover_pairs().size() == subspace_lattice(2, 3).cover_pairs().size());
  CHECK_THROWS_AS(canonical_form(sub), CapacityError);
  CHECK(generate_scope("tamari:1..4").size() == 4);
  CHECK(generate_scope("boolean:2..3,polygon:3..5").size() == 5);
  CHECK(generate_scope("all_lattices:1..5").size() == 10);
  CHECK_THROWS_AS(generate("nosuchfamily:3"), InputError);
  CHECK_THROWS_AS(generate("boolean:x"), InputError);
  CHECK_THROWS_AS(generate_scope("tamari:4..2"), InputError);
}

TEST_CASE("the first extension of the Bruhat order is lex") {
  const Poset s6 = bruhat_symmetric(6);
  const LinearExtension first = first_linear_extension(s6);
  for (int k = 0; k < s6.size(); ++k) CHECK(first.at(k) == k);
  CHECK(s6.name(0) == "123456");
}

TEST_CASE("poset-v1 round trip") {
  std::vector<Poset> payloads{chain(1), antichain(3), n5(), r5_example(), tamari(4), boolean(3)};
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : all_posets(n)) payloads.push_back(p);
  for (const Poset& p : payloads) {
    const Poset back = read_poset(write_poset(p));
    CHECK(back.size() == p.size());
    for (int x = 0; x < p.size(); ++x) {
      CHECK(back.name(x) == p.name(x));
      for (int y = 0; y < p.size(); ++y) CHECK(back.leq(x, y) == p.leq(x, y));
    }
  }

  const Poset redundant = read_poset(R"({"format":"poset-v1","n":3,"covers":[[0,1],[1,2],[0,2]]})");
  CHECK(redundant.cover_pairs().size() == 2);
}

TEST_CASE("extension and bijection strings") {
  const Poset r = r5_example();
  const LinearExtension id = parse_extension(r, "1,2,3,4,5");
  CHECK(format_extension(id) == "1,2,3,4,5");
  const ElementBijection f = parse_bijection("5,3,2,1,4");
  CHECK(f == ElementBijection({4, 2, 1, 0, 3}));
  CHECK(format_bijection(f) == "5,3,2,1,4");

  std::mt19937_64 rng(31);
  const Poset t = tamari(4);
  for (int trial = 0; trial < 50; ++trial) {
    const LinearExtension s(t, oracle::random_extension(t, rng));
    CHECK(parse_extension(t, format_extension(s)).order() == s.order());
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(read_poset("not json"), ParseError);
  CHECK_THROWS_AS(read_poset(R"({"format":"poset-v2","n":1,"covers":[]})"), ParseError);
  CHECK_THROWS_AS(read_poset(R"({"format":"poset-v1","n":2,"covers":[[0,5]]})"), ParseError);
  CHECK_THROWS_AS(read_poset(R"({"format":"poset-v1","n":2,"covers":[[0,1],[1,0]]})"), InputError);
  CHECK_THROWS_AS(read_poset(R"({"format":"poset-v1","covers":[]})"), ParseError);
  const Poset r = r5_example();
  CHECK_THROWS_AS(parse_extension(r, "1,2,3"), InputError);
  CHECK_THROWS_AS(parse_extension(r, "2,1,3,4,5"), InputError);
  CHECK_THROWS_AS(parse_extension(r, "1,2,x,4,5"), InputError);
  CHECK_THROWS_AS(parse_bijection("1,1,2"), InputError);
}

TEST_CASE("suite runner") {
  CHECK(suite_names().size() >= 11);
  for (const std::string& name : suite_names()) CHECK_FALSE(default_scope(name).empty());
  CHECK_THROWS_AS(verify_suite("no-such-suite", "chain:3"), InputError);

  SuiteOptions serial;
  serial.jobs = 1;
  SuiteOptions parallel;
  parallel.jobs = 4;
  for (const char* suite : {"semidist", "bounded", "trim-vertebral"}) {
    const SuiteReport a = verify_suite(suite, default_scope(suite), serial);
    const SuiteReport b = verify_suite(suite, default_scope(suite), parallel);
    CHECK(a.passed());
    CHECK(jsonl(a) == jsonl(b));
  }

  const SuiteReport dist = verify_suite("distributive", "j_of_all:1..3");
  CHECK(dist.passed());
  CHECK(dist.applicable_count() == static_cast<int>(dist.instances.size()));
  const nlohmann::json summary = summary_to_json(dist);
  CHECK(summary.contains("seconds"));
  CHECK_FALSE(instance_to_json(dist, dist.instances[0]).contains("seconds"));

  SuiteOptions tight;
  tight.extension_cap = 10;
  CHECK_THROWS_AS(verify_suite("eulerian", "boolean:3", tight), CapacityError);
  tight.samples = 20;
  const SuiteReport sampled = verify_suite("eulerian", "boolean:3", tight);
  CHECK(sampled.passed());
  CHECK_FALSE(sampled.instances[0].exhaustive);

  SuiteOptions big;
  CHECK(arithmetic_for(chain(10), big) == Arithmetic::exact);
  CHECK(arithmetic_for(chain(70), big) == Arithmetic::prescreened);
  big.exact_only = true;
  CHECK(arithmetic_for(chain(70), big) == Arithmetic::exact);
}
