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

#include "echelon/errors.hpp"
#include "echelon/exact_matrix.hpp"
#include "oracles.hpp"

using namespace echelon;

namespace {

// The five-element Cartan matrix from the worked example.
ExactMatrix worked_w() {
  return {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {1, 1, 1, 1, 0}, {1, 1, 1, 1, 1}};
}

oracle::Grid to_grid(const ExactMatrix& m) {
  oracle::Grid g(m.rows(), std::vector<mpq_class>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
  return g;
}

ExactMatrix random_matrix(int n, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(lo, hi);
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

ExactMatrix random_invertible(int n, std::mt19937_64& rng) {
  while (true) {
    ExactMatrix m = random_matrix(n, -2, 2, rng);
    if (oracle::rank(to_grid(m)) == n) return m;
  }
}

ExactMatrix random_upper(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  ExactMatrix u(n, n);
  for (int i = 0; i < n; ++i) {
    int d = 0;
    while (d == 0) d = entry(rng);
    u(i, i) = d;
    for (int j = i + 1; j < n; ++j) u(i, j) = entry(rng);
  }
  return u;
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(ExactMatrix::identity(4)) == 4);
  CHECK(rank(ExactMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) == 1);
  const ExactMatrix corner = worked_w().lower_left(1, 3);
  CHECK(corner.rows() == 4);
  CHECK(corner.cols() == 4);
  CHECK(rank(corner) == oracle::rank(to_grid(corner)));
  CHECK(rank(corner) == 3);
  CHECK(rank(ExactMatrix(0, 0)) == 0);
}

TEST_CASE("Bruhat permutation of the worked example") {
  const ExactMatrix w = worked_w();
  const BruhatCertificate cert = bruhat_permutation(w);
  // Ones at (row, column) = (1,4), (2,3), (3,2), (4,5), (5,1), 1-based.
  CHECK(cert.permutation.image() == std::vector<int>{4, 2, 1, 0, 3});
  CHECK(cert.reproduces(w));
  CHECK(cert.left.is_upper_triangular());
  CHECK(cert.right.is_upper_triangular());
  CHECK(rank_grid_oracle(w) == cert.permutation);

  // The printed factorization multiplies out to W.
  const ExactMatrix u1{{1, 1, 1, 1, 1}, {0, 1, 0, 1, 1}, {0, 0, 1, 1, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
  const ExactMatrix u2{
      {1, 1, 1, 1, 1}, {0, -1, 0, -1, 0}, {0, 0, -1, -1, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, -1}};
  CHECK(u1 * cert.permutation.to_matrix() * u2 == w);
}

TEST_CASE("Bruhat permutation of permutation matrices") {
  const BruhatCertificate id = bruhat_permutation(ExactMatrix::identity(4));
  CHECK(id.permutation == PermutationMatrix::identity(4));
  CHECK(id.left == ExactMatrix::identity(4));
  CHECK(id.right == ExactMatrix::identity(4));

  const PermutationMatrix q({2, 0, 3, 1});
  CHECK(bruhat_permutation(q.to_matrix()).permutation == q);
  const PermutationMatrix anti({3, 2, 1, 0});
  CHECK(rank_grid_oracle(anti.to_matrix()) == anti);
  CHECK(rank_grid_oracle(ExactMatrix::identity(3)) == PermutationMatrix::identity(3));
}

TEST_CASE("singular input") {
  const ExactMatrix s{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(bruhat_permutation(s), SingularMatrixError);
  CHECK_THROWS_AS(inverse(s), SingularMatrixError);
  CHECK_THROWS_AS(bruhat_column_pivots_mod_p(s, 2, kPrescreenPrimes[0]), SingularMatrixError);
}

TEST_CASE("inverse") {
  CHECK(inverse(ExactMatrix::identity(3)) == ExactMatrix::identity(3));
  const ExactMatrix chain_w{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
  CHECK(inverse(chain_w) == ExactMatrix{{1, 0, 0}, {-1, 1, 0}, {0, -1, 1}});
  CHECK(inverse(worked_w())(4, 0) == 0);
  CHECK(inverse(worked_w()) * worked_w() == ExactMatrix::identity(5));
}

TEST_CASE("solve_any") {
  const ExactMatrix a{{1, 1, 0}, {0, 1, 1}};
  const auto x = solve_any(a, {2, 3});
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[1] == 2);
  CHECK((*x)[1] + (*x)[2] == 3);
  CHECK_FALSE(solve_any(ExactMatrix{{1, 1}, {1, 1}}, {1, 2}).has_value());
}

TEST_CASE("mod-p rank prescreen") {
  const ModPRank id = mod_p_rank_prescreen(ExactMatrix::identity(4));
  CHECK(id.lower_bound == 4);
  CHECK(id.agreement);
  const ModPRank ones = mod_p_rank_prescreen(ExactMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(ones.lower_bound == 1);
  CHECK(ones.agreement);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const ExactMatrix m = random_matrix(2 + trial % 6, 0, 1, rng);
    const int exact = oracle::rank(to_grid(m));
    const ModPRank r = mod_p_rank_prescreen(m);
    for (int k : r.per_prime) CHECK(k <= exact);
    CHECK(r.lower_bound <= exact);
  }
}

TEST_CASE("property: Bruhat permutation agrees with the rank-grid oracles") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 5;
    const ExactMatrix m = random_invertible(n, rng);
    const BruhatCertificate cert = bruhat_permutation(m);
    CHECK(cert.permutation == rank_grid_oracle(m));
    CHECK(cert.permutation.image() == oracle::bruhat_by_ranks(to_grid(m)));
    CHECK(cert.reproduces(m));
  }
}

TEST_CASE("property: the permutation is unique and inverts with the matrix") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const ExactMatrix m = random_invertible(n, rng);
    const PermutationMatrix p = bruhat_permutation(m).permutation;
    const ExactMatrix refactored = random_upper(n, rng) * p.to_matrix() * random_upper(n, rng);
    CHECK(bruhat_permutation(refactored).permutation == p);
    CHECK(bruhat_permutation(inverse(m)).permutation == p.inverse());
  }
}

TEST_CASE("property: modular pivots agree with exact pivots on integer matrices") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    const ExactMatrix m = random_invertible(n, rng);
    const std::vector<int> exact = bruhat_column_pivots(m, n);
    CHECK(exact == bruhat_permutation(m).permutation.image());
    for (std::uint32_t p : kPrescreenPrimes) {
      try {
        CHECK(bruhat_column_pivots_mod_p(m, n, p) == exact);
      } catch (const SingularMatrixError&) {
        // The determinant vanished mod p; the exact path is the fallback.
      }
    }
  }
}
