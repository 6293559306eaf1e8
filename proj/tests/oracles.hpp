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

// Slow reference implementations used only by the tests. None of these call
// into the library beyond reading the order relation.

#ifndef ECHELON_TESTS_ORACLES_HPP
#define ECHELON_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "echelon/poset.hpp"

namespace oracle {

using Grid = std::vector<std::vector<mpq_class>>;

// Rank by textbook Gaussian elimination over the rationals.
inline int rank(Grid a) {
  if (a.empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

// Rank of rows >= i, columns <= j (0-based, inclusive); 0 when empty.
inline int corner_rank(const Grid& m, int i, int j) {
  const int n = static_cast<int>(m.size());
  if (i >= n || j < 0) return 0;
  Grid sub;
  for (int r = i; r < n; ++r) sub.emplace_back(m[r].begin(), m[r].begin() + j + 1);
  return rank(sub);
}

// Bruhat permutation from the four-corner rank condition: image[j] = i iff
// the 1 of column j sits in row i.
inline std::vector<int> bruhat_by_ranks(const Grid& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> image(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int d = corner_rank(m, i, j) - corner_rank(m, i + 1, j) - corner_rank(m, i, j - 1) +
                    corner_rank(m, i + 1, j - 1);
      if (d == 1) image[j] = i;
    }
  return image;
}

// Cartan matrix written out from the order: entry (i,j) is 1 iff the element
// at position i is above the element at position j.
inline Grid cartan(const echelon::Poset& p, const std::vector<int>& order) {
  const int n = p.size();
  Grid w(n, std::vector<mpq_class>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(order[j], order[i])) w[i][j] = 1;
  return w;
}

// Echelonmotion through the rank-condition permutation.
inline std::vector<int> echelonmotion(const echelon::Poset& p, const std::vector<int>& order) {
  const std::vector<int> image = bruhat_by_ranks(cartan(p, order));
  std::vector<int> out(p.size());
  for (int j = 0; j < p.size(); ++j) out[order[j]] = order[image[j]];
  return out;
}

inline bool is_extension(const echelon::Poset& p, const std::vector<int>& order) {
  std::vector<int> pos(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && pos[x] > pos[y]) return false;
  return true;
}

// Every linear extension, by filtering all n! permutations.
inline std::vector<std::vector<int>> extensions(const echelon::Poset& p) {
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (is_extension(p, perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Moebius function by inverting the zeta matrix.
inline long mobius(const echelon::Poset& p, int x, int y) {
  const int n = p.size();
  Grid a(n, std::vector<mpq_class>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = p.leq(i, j) ? 1 : 0;
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    while (a[pivot][c] == 0) ++pivot;
    std::swap(a[c], a[pivot]);
    const mpq_class d = a[c][c];
    for (auto& v : a[c]) v /= d;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (int k = 0; k < 2 * n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  return a[x][n + y].get_num().get_si();
}

// Greatest lower bound by scanning, or -1.
inline int meet(const echelon::Poset& p, int x, int y) {
  for (int m = 0; m < p.size(); ++m) {
    if (!p.leq(m, x) || !p.leq(m, y)) continue;
    bool greatest = true;
    for (int z = 0; z < p.size() && greatest; ++z)
      if (p.leq(z, x) && p.leq(z, y) && !p.leq(z, m)) greatest = false;
    if (greatest) return m;
  }
  return -1;
}

inline int join(const echelon::Poset& p, int x, int y) { return meet(p.dual(), x, y); }

// Random poset: each pair i < j becomes a relation with probability `density`.
inline echelon::Poset random_poset(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<echelon::Cover> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  return echelon::Poset::from_covers(n, pairs);
}

// Random linear extension: repeatedly place a uniformly chosen minimal
// element of what remains.
inline std::vector<int> random_extension(const echelon::Poset& p, std::mt19937_64& rng) {
  std::vector<int> placed;
  std::vector<char> done(p.size(), 0);
  while (static_cast<int>(placed.size()) < p.size()) {
    std::vector<int> ready;
    for (int x = 0; x < p.size(); ++x) {
      if (done[x]) continue;
      bool ok = true;
      for (int y = 0; y < p.size() && ok; ++y)
        if (y != x && !done[y] && p.leq(y, x)) ok = false;
      if (ok) ready.push_back(x);
    }
    const int pick = ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng)];
    done[pick] = 1;
    placed.push_back(pick);
  }
  return placed;
}

}  // namespace oracle

#endif  // ECHELON_TESTS_ORACLES_HPP
