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

#ifndef ECHELON_EXACT_MATRIX_HPP
#define ECHELON_EXACT_MATRIX_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace echelon {

/// Dense row-major matrix of arbitrary-precision rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols);
  ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static ExactMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  mpq_class& operator()(int i, int j) { return data_[index(i, j)]; }
  const mpq_class& operator()(int i, int j) const { return data_[index(i, j)]; }

  ExactMatrix transpose() const;
  /// Rows [first_row, rows) and columns [0, last_col]; empty when out of range.
  ExactMatrix lower_left(int first_row, int last_col) const;

  bool is_upper_triangular() const;
  bool is_lower_triangular() const;
  bool is_integral() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Permutation matrix stored by columns: image[j] = i means entry (i, j) is 1.
class PermutationMatrix {
 public:
  PermutationMatrix() = default;
  explicit PermutationMatrix(std::vector<int> image);
  static PermutationMatrix identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  /// Row holding the 1 in column j.
  int row_of(int j) const { return image_[j]; }
  const std::vector<int>& image() const { return image_; }
  PermutationMatrix inverse() const;
  ExactMatrix to_matrix() const;

  friend bool operator==(const PermutationMatrix&, const PermutationMatrix&) = default;

 private:
  std::vector<int> image_;
};

/// M = left * permutation * right with both outer factors upper-triangular
/// and invertible.
struct BruhatCertificate {
  PermutationMatrix permutation;
  ExactMatrix left;
  ExactMatrix right;

  bool reproduces(const ExactMatrix& m) const;
};

/// Rank over Q by fraction-free (Bareiss) elimination on a working copy.
int rank(const ExactMatrix& m);

/// Bruhat decomposition by the bottom-most-pivot column sweep. Throws
/// SingularMatrixError when some column has no available pivot.
BruhatCertificate bruhat_permutation(const ExactMatrix& m);

/// Test oracle: the permutation read off the ranks of all lower-left
/// submatrices, O(n^5). Throws InternalInconsistency if the rank grid does not
/// select exactly one cell per row and column.
PermutationMatrix rank_grid_oracle(const ExactMatrix& m);

ExactMatrix inverse(const ExactMatrix& m);

/// Some solution of a * x = b (free variables set to zero), or nullopt when
/// the system is inconsistent.
std::optional<std::vector<mpq_class>> solve_any(const ExactMatrix& a, const std::vector<mpq_class>& b);

/// Pivot rows of columns 0..columns-1 of the Bruhat permutation, using column
/// operations only (rows untouched). Exact: integer fraction-free updates with
/// content removal. Requires integral entries.
std::vector<int> bruhat_column_pivots(const ExactMatrix& m, int columns);

/// Same sweep over the prime field F_p. Agrees with the rational answer unless
/// p divides some pivot, so it is only a prescreen.
std::vector<int> bruhat_column_pivots_mod_p(const ExactMatrix& m, int columns, std::uint32_t p);

inline constexpr std::array<std::uint32_t, 2> kPrescreenPrimes{2147483647u, 2147483629u};

struct ModPRank {
  int lower_bound = 0;     // max over primes; never exceeds the rational rank
  bool agreement = false;  // all primes returned the same rank
  std::vector<int> per_prime;
};

ModPRank mod_p_rank_prescreen(const ExactMatrix& m,
                              std::span<const std::uint32_t> primes = kPrescreenPrimes);

}  // namespace echelon

#endif  // ECHELON_EXACT_MATRIX_HPP
