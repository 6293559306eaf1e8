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

#include "echelon/exact_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "echelon/errors.hpp"

namespace echelon {

ExactMatrix::ExactMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be non-negative");
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw InputError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::lower_left(int first_row, int last_col) const {
  const int r0 = std::clamp(first_row, 0, rows_);
  const int c1 = std::clamp(last_col + 1, 0, cols_);
  ExactMatrix s(rows_ - r0, c1);
  for (int i = r0; i < rows_; ++i)
    for (int j = 0; j < c1; ++j) s(i - r0, j) = (*this)(i, j);
  return s;
}

bool ExactMatrix::is_upper_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < std::min(i, cols_); ++j)
      if (sgn((*this)(i, j)) != 0) return false;
  return true;
}

bool ExactMatrix::is_lower_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0) return false;
  return true;
}

bool ExactMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const mpq_class& q) { return q.get_den() == 1; });
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
  ExactMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const mpq_class& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

ExactMatrix operator-(const ExactMatrix& a) {
  ExactMatrix m(a);
  for (auto& v : m.data_) v = -v;
  return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
  for (int i = 0; i < m.rows_; ++i) {
    for (int j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os;
}

PermutationMatrix::PermutationMatrix(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (int i : image_) {
    if (i < 0 || i >= size() || hit[i]) throw InputError("not a permutation");
    hit[i] = 1;
  }
}

PermutationMatrix PermutationMatrix::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return PermutationMatrix(std::move(id));
}

PermutationMatrix PermutationMatrix::inverse() const {
  std::vector<int> inv(image_.size());
  for (int j = 0; j < size(); ++j) inv[image_[j]] = j;
  return PermutationMatrix(std::move(inv));
}

ExactMatrix PermutationMatrix::to_matrix() const {
  ExactMatrix m(size(), size());
  for (int j = 0; j < size(); ++j) m(image_[j], j) = 1;
  return m;
}

bool BruhatCertificate::reproduces(const ExactMatrix& m) const {
  return left.is_upper_triangular() && right.is_upper_triangular() &&
         left * permutation.to_matrix() * right == m;
}

int rank(const ExactMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  // Clear denominators row by row; scaling rows preserves rank.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }

  int r = 0;
  mpz_class previous = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(a[i][c]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = a[r][c];
    ++r;
  }
  return r;
}

BruhatCertificate bruhat_permutation(const ExactMatrix& m) {
  if (!m.is_square()) throw InputError("bruhat_permutation: matrix must be square");
  const int n = m.rows();
  ExactMatrix a(m);
  ExactMatrix row_ops = ExactMatrix::identity(n);  // E with E*M*F = P*D
  ExactMatrix col_ops = ExactMatrix::identity(n);  // F
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);

  for (int j = 0; j < n; ++j) {
    int pivot = -1;
    for (int i = n - 1; i >= 0; --i)
      if (!used[i] && sgn(a(i, j)) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0)
      throw SingularMatrixError("bruhat_permutation: no pivot in column " + std::to_string(j));
    image[j] = pivot;
    used[pivot] = 1;
    const mpq_class d = a(pivot, j);

    for (int r = 0; r < pivot; ++r) {
      if (sgn(a(r, j)) == 0) continue;
      const mpq_class f = a(r, j) / d;
      for (int c = 0; c < n; ++c) {
        if (sgn(a(pivot, c)) != 0) a(r, c) -= f * a(pivot, c);
        if (sgn(row_ops(pivot, c)) != 0) row_ops(r, c) -= f * row_ops(pivot, c);
      }
    }
    for (int c = j + 1; c < n; ++c) {
      if (sgn(a(pivot, c)) == 0) continue;
      const mpq_class g = a(pivot, c) / d;
      for (int r = 0; r < n; ++r) {
        if (sgn(a(r, j)) != 0) a(r, c) -= g * a(r, j);
        if (sgn(col_ops(r, j)) != 0) col_ops(r, c) -= g * col_ops(r, j);
      }
    }
  }

  ExactMatrix diag(n, n);
  for (int j = 0; j < n; ++j) diag(j, j) = a(image[j], j);

  BruhatCertificate cert{PermutationMatrix(std::move(image)), inverse(row_ops),
                         diag * inverse(col_ops)};
#ifdef ECHELON_CHECKED
  if (!cert.reproduces(m))
    throw InternalInconsistency("bruhat_permutation: certificate does not multiply back");
#endif
  return cert;
}

PermutationMatrix rank_grid_oracle(const ExactMatrix& m) {
  if (!m.is_square()) throw InputError("rank_grid_oracle: matrix must be square");
  const int n = m.rows();
  // grid[i][j] = rank of rows >= i, cols < j  (i in 0..n, j in 0..n).
  std::vector<std::vector<int>> grid(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= n; ++j) grid[i][j] = rank(m.lower_left(i, j - 1));

  std::vector<int> image(n, -1);
  std::vector<int> row_hits(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int full = grid[i][j + 1];
      if (grid[i + 1][j] == full - 1 && grid[i + 1][j + 1] == full - 1 && grid[i][j] == full - 1) {
        if (image[j] != -1)
          throw InternalInconsistency("rank grid selects two cells in column " + std::to_string(j));
        image[j] = i;
        ++row_hits[i];
      }
    }
  }
  for (int k = 0; k < n; ++k)
    if (image[k] == -1 || row_hits[k] != 1)
      throw InternalInconsistency("rank grid does not select a permutation (singular input?)");
  return PermutationMatrix(std::move(image));
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw InputError("inverse: matrix must be square");
  const int n = m.rows();
  ExactMatrix a(m);
  ExactMatrix inv = ExactMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (sgn(a(r, c)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularMatrixError("inverse: matrix is singular");
    if (pivot != c)
      for (int k = 0; k < n; ++k) {
        std::swap(a(pivot, k), a(c, k));
        std::swap(inv(pivot, k), inv(c, k));
      }
    const mpq_class d = a(c, c);
    for (int k = 0; k < n; ++k) {
      a(c, k) /= d;
      inv(c, k) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || sgn(a(r, c)) == 0) continue;
      const mpq_class f = a(r, c);
      for (int k = 0; k < n; ++k) {
        if (sgn(a(c, k)) != 0) a(r, k) -= f * a(c, k);
        if (sgn(inv(c, k)) != 0) inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

std::optional<std::vector<mpq_class>> solve_any(const ExactMatrix& a,
                                                const std::vector<mpq_class>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw InputError("solve_any: size mismatch");
  const int rows = a.rows();
  const int cols = a.cols();
  ExactMatrix aug(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug(i, j) = a(i, j);
    aug(i, cols) = b[i];
  }
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(aug(i, c)) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int k = 0; k <= cols; ++k) std::swap(aug(pivot, k), aug(r, k));
    const mpq_class d = aug(r, c);
    for (int k = c; k <= cols; ++k) aug(r, k) /= d;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(aug(i, c)) == 0) continue;
      const mpq_class f = aug(i, c);
      for (int k = c; k <= cols; ++k)
        if (sgn(aug(r, k)) != 0) aug(i, k) -= f * aug(r, k);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (sgn(aug(i, cols)) != 0) return std::nullopt;
  std::vector<mpq_class> x(cols);
  for (int k = 0; k < r; ++k) x[pivot_cols[k]] = aug(k, cols);
  return x;
}

namespace {

void require_integral_columns(const ExactMatrix& m, int columns) {
  if (!m.is_square()) throw InputError("pivot sweep: matrix must be square");
  if (columns < 0 || columns > m.cols()) throw InputError("pivot sweep: column count out of range");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < columns; ++j)
      if (m(i, j).get_den() != 1) throw InputError("pivot sweep: entries must be integers");
}

int bottom_nonzero(const std::vector<mpz_class>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    if (sgn(v[i]) != 0) return i;
  return -1;
}

void remove_content(std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : v)
      if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::vector<int> bruhat_column_pivots(const ExactMatrix& m, int columns) {
  require_integral_columns(m, columns);
  const int n = m.rows();
  std::vector<std::vector<mpz_class>> reduced;  // one per processed column
  std::vector<int> owner(n, -1);               // row -> reduced column with that bottom pivot
  std::vector<int> pivots;
  reduced.reserve(columns);
  for (int j = 0; j < columns; ++j) {
    std::vector<mpz_class> v(n);
    for (int i = 0; i < n; ++i) v[i] = m(i, j).get_num();
    int r = bottom_nonzero(v);
    while (r >= 0 && owner[r] >= 0) {
      const auto& w = reduced[owner[r]];
      // v <- w[r] * v - v[r] * w; both vanish below r.
      const mpz_class a = w[r];
      const mpz_class b = v[r];
      for (int i = 0; i <= r; ++i) {
        if (sgn(v[i]) != 0) v[i] *= a;
        if (sgn(w[i]) != 0) v[i] -= b * w[i];
      }
      remove_content(v);
      r = bottom_nonzero(v);
    }
    if (r < 0)
      throw SingularMatrixError("pivot sweep: column " + std::to_string(j) +
                                " is dependent on earlier columns");
    owner[r] = j;
    pivots.push_back(r);
    reduced.push_back(std::move(v));
  }
  return pivots;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t to_field(const mpq_class& q, std::uint32_t p) {
  if (q.get_den() != 1) throw InputError("mod-p reduction requires integer entries");
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), q.get_num_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

std::vector<int> bruhat_column_pivots_mod_p(const ExactMatrix& m, int columns, std::uint32_t p) {
  require_integral_columns(m, columns);
  const int n = m.rows();
  std::vector<std::vector<std::uint64_t>> reduced;  // normalized: w[pivot] == 1
  std::vector<int> owner(n, -1);
  std::vector<int> pivots;
  reduced.reserve(columns);
  for (int j = 0; j < columns; ++j) {
    std::vector<std::uint64_t> v(n);
    for (int i = 0; i < n; ++i) v[i] = to_field(m(i, j), p);
    int r = n - 1;
    while (r >= 0 && v[r] == 0) --r;
    while (r >= 0 && owner[r] >= 0) {
      const auto& w = reduced[owner[r]];
      const std::uint64_t f = v[r];
      for (int i = 0; i <= r; ++i)
        if (w[i]) v[i] = (v[i] + (p - f) * w[i]) % p;
      while (r >= 0 && v[r] == 0) --r;
    }
    if (r < 0)
      throw SingularMatrixError("pivot sweep mod p: column " + std::to_string(j) +
                                " is dependent on earlier columns");
    const std::uint64_t inv = pow_mod(v[r], p - 2, p);
    for (auto& x : v) x = x * inv % p;
    owner[r] = j;
    pivots.push_back(r);
    reduced.push_back(std::move(v));
  }
  return pivots;
}

ModPRank mod_p_rank_prescreen(const ExactMatrix& m, std::span<const std::uint32_t> primes) {
  ModPRank out;
  for (std::uint32_t p : primes) {
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) a[i][j] = to_field(m(i, j), p);
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
      int pivot = -1;
      for (int i = r; i < m.rows(); ++i)
        if (a[i][c]) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      std::swap(a[pivot], a[r]);
      const std::uint64_t inv = pow_mod(a[r][c], p - 2, p);
      for (int i = r + 1; i < m.rows(); ++i) {
        if (!a[i][c]) continue;
        const std::uint64_t f = a[i][c] * inv % p;
        for (int j = c; j < m.cols(); ++j)
          if (a[r][j]) a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
      }
      ++r;
    }
    out.per_prime.push_back(r);
  }
  if (!out.per_prime.empty()) {
    out.lower_bound = *std::max_element(out.per_prime.begin(), out.per_prime.end());
    out.agreement = std::all_of(out.per_prime.begin(), out.per_prime.end(),
                                [&](int r) { return r == out.per_prime.front(); });
  }
  return out;
}

}  // namespace echelon
