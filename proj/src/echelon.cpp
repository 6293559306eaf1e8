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

#include "echelon/echelon.hpp"

#include <set>
#include <string>

#include "echelon/errors.hpp"

namespace echelon {
namespace {

void require_extension_of(const Poset& p, const LinearExtension& sigma) {
  if (sigma.size() != p.size() || !is_linear_extension(p, sigma.order()))
    throw InputError("linear extension does not belong to this poset");
}

void require_element(const Poset& p, int x, const char* what) {
  if (x < 0 || x >= p.size())
    throw InputError(std::string(what) + ": element " + std::to_string(x) + " out of range");
}

std::vector<int> sweep(const ExactMatrix& w, int columns, Arithmetic mode) {
  if (mode == Arithmetic::prescreened) {
    try {
      auto first = bruhat_column_pivots_mod_p(w, columns, kPrescreenPrimes[0]);
      auto second = bruhat_column_pivots_mod_p(w, columns, kPrescreenPrimes[1]);
      if (first == second) return first;
    } catch (const SingularMatrixError&) {
      // A pivot vanished mod p; the exact sweep decides.
    }
  }
  return bruhat_column_pivots(w, columns);
}

mpq_class sum_over(const std::map<int, mpq_class>& f, const Bitset& where) {
  mpq_class s = 0;
  for (const auto& [w, v] : f)
    if (where[w]) s += v;
  return s;
}

bool domain_is(const std::map<int, mpq_class>& f, const Bitset& set) {
  if (f.size() != set.count()) return false;
  for (const auto& [w, v] : f)
    if (w < 0 || w >= static_cast<int>(set.size()) || !set[w]) return false;
  return true;
}

std::vector<ExtensionBlock> nested_blocks(const Poset& p, int a, int b) {
  Bitset first = p.down_set(a);
  Bitset second = p.down_set(b) - first;
  Bitset rest = ~(first | p.down_set(b));
  std::vector<ExtensionBlock> blocks;
  blocks.push_back({bitset_elements(first), a});
  if (a != b) blocks.push_back({bitset_elements(second), b});
  blocks.push_back({bitset_elements(rest), std::nullopt});
  return blocks;
}

LinearExtension reverse_onto(const Poset& p, const LinearExtension& on_dual) {
  std::vector<int> order(on_dual.order().rbegin(), on_dual.order().rend());
  return LinearExtension(p, std::move(order));
}

}  // namespace

std::string to_string(Arithmetic a) {
  return a == Arithmetic::exact ? "exact" : "prescreened";
}

std::string to_string(ExtensionClass k) {
  switch (k) {
    case ExtensionClass::lambda1: return "Lambda1";
    case ExtensionClass::lambda2: return "Lambda2";
    case ExtensionClass::xi1: return "Xi1";
    case ExtensionClass::xi2: return "Xi2";
    case ExtensionClass::xi3: return "Xi3";
    case ExtensionClass::xi4: return "Xi4";
  }
  return "?";
}

std::string to_string(IndependenceMethod m) {
  switch (m) {
    case IndependenceMethod::brute: return "brute";
    case IndependenceMethod::fast: return "fast";
    case IndependenceMethod::sampled: return "sampled";
  }
  return "?";
}

CartanMatrix cartan_matrix(const Poset& p, const LinearExtension& sigma) {
  require_extension_of(p, sigma);
  const int n = p.size();
  ExactMatrix w(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (p.leq(sigma.at(j), sigma.at(i))) w(i, j) = 1;
  return {std::move(w), sigma};
}

ElementBijection echelonmotion(const Poset& p, const LinearExtension& sigma, Arithmetic mode) {
  const CartanMatrix w = cartan_matrix(p, sigma);
  const int n = p.size();
  const std::vector<int> pivots = sweep(w.matrix, n, mode);
  std::vector<int> image(n);
  for (int j = 0; j < n; ++j) image[sigma.at(j)] = sigma.at(pivots[j]);
  return ElementBijection(std::move(image));
}

int echelon_image(const Poset& p, const LinearExtension& sigma, int x, Arithmetic mode) {
  require_element(p, x, "echelon_image");
  const CartanMatrix w = cartan_matrix(p, sigma);
  const int j = sigma.position(x);
  return sigma.at(sweep(w.matrix, j + 1, mode)[j]);
}

bool verify_certificate(const Poset& p, const LinearExtension& sigma,
                        const LabelingCertificate& cert) {
  require_extension_of(p, sigma);
  require_element(p, cert.x, "verify_certificate");
  require_element(p, cert.y, "verify_certificate");
  const Bitset pre = sigma.prefix(cert.x);
  const Bitset suc = sigma.suffix(cert.y);
  if (!domain_is(cert.rho, pre)) throw InputError("certificate: rho must be defined exactly on Pre(x)");
  if (!domain_is(cert.b, suc)) throw InputError("certificate: b must be defined exactly on Suc(y)");

  if (sgn(cert.rho.at(cert.x)) == 0) return false;
  if (sgn(cert.b.at(cert.y)) == 0) return false;
  if (sgn(sum_over(cert.rho, p.down_set(cert.y))) == 0) return false;
  if (sgn(sum_over(cert.b, p.up_set(cert.x))) == 0) return false;
  for (int u : bitset_elements(suc))
    if (u != cert.y && sgn(sum_over(cert.rho, p.down_set(u))) != 0) return false;
  for (int v : bitset_elements(pre))
    if (v != cert.x && sgn(sum_over(cert.b, p.up_set(v))) != 0) return false;

#ifdef ECHELON_CHECKED
  if (echelon_image(p, sigma, cert.x) != cert.y)
    throw InternalInconsistency("certificate verified but echelonmotion disagrees");
#endif
  return true;
}

std::optional<LabelingCertificate> complete_certificate(const Poset& p,
                                                        const LinearExtension& sigma, int x, int y,
                                                        std::map<int, mpq_class> rho) {
  require_element(p, x, "complete_certificate");
  require_element(p, y, "complete_certificate");
  const ExactMatrix w = cartan_matrix(p, sigma).matrix;
  const int n = p.size();
  const int i = sigma.position(y);
  const int j = sigma.position(x);

  // b is a row relation on rows i..n-1 of columns 0..j-1 with weight 1 on row i.
  ExactMatrix a(j, n - i - 1);
  std::vector<mpq_class> rhs(j);
  for (int c = 0; c < j; ++c) {
    for (int r = i + 1; r < n; ++r) a(c, r - i - 1) = w(r, c);
    rhs[c] = -w(i, c);
  }
  auto sol = solve_any(a, rhs);
  if (!sol) return std::nullopt;
  LabelingCertificate cert{x, y, std::move(rho), {}};
  cert.b[y] = 1;
  for (int r = i + 1; r < n; ++r) cert.b[sigma.at(r)] = (*sol)[r - i - 1];
  if (!domain_is(cert.rho, sigma.prefix(x)) || !verify_certificate(p, sigma, cert))
    return std::nullopt;
  return cert;
}

std::optional<LabelingCertificate> find_certificate(const Poset& p, const LinearExtension& sigma,
                                                    int x, int y) {
  require_element(p, x, "find_certificate");
  require_element(p, y, "find_certificate");
  const ExactMatrix w = cartan_matrix(p, sigma).matrix;
  const int n = p.size();
  const int i = sigma.position(y);
  const int j = sigma.position(x);

  // rho is a column relation on columns 0..j of rows i+1..n-1 with weight 1 on column j.
  ExactMatrix a(n - i - 1, j);
  std::vector<mpq_class> rhs(n - i - 1);
  for (int r = i + 1; r < n; ++r) {
    for (int c = 0; c < j; ++c) a(r - i - 1, c) = w(r, c);
    rhs[r - i - 1] = -w(r, j);
  }
  auto sol = solve_any(a, rhs);
  if (!sol) return std::nullopt;
  std::map<int, mpq_class> rho;
  rho[x] = 1;
  for (int c = 0; c < j; ++c) rho[sigma.at(c)] = (*sol)[c];
  return complete_certificate(p, sigma, x, y, std::move(rho));
}

bool in_extension_class(const Poset& p, const LinearExtension& sigma, ExtensionClass kind, int x,
                        int y) {
  require_extension_of(p, sigma);
  switch (kind) {
    case ExtensionClass::lambda1:
      return sigma.prefix(x) == p.down_set(x) && sigma.prefix(y) == p.down_set(y);
    case ExtensionClass::lambda2:
      return sigma.suffix(x) == p.up_set(x) && sigma.suffix(y) == p.up_set(y);
    case ExtensionClass::xi1:
      return sigma.prefix(x) == p.down_set(x) &&
             sigma.prefix(y) == (p.down_set(x) | p.down_set(y));
    case ExtensionClass::xi2:
      return sigma.prefix(x) == (p.down_set(x) | p.down_set(y)) &&
             sigma.prefix(y) == p.down_set(y);
    case ExtensionClass::xi3:
      return sigma.suffix(x) == p.up_set(x) && sigma.suffix(y) == (p.up_set(x) | p.up_set(y));
    case ExtensionClass::xi4:
      return sigma.suffix(x) == (p.up_set(x) | p.up_set(y)) && sigma.suffix(y) == p.up_set(y);
  }
  return false;
}

LinearExtension build_constrained_extension(const Poset& p, ExtensionClass kind, int x, int y) {
  require_element(p, x, "build_constrained_extension");
  require_element(p, y, "build_constrained_extension");
  const bool lambda = kind == ExtensionClass::lambda1 || kind == ExtensionClass::lambda2;
  if (lambda && !p.comparable(x, y))
    throw InputError(to_string(kind) + " needs comparable elements");
  if (!lambda && p.comparable(x, y))
    throw InputError(to_string(kind) + " needs incomparable elements");

  const int lo = p.leq(x, y) ? x : y;
  const int hi = lo == x ? y : x;
  LinearExtension result;
  switch (kind) {
    case ExtensionClass::lambda1:
      result = extension_from_blocks(p, nested_blocks(p, lo, hi));
      break;
    case ExtensionClass::lambda2: {
      const Poset d = p.dual();
      result = reverse_onto(p, extension_from_blocks(d, nested_blocks(d, hi, lo)));
      break;
    }
    case ExtensionClass::xi1:
      result = extension_from_blocks(p, nested_blocks(p, x, y));
      break;
    case ExtensionClass::xi2:
      result = extension_from_blocks(p, nested_blocks(p, y, x));
      break;
    case ExtensionClass::xi3: {
      const Poset d = p.dual();
      result = reverse_onto(p, extension_from_blocks(d, nested_blocks(d, x, y)));
      break;
    }
    case ExtensionClass::xi4: {
      const Poset d = p.dual();
      result = reverse_onto(p, extension_from_blocks(d, nested_blocks(d, y, x)));
      break;
    }
  }
  if (!in_extension_class(p, result, kind, x, y))
    throw InternalInconsistency("constructed extension is not in " + to_string(kind));
  return result;
}

IndependenceReport is_echelon_independent_fast(const Poset& p, Arithmetic mode) {
  IndependenceReport report;
  report.method = IndependenceMethod::fast;
  report.arithmetic = mode;
  const LinearExtension reference = first_linear_extension(p);
  const ElementBijection ech = echelonmotion(p, reference, mode);
  report.extensions_checked = 1;

  for (int x = 0; x < p.size(); ++x) {
    const int y = ech(x);
    std::vector<ExtensionClass> kinds;
    if (p.comparable(x, y))
      kinds = {ExtensionClass::lambda1, ExtensionClass::lambda2};
    else
      kinds = {ExtensionClass::xi1, ExtensionClass::xi2, ExtensionClass::xi3, ExtensionClass::xi4};
    for (ExtensionClass kind : kinds) {
      const LinearExtension rep = build_constrained_extension(p, kind, x, y);
      ++report.extensions_checked;
      if (echelon_image(p, rep, x, mode) == y) continue;
      const int y_exact = echelon_image(p, reference, x);
      const int y_prime = echelon_image(p, rep, x);
      if (y_exact == y_prime)
        throw InternalInconsistency("prescreened sweep disagreed with exact recomputation");
      report.independent = false;
      report.witness = DependenceWitness{x, reference, rep, y_exact, y_prime, to_string(kind)};
      return report;
    }
  }
  report.independent = true;
  report.canonical_map = ech;
  return report;
}

IndependenceReport is_echelon_independent_brute(const Poset& p, std::uint64_t cap) {
  if (p.size() <= 64) {
    const mpz_class total = count_linear_extensions(p);
    if (total > mpz_class(std::to_string(cap)))
      throw CapacityError("brute independence: " + total.get_str() +
                          " linear extensions exceed the cap of " + std::to_string(cap));
  }
  IndependenceReport report;
  report.method = IndependenceMethod::brute;
  std::optional<LinearExtension> first;
  std::optional<ElementBijection> reference;
  LinearExtensionEnumerator it(p);
  while (auto sigma = it.next()) {
    if (++report.extensions_checked > cap)
      throw CapacityError("brute independence: more than " + std::to_string(cap) +
                          " linear extensions");
    ElementBijection ech = echelonmotion(p, *sigma);
    if (!reference) {
      first = *sigma;
      reference = std::move(ech);
      continue;
    }
    if (ech == *reference) continue;
    for (int x = 0; x < p.size(); ++x)
      if (ech(x) != (*reference)(x)) {
        report.witness = DependenceWitness{x, *first, *sigma, (*reference)(x), ech(x), ""};
        break;
      }
    report.independent = false;
    return report;
  }
  report.independent = true;
  report.canonical_map = reference;
  return report;
}

IndependenceReport is_echelon_independent_sampled(const Poset& p, int samples,
                                                  std::mt19937_64& rng) {
  IndependenceReport report;
  report.method = IndependenceMethod::sampled;
  report.exhaustive = false;
  std::optional<ExtensionCounter> counter;
  if (p.size() <= 64) counter.emplace(p);
  const LinearExtension first = first_linear_extension(p);
  const ElementBijection reference = echelonmotion(p, first);
  report.extensions_checked = 1;
  for (int s = 0; s < samples; ++s) {
    const LinearExtension sigma = counter ? counter->sample(rng) : sample_greedy_extension(p, rng);
    ++report.extensions_checked;
    const ElementBijection ech = echelonmotion(p, sigma);
    if (ech == reference) continue;
    for (int x = 0; x < p.size(); ++x)
      if (ech(x) != reference(x)) {
        report.witness = DependenceWitness{x, first, sigma, reference(x), ech(x), ""};
        break;
      }
    report.independent = false;
    return report;
  }
  report.independent = true;
  report.canonical_map = reference;
  return report;
}

std::uint64_t echelon_class_count(const Poset& p, std::uint64_t cap) {
  if (p.size() > 64 || count_linear_extensions(p) > cap)
    throw CapacityError("echelon_class_count: more than " + std::to_string(cap) + " extensions");
  std::set<std::vector<int>> images;
  for_each_linear_extension(p, [&](const LinearExtension& s) {
    images.insert(echelonmotion(p, s).image());
    return true;
  });
  return images.size();
}

ExactMatrix coxeter_matrix(const Poset& p, const LinearExtension& sigma) {
  const ExactMatrix w = cartan_matrix(p, sigma).matrix;
  return -(inverse(w) * w.transpose());
}

bool has_pu_factorization(const ExactMatrix& c) {
  if (!c.is_square()) throw InputError("has_pu_factorization: matrix must be square");
  const PermutationMatrix perm = bruhat_permutation(c).permutation;
  for (int r = 0; r < c.rows(); ++r)
    for (int col = 0; col < r; ++col)
      if (sgn(c(perm.row_of(r), col)) != 0) return false;
  return true;
}

bool pu_check(const Poset& p, const LinearExtension& sigma) {
  const ExactMatrix w = cartan_matrix(p, sigma).matrix;
  return has_pu_factorization(-(inverse(w.transpose()) * w));
}

}  // namespace echelon
