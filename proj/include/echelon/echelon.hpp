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

#ifndef ECHELON_ECHELON_HPP
#define ECHELON_ECHELON_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "echelon/exact_matrix.hpp"
#include "echelon/linear_extensions.hpp"
#include "echelon/poset.hpp"

namespace echelon {

/// How pivot computations are carried out. `prescreened` runs the sweep over
/// two prime fields and only falls back to exact integers when they disagree;
/// agreement is strong evidence, not proof.
enum class Arithmetic { exact, prescreened };

std::string to_string(Arithmetic a);

/// W with W(i, j) = 1 iff the element at position i is >= the element at
/// position j. Unit lower-triangular.
struct CartanMatrix {
  ExactMatrix matrix;
  LinearExtension extension;
};

CartanMatrix cartan_matrix(const Poset& p, const LinearExtension& sigma);

/// Echelonmotion: x maps to y iff the Bruhat permutation of the Cartan matrix
/// has its 1 in row sigma(y), column sigma(x).
ElementBijection echelonmotion(const Poset& p, const LinearExtension& sigma,
                               Arithmetic mode = Arithmetic::exact);

/// Image of a single element; only the first sigma(x)+1 columns are swept.
int echelon_image(const Poset& p, const LinearExtension& sigma, int x,
                  Arithmetic mode = Arithmetic::exact);

/// Witness maps for "Ech_sigma(x) = y": rho on the elements weakly before x,
/// b on the elements weakly after y.
struct LabelingCertificate {
  int x = -1;
  int y = -1;
  std::map<int, mpq_class> rho;
  std::map<int, mpq_class> b;
};

/// Checks the six labeling conditions exactly. Throws InputError when the
/// domains of rho and b are not exactly Pre_sigma(x) and Suc_sigma(y).
bool verify_certificate(const Poset& p, const LinearExtension& sigma,
                        const LabelingCertificate& cert);

/// Builds a certificate for (x, y) from null-space relations of the Cartan
/// submatrices; nullopt when Ech_sigma(x) != y.
std::optional<LabelingCertificate> find_certificate(const Poset& p, const LinearExtension& sigma,
                                                    int x, int y);

/// Completes a given rho with a solved b; nullopt when no b exists or the
/// resulting pair fails verification.
std::optional<LabelingCertificate> complete_certificate(const Poset& p,
                                                        const LinearExtension& sigma, int x, int y,
                                                        std::map<int, mpq_class> rho);

enum class ExtensionClass { lambda1, lambda2, xi1, xi2, xi3, xi4 };

std::string to_string(ExtensionClass k);

/// Canonical member of the requested class. Lambda classes need x and y
/// comparable (either order), Xi classes need them incomparable; otherwise
/// InputError. The result is re-checked against the class definition.
LinearExtension build_constrained_extension(const Poset& p, ExtensionClass kind, int x, int y);

/// True iff `sigma` satisfies the defining Pre/Suc equalities of `kind`.
bool in_extension_class(const Poset& p, const LinearExtension& sigma, ExtensionClass kind, int x,
                        int y);

struct DependenceWitness {
  int x = -1;
  LinearExtension sigma;
  LinearExtension sigma_prime;
  int y = -1;
  int y_prime = -1;
  std::string representative;  // class name for fast-test witnesses
};

enum class IndependenceMethod { brute, fast, sampled };

std::string to_string(IndependenceMethod m);

struct IndependenceReport {
  bool independent = false;
  std::optional<ElementBijection> canonical_map;
  std::optional<DependenceWitness> witness;
  IndependenceMethod method = IndependenceMethod::fast;
  Arithmetic arithmetic = Arithmetic::exact;
  bool exhaustive = true;
  std::uint64_t extensions_checked = 0;
};

/// Independence via one reference extension plus two (comparable) or four
/// (incomparable) constructed representatives per element. Witness images are
/// recomputed exactly regardless of `mode`.
IndependenceReport is_echelon_independent_fast(const Poset& p, Arithmetic mode = Arithmetic::exact);

inline constexpr std::uint64_t kDefaultExtensionCap = 1'000'000;

/// Compares echelonmotion over every linear extension. Throws CapacityError
/// when the extension count exceeds `cap`.
IndependenceReport is_echelon_independent_brute(const Poset& p,
                                                std::uint64_t cap = kDefaultExtensionCap);

/// Compares `samples` seeded random extensions (uniform when the poset has at
/// most 64 elements, greedy otherwise). Always reported as non-exhaustive.
IndependenceReport is_echelon_independent_sampled(const Poset& p, int samples,
                                                  std::mt19937_64& rng);

/// Number of distinct echelonmotion maps over all linear extensions (1 exactly
/// when independent). CapacityError above `cap` extensions.
std::uint64_t echelon_class_count(const Poset& p, std::uint64_t cap = 100'000);

/// -W^{-1} W^T with W the (lower-triangular) Cartan matrix.
ExactMatrix coxeter_matrix(const Poset& p, const LinearExtension& sigma);

/// True iff m = P U for a permutation P and an upper-triangular U, i.e. the
/// left factor of its Bruhat decomposition can be taken to be the identity.
bool has_pu_factorization(const ExactMatrix& m);

/// PU test for the Coxeter matrix written with the upper-triangular Cartan
/// matrix V = W^T, i.e. for -V^{-1} V^T = -(W^T)^{-1} W.
bool pu_check(const Poset& p, const LinearExtension& sigma);

}  // namespace echelon

#endif  // ECHELON_ECHELON_HPP
