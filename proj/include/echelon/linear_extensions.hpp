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

#ifndef ECHELON_LINEAR_EXTENSIONS_HPP
#define ECHELON_LINEAR_EXTENSIONS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "echelon/poset.hpp"

namespace echelon {

/// Deterministic, duplicate-free enumeration of all linear extensions.
///
/// Backtracking over the currently minimal elements in ascending index order,
/// so the first extension produced is the greedy "smallest available index"
/// topological order.
class LinearExtensionEnumerator {
 public:
  explicit LinearExtensionEnumerator(const Poset& p);
  std::optional<LinearExtension> next();

 private:
  bool advance();

  const Poset* poset_;
  std::vector<int> order_;
  std::vector<int> remaining_below_;  // unplaced lower covers per element
  std::vector<char> placed_;
  bool started_ = false;
  bool done_ = false;
};

/// Calls `visit(ext)` for every extension until it returns false. Returns the
/// number visited.
template <typename Visit>
std::uint64_t for_each_linear_extension(const Poset& p, Visit&& visit) {
  LinearExtensionEnumerator it(p);
  std::uint64_t count = 0;
  while (auto ext = it.next()) {
    ++count;
    if (!visit(*ext)) break;
  }
  return count;
}

LinearExtension first_linear_extension(const Poset& p);

/// Exact counting over down-sets; also drives uniform sampling. Limited to
/// posets with at most 64 elements.
class ExtensionCounter {
 public:
  explicit ExtensionCounter(const Poset& p);

  mpz_class total() { return completions(0); }
  /// Uniformly random extension (exact, not rejection based).
  LinearExtension sample(std::mt19937_64& rng);

 private:
  const mpz_class& completions(std::uint64_t placed);

  const Poset* poset_;
  std::vector<std::uint64_t> below_mask_;  // strict down-set per element
  std::uint64_t full_ = 0;
  std::unordered_map<std::uint64_t, mpz_class> memo_;
};

mpz_class count_linear_extensions(const Poset& p);

/// Random topological order picking uniformly among minimal elements at each
/// step. Not uniform over extensions; reports must label it as such.
LinearExtension sample_greedy_extension(const Poset& p, std::mt19937_64& rng);

struct ExtensionBlock {
  std::vector<int> elements;
  std::optional<int> last;
};

/// Lists block 1, then block 2, ..., each block in smallest-index-first
/// topological order with its designated element (if any) placed last.
/// Throws ConstraintError when the blocks do not partition the ground set,
/// when a prefix union is not a down-set, or when a designated element is not
/// maximal in its prefix union.
LinearExtension extension_from_blocks(const Poset& p, const std::vector<ExtensionBlock>& blocks);

}  // namespace echelon

#endif  // ECHELON_LINEAR_EXTENSIONS_HPP
