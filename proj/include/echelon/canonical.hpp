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

#ifndef ECHELON_CANONICAL_HPP
#define ECHELON_CANONICAL_HPP

#include <string>
#include <vector>

#include "echelon/poset.hpp"

namespace echelon {

/// Isomorphism-invariant key: equal for two posets iff they are isomorphic.
///
/// Elements are bucketed by (down-set size, up-set size, lower/upper cover
/// counts); the relation matrix is then minimized over permutations inside
/// the buckets. Meant for exhaustive sweeps with n <= 8; throws CapacityError
/// when the bucket permutations exceed ten million.
std::string canonical_form(const Poset& p);

/// The element ordering that realizes canonical_form(p).
std::vector<int> canonical_ordering(const Poset& p);

bool isomorphic(const Poset& a, const Poset& b);

}  // namespace echelon

#endif  // ECHELON_CANONICAL_HPP
