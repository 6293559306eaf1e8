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

#ifndef ECHELON_MACNEILLE_HPP
#define ECHELON_MACNEILLE_HPP

#include <vector>

#include "echelon/lattice.hpp"

namespace echelon {

/// Upper bounds of a set (everything for the empty set).
Bitset upper_bounds(const Poset& p, const Bitset& xs);
/// Lower bounds of a set (everything for the empty set).
Bitset lower_bounds(const Poset& p, const Bitset& xs);

/// Cuts A = (A^u)^l in lectic order, by NextClosure.
std::vector<Bitset> macneille_cuts(const Poset& p);

struct Completion {
  Lattice lattice;
  std::vector<int> embed;
  std::vector<Bitset> cuts;  // cuts[c] is the cut of completion element c
};

/// Elements are the cuts ordered by inclusion; embed(x) is the principal cut
/// of x. The embedding and the join/meet density of its image are re-checked
/// (InternalInconsistency on failure).
Completion macneille_completion(const Poset& p);

}  // namespace echelon

#endif  // ECHELON_MACNEILLE_HPP
