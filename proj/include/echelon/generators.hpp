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

#ifndef ECHELON_GENERATORS_HPP
#define ECHELON_GENERATORS_HPP

#include <string>
#include <vector>

#include "echelon/poset.hpp"

namespace echelon {

Poset chain(int n);
Poset antichain(int n);
/// Subsets of an n-set; element index = bitmask.
Poset boolean(int n);
/// Grid a x b with element (i, j) at index i * b + j.
Poset product_of_chains(int a, int b);

/// 0, a, b, c, 1 with three incomparable atoms.
Poset m3();
/// 0 < a < b < 1 and 0 < c < 1.
Poset n5();
/// Five-element distributive lattice with covers e1<e2, e1<e3, e2<e4, e3<e4, e4<e5.
Poset r5_example();
/// x < y1 and x < y2.
Poset v_poset();

/// Order ideals of q under inclusion, smallest first (the empty ideal is 0).
Poset j_of_poset(const Poset& q);

/// Bruhat order on permutations of 1..n (n <= 6), indexed in lexicographic
/// order of one-line notation and named by it.
Poset bruhat_symmetric(int n);
/// Right weak order on permutations of 1..n (n <= 5), same indexing.
Poset weak_order_symmetric(int n);
/// Tamari lattice on Catalan(n) bracket vectors (n <= 6).
Poset tamari(int n);
/// Faces of an n-gon including the empty face and the polygon itself.
Poset face_lattice_polygon(int n);
/// Subspaces of F_q^d ordered by inclusion (q in {2, 3}, d <= 3).
Poset subspace_lattice(int q, int d);

/// One representative per isomorphism class of posets with n elements (n <= 8).
std::vector<Poset> all_posets(int n);
/// One representative per isomorphism class of lattices with n elements (n <= 8).
std::vector<Poset> all_lattices(int n);

/// Named-family dispatch used by the CLI, e.g. "boolean:3", "tamari:4",
/// "subspace:2:3", "n5". Throws InputError for unknown names or out-of-range
/// parameters.
Poset generate(const std::string& expr);
/// Expands family expressions that denote several posets, e.g.
/// "all_lattices:5", "all_posets:4", "connected_posets:5", "j_of_all:4", plus
/// every single-poset family.
std::vector<Poset> generate_scope(const std::string& expr);

}  // namespace echelon

#endif  // ECHELON_GENERATORS_HPP
