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

#ifndef ECHELON_LATTICE_HPP
#define ECHELON_LATTICE_HPP

#include <map>
#include <utility>
#include <vector>

#include "echelon/poset.hpp"

namespace echelon {

/// A poset together with its meet and join tables.
class Lattice {
 public:
  /// Throws NotALatticeError naming a pair without a meet or join.
  explicit Lattice(Poset p);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  bool leq(int x, int y) const { return poset_.leq(x, y); }

  int meet(int x, int y) const { return meet_[index(x, y)]; }
  int join(int x, int y) const { return join_[index(x, y)]; }
  /// Meet of a set; the top for the empty set.
  int meet_of(const Bitset& xs) const;
  /// Join of a set; the bottom for the empty set.
  int join_of(const Bitset& xs) const;

  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const std::vector<int>& join_irreducibles() const { return join_irreducibles_; }
  const std::vector<int>& meet_irreducibles() const { return meet_irreducibles_; }
  bool is_join_irreducible(int x) const { return poset_.covers_down(x).size() == 1; }
  bool is_meet_irreducible(int x) const { return poset_.covers_up(x).size() == 1; }
  /// j_*, the unique lower cover of a join-irreducible j.
  int lower_cover(int j) const;
  /// m^*, the unique upper cover of a meet-irreducible m.
  int upper_cover(int m) const;

  Lattice dual() const;

 private:
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(x) * size() + y; }

  Poset poset_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_ = -1;
  int top_ = -1;
  std::vector<int> join_irreducibles_;
  std::vector<int> meet_irreducibles_;
};

Lattice as_lattice(const Poset& p);
bool is_lattice(const Poset& p);

/// Meet of x and all its lower covers.
int popdown(const Lattice& l, int x);
/// {z : z meet x = popdown(x)}.
Bitset upsilon(const Lattice& l, int x);
std::vector<int> upsilon_maxima(const Lattice& l, int x);

/// {z : z meet y = x} has a maximum for every x <= y.
bool meet_semidistributive_by_definition(const Lattice& l);
/// upsilon(j) has a maximum for every join-irreducible j.
bool meet_semidistributive_by_irreducibles(const Lattice& l);

/// Both the definition over all x <= y and the join-irreducible criterion are
/// evaluated; InternalInconsistency if they disagree.
bool is_meet_semidistributive(const Lattice& l);
bool is_join_semidistributive(const Lattice& l);
bool is_semidistributive(const Lattice& l);

bool is_distributive(const Lattice& l);
bool is_modular(const Lattice& l);

/// Minimum of {z : z join x = y} for a cover x < y. Throws
/// NotSemidistributiveError when the minimum does not exist and DomainError
/// when x < y is not a cover.
int canonical_edge_label(const Lattice& l, int x, int y);

/// Downward and upward label sets, as subsets of the ground set.
struct LabelSets {
  std::vector<Bitset> down;
  std::vector<Bitset> up;
};

/// Requires a semidistributive lattice (NotSemidistributiveError otherwise).
LabelSets label_sets(const Lattice& l);

/// Rowmotion by matching U(Row(w)) = D(w); cross-checked against the unique
/// maximum of upsilon(w).
ElementBijection barnard_rowmotion(const Lattice& l);

/// Rowmotion through the order ideals of join-irreducibles. DomainError when
/// the lattice is not distributive.
ElementBijection birkhoff_rowmotion(const Lattice& l);

/// The sigma-latest element of upsilon(x).
int max_extension_upsilon(const Lattice& l, const LinearExtension& sigma, int x);

/// k -> (#elements with k upper covers, #elements with k lower covers).
std::map<int, std::pair<int, int>> dilworth_profile(const Lattice& l);

}  // namespace echelon

#endif  // ECHELON_LATTICE_HPP
