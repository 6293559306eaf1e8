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

#ifndef ECHELON_TRIM_HPP
#define ECHELON_TRIM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "echelon/lattice.hpp"

namespace echelon {

/// Chain data of a trim lattice relative to one maximum-length chain
/// u_0 < u_1 < ... < u_k. Indices i in gamma and the words run over 1..k;
/// ji_seq[i-1] = j_i and mi_seq[i-1] = m_i.
struct TrimData {
  std::vector<int> chain;
  std::vector<int> ji_seq;
  std::vector<int> mi_seq;
  std::map<int, int> kappa;
  std::map<Cover, int> gamma;
  std::vector<std::pair<int, int>> galois_arcs;
  std::vector<std::vector<int>> words;

  int k() const { return static_cast<int>(ji_seq.size()); }
  int gamma_of(int x, int y) const;
  /// The join-irreducible j_{gamma(x < y)} labeling the cover x < y.
  int label(int x, int y) const { return ji_seq[gamma_of(x, y) - 1]; }
};

/// Number of cover steps in a longest chain.
int longest_chain_length(const Poset& p);
bool is_extremal(const Lattice& l);

/// Elements x with (y join x) meet z = y join (x meet z) for all y <= z.
Bitset left_modular_elements(const Lattice& l);

/// Every chain from bottom to top with the maximum number of covers. Throws
/// CapacityError past `cap` chains.
std::vector<std::vector<int>> maximum_length_chains(const Poset& p, std::uint64_t cap = 1'000'000);

/// Trim data for the canonical chain, or nullopt if the lattice is not trim.
/// The canonical chain is the index-lexicographically least maximum-length
/// chain of left-modular elements.
std::optional<TrimData> trim_data(const Lattice& l);
bool is_trim(const Lattice& l);

/// Trim data for a given maximum-length chain (DomainError otherwise).
/// Assumes the lattice is trim.
TrimData trim_data_for_chain(const Lattice& l, const std::vector<int>& chain);

/// min{i : u_i join x >= y} for a cover x < y.
int gamma_label(const Lattice& l, const std::vector<int>& chain, int x, int y);

/// Down/up label sets built from the gamma labels.
LabelSets trim_label_sets(const Lattice& l, const TrimData& t);

bool is_independent_in_galois_graph(const TrimData& t, const Bitset& js);
/// Brute force over subsets of the join-irreducibles; k <= 30.
std::uint64_t count_galois_independent_sets(const Lattice& l, const TrimData& t);

/// Elements sorted lexicographically by their words. Asserts the words are
/// distinct and the order is a linear extension.
LinearExtension vertebral_extension(const Lattice& l, const TrimData& t);

/// Rowmotion by matching U(Row(x)) = D(x) on gamma labels. Asserts Row(x) is
/// a maximal element of upsilon(x) and that Row agrees with kappa on the
/// join-irreducibles.
ElementBijection trim_rowmotion(const Lattice& l, const TrimData& t);

struct IntervalTrim {
  Subposet sub;
  Lattice lattice;
  TrimData data;  // in the interval's own element indices
};

/// Restricts to [v, w] through the chain {(v join u) meet w : u in C}, and
/// checks that gamma on the interval is the order-preserving re-indexing of
/// gamma on L.
IntervalTrim interval_trim_restriction(const Lattice& l, const TrimData& t, int v, int w);

}  // namespace echelon

#endif  // ECHELON_TRIM_HPP
