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

#ifndef ECHELON_POSET_HPP
#define ECHELON_POSET_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "echelon/errors.hpp"

namespace echelon {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Cover = std::pair<int, int>;

std::vector<int> bitset_elements(const Bitset& b);

/// A finite poset on elements 0..n-1.
///
/// The order relation is stored densely as one down-set and one up-set bitset
/// per element; covers are always the transitive reduction of that relation.
/// Instances are immutable after construction.
class Poset {
 public:
  Poset() = default;

  /// Builds the reflexive-transitive closure of `pairs` (x below y). Redundant
  /// pairs are dropped from the stored covers. Throws CycleError when the
  /// pairs contain a directed cycle and InputError on out-of-range indices.
  static Poset from_covers(int n, std::span<const Cover> pairs,
                           std::vector<std::string> names = {});

  /// Builds from a relation predicate leq(x, y); the relation must already be
  /// a partial order (checked).
  template <typename Leq>
  static Poset from_relation(int n, Leq&& leq, std::vector<std::string> names = {}) {
    std::vector<Cover> pairs;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y && leq(x, y)) pairs.emplace_back(x, y);
    Poset p = from_covers(n, pairs, std::move(names));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (p.leq(x, y) != (x == y || static_cast<bool>(leq(x, y))))
          throw InputError("from_relation: relation is not transitive");
    return p;
  }

  int size() const { return n_; }

  bool leq(int x, int y) const { return down_[y][x]; }
  bool lt(int x, int y) const { return x != y && down_[y][x]; }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
  bool covers(int x, int y) const;

  const std::vector<Cover>& cover_pairs() const { return covers_; }
  const std::vector<int>& covers_up(int x) const { return up_covers_[x]; }
  const std::vector<int>& covers_down(int x) const { return down_covers_[x]; }

  /// Principal down-set {y : y <= x}.
  const Bitset& down_set(int x) const { return down_[x]; }
  /// Principal up-set {y : y >= x}.
  const Bitset& up_set(int x) const { return up_[x]; }
  Bitset up_set_of(const Bitset& xs) const;
  Bitset down_set_of(const Bitset& xs) const;
  bool is_down_set(const Bitset& xs) const;
  Bitset empty_set() const { return Bitset(n_); }
  Bitset full_set() const;

  std::vector<int> minimals() const;
  std::vector<int> maximals() const;
  std::optional<int> minimum() const;
  std::optional<int> maximum() const;
  bool is_connected() const;
  bool is_bounded() const { return minimum() && maximum(); }

  Poset dual() const;

  const std::vector<std::string>& names() const { return names_; }
  std::string name(int x) const;

  /// Structural equality on the labeled poset (names ignored).
  bool same_order(const Poset& other) const;
  friend bool operator==(const Poset& a, const Poset& b) {
    return a.same_order(b) && a.names_ == b.names_;
  }

 private:
  int n_ = 0;
  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> up_covers_;
  std::vector<std::vector<int>> down_covers_;
  std::vector<std::string> names_;
};

/// An induced subposet together with the index map back into its parent.
struct Subposet {
  Poset poset;
  std::vector<int> to_parent;
  int to_child(int parent_element) const;
};

Subposet induced_subposet(const Poset& p, const std::vector<int>& elements);
Subposet interval(const Poset& p, int x, int y);

/// mu(x, y) for every y (0 where x is not below y).
std::vector<long long> mobius_row(const Poset& p, int x);
long long mobius(const Poset& p, int x, int y);

/// Rank function with each component's minimum rank pinned to 0, or nullopt
/// when some cover breaks consistency.
std::optional<std::vector<int>> rank_function(const Poset& p);
bool is_eulerian(const Poset& p);

/// Order-preserving bijection elements -> positions. Positions are 0-based
/// internally; serialized forms are 1-based.
class LinearExtension {
 public:
  LinearExtension() = default;
  /// `order[k]` is the element at position k. Validated against `p`.
  LinearExtension(const Poset& p, std::vector<int> order);
  static LinearExtension from_positions(const Poset& p, const std::vector<int>& one_based);

  int size() const { return static_cast<int>(order_.size()); }
  int position(int x) const { return pos_[x]; }
  int at(int position) const { return order_[position]; }
  const std::vector<int>& order() const { return order_; }
  /// 1-based positions indexed by element.
  std::vector<int> positions() const;

  /// Elements weakly before x.
  Bitset prefix(int x) const;
  /// Elements weakly after x.
  Bitset suffix(int x) const;
  /// Latest element of `xs` in this order.
  int latest(const Bitset& xs) const;

  /// The same sequence read backwards: a linear extension of the dual.
  LinearExtension reversed_for(const Poset& dual) const;

  friend bool operator==(const LinearExtension&, const LinearExtension&) = default;

 private:
  std::vector<int> order_;
  std::vector<int> pos_;
};

bool is_linear_extension(const Poset& p, std::span<const int> order);

/// A permutation of poset elements.
class ElementBijection {
 public:
  ElementBijection() = default;
  explicit ElementBijection(std::vector<int> image);
  static ElementBijection identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[x]; }
  const std::vector<int>& image() const { return image_; }

  ElementBijection inverse() const;
  /// (*this after other)(x) = (*this)(other(x)).
  ElementBijection after(const ElementBijection& other) const;
  std::vector<int> fixed_points() const;
  std::vector<std::vector<int>> orbits() const;
  bool is_identity() const;
  bool is_involution() const { return after(*this).is_identity(); }

  friend bool operator==(const ElementBijection&, const ElementBijection&) = default;

 private:
  std::vector<int> image_;
};

}  // namespace echelon

#endif  // ECHELON_POSET_HPP
