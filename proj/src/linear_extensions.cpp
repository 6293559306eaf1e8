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

#include "echelon/linear_extensions.hpp"

#include <algorithm>

namespace echelon {

LinearExtensionEnumerator::LinearExtensionEnumerator(const Poset& p)
    : poset_(&p), remaining_below_(p.size()), placed_(p.size(), 0) {
  for (int x = 0; x < p.size(); ++x)
    remaining_below_[x] = static_cast<int>(p.covers_down(x).size());
  order_.reserve(p.size());
}

namespace {

struct Placer {
  const Poset& p;
  std::vector<int>& order;
  std::vector<int>& remaining_below;
  std::vector<char>& placed;

  bool available(int x) const { return !placed[x] && remaining_below[x] == 0; }

  void place(int x) {
    placed[x] = 1;
    order.push_back(x);
    for (int y : p.covers_up(x)) --remaining_below[y];
  }

  int unplace_last() {
    int x = order.back();
    order.pop_back();
    placed[x] = 0;
    for (int y : p.covers_up(x)) ++remaining_below[y];
    return x;
  }

  void fill() {
    const int n = p.size();
    while (static_cast<int>(order.size()) < n) {
      int x = 0;
      while (!available(x)) ++x;
      place(x);
    }
  }
};

}  // namespace

std::optional<LinearExtension> LinearExtensionEnumerator::next() {
  if (done_) return std::nullopt;
  Placer placer{*poset_, order_, remaining_below_, placed_};
  if (!started_) {
    started_ = true;
    placer.fill();
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return LinearExtension(*poset_, order_);
}

bool LinearExtensionEnumerator::advance() {
  Placer placer{*poset_, order_, remaining_below_, placed_};
  const int n = poset_->size();
  while (!order_.empty()) {
    int previous = placer.unplace_last();
    for (int x = previous + 1; x < n; ++x) {
      if (placer.available(x)) {
        placer.place(x);
        placer.fill();
        return true;
      }
    }
  }
  return false;
}

LinearExtension first_linear_extension(const Poset& p) {
  LinearExtensionEnumerator it(p);
  return *it.next();
}

ExtensionCounter::ExtensionCounter(const Poset& p) : poset_(&p), below_mask_(p.size(), 0) {
  if (p.size() > 64) throw CapacityError("extension counting supports at most 64 elements");
  for (int x = 0; x < p.size(); ++x) {
    for (auto y = p.down_set(x).find_first(); y != Bitset::npos; y = p.down_set(x).find_next(y))
      if (static_cast<int>(y) != x) below_mask_[x] |= std::uint64_t{1} << y;
    full_ |= std::uint64_t{1} << x;
  }
}

const mpz_class& ExtensionCounter::completions(std::uint64_t placed) {
  if (auto it = memo_.find(placed); it != memo_.end()) return it->second;
  mpz_class total = 0;
  if (placed == full_) {
    total = 1;
  } else {
    for (int x = 0; x < poset_->size(); ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if (!(placed & bit) && (below_mask_[x] & ~placed) == 0) total += completions(placed | bit);
    }
  }
  return memo_.emplace(placed, std::move(total)).first->second;
}

LinearExtension ExtensionCounter::sample(std::mt19937_64& rng) {
  gmp_randclass gen(gmp_randinit_mt);
  gen.seed(static_cast<unsigned long>(rng()));
  std::vector<int> order;
  std::uint64_t placed = 0;
  while (placed != full_) {
    mpz_class r = gen.get_z_range(completions(placed));
    for (int x = 0; x < poset_->size(); ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if ((placed & bit) || (below_mask_[x] & ~placed) != 0) continue;
      const mpz_class& c = completions(placed | bit);
      if (r < c) {
        order.push_back(x);
        placed |= bit;
        break;
      }
      r -= c;
    }
  }
  return LinearExtension(*poset_, std::move(order));
}

mpz_class count_linear_extensions(const Poset& p) { return ExtensionCounter(p).total(); }

LinearExtension sample_greedy_extension(const Poset& p, std::mt19937_64& rng) {
  std::vector<int> order;
  std::vector<int> remaining_below(p.size());
  std::vector<char> placed(p.size(), 0);
  for (int x = 0; x < p.size(); ++x)
    remaining_below[x] = static_cast<int>(p.covers_down(x).size());
  Placer placer{p, order, remaining_below, placed};
  std::vector<int> candidates;
  while (static_cast<int>(order.size()) < p.size()) {
    candidates.clear();
    for (int x = 0; x < p.size(); ++x)
      if (placer.available(x)) candidates.push_back(x);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    placer.place(candidates[pick(rng)]);
  }
  return LinearExtension(p, std::move(order));
}

LinearExtension extension_from_blocks(const Poset& p, const std::vector<ExtensionBlock>& blocks) {
  const int n = p.size();
  Bitset seen(n);
  Bitset prefix_union(n);
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> remaining_below(n);
  std::vector<char> placed(n, 0);
  for (int x = 0; x < n; ++x) remaining_below[x] = static_cast<int>(p.covers_down(x).size());
  Placer placer{p, order, remaining_below, placed};

  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    Bitset members(n);
    for (int x : block.elements) {
      if (x < 0 || x >= n) throw InputError("block element out of range");
      if (seen[x]) throw ConstraintError("element " + p.name(x) + " appears in two blocks");
      seen.set(x);
      members.set(x);
    }
    prefix_union |= members;
    if (!p.is_down_set(prefix_union))
      throw ConstraintError("union of blocks 1.." + std::to_string(b + 1) + " is not a down-set");
    if (block.last) {
      const int d = *block.last;
      if (d < 0 || d >= n || !members[d])
        throw ConstraintError("designated element is not in its block");
      if ((p.up_set(d) & prefix_union).count() != 1)
        throw ConstraintError("designated element " + p.name(d) +
                              " is not maximal in its prefix union");
      members.reset(d);
    }
    for (std::size_t left = members.count(); left > 0; --left) {
      int x = -1;
      for (auto c = members.find_first(); c != Bitset::npos; c = members.find_next(c))
        if (placer.available(static_cast<int>(c))) {
          x = static_cast<int>(c);
          break;
        }
      if (x < 0) throw InternalInconsistency("block has no placeable element");
      placer.place(x);
      members.reset(x);
    }
    if (block.last) placer.place(*block.last);
  }
  if (static_cast<int>(seen.count()) != n)
    throw ConstraintError("blocks do not cover the ground set");
  return LinearExtension(p, std::move(order));
}

}  // namespace echelon
