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

#include "echelon/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace echelon {
namespace {

using Invariant = std::array<int, 4>;

struct Search {
  std::string best_code;
  std::vector<int> best_order;
};

std::string encode(const Poset& p, const std::vector<int>& order) {
  const int n = p.size();
  std::string code(static_cast<std::size_t>(n) * n, '0');
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(order[i], order[j])) code[static_cast<std::size_t>(i) * n + j] = '1';
  return code;
}

Search minimize(const Poset& p, std::string& signature) {
  const int n = p.size();
  std::map<Invariant, std::vector<int>> buckets;
  for (int x = 0; x < n; ++x) {
    Invariant inv{static_cast<int>(p.down_set(x).count()), static_cast<int>(p.up_set(x).count()),
                  static_cast<int>(p.covers_down(x).size()),
                  static_cast<int>(p.covers_up(x).size())};
    buckets[inv].push_back(x);
  }
  std::vector<std::vector<int>> classes;
  double work = 1;
  for (auto& [inv, members] : buckets) {
    for (int v : inv) signature += std::to_string(v) + ",";
    signature += std::to_string(members.size()) + ";";
    for (std::size_t k = 2; k <= members.size(); ++k) work *= static_cast<double>(k);
    classes.push_back(members);
  }
  if (work > 1e7) throw CapacityError("canonical_form: too many symmetric candidates");

  Search s;
  std::vector<int> order;
  order.reserve(n);
  while (true) {
    order.clear();
    for (const auto& c : classes) order.insert(order.end(), c.begin(), c.end());
    std::string code = encode(p, order);
    if (s.best_order.empty() || code < s.best_code) {
      s.best_code = std::move(code);
      s.best_order = order;
    }
    // Odometer over the per-class permutations.
    int c = static_cast<int>(classes.size()) - 1;
    while (c >= 0 && !std::next_permutation(classes[c].begin(), classes[c].end())) --c;
    if (c < 0) break;
  }
  return s;
}

}  // namespace

std::string canonical_form(const Poset& p) {
  std::string signature = std::to_string(p.size()) + "|";
  Search s = minimize(p, signature);
  return signature + "|" + s.best_code;
}

std::vector<int> canonical_ordering(const Poset& p) {
  std::string signature;
  return minimize(p, signature).best_order;
}

bool isomorphic(const Poset& a, const Poset& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace echelon
