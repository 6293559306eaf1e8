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

#include "echelon/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "echelon/canonical.hpp"
#include "echelon/errors.hpp"
#include "echelon/lattice.hpp"
#include "echelon/linear_extensions.hpp"

namespace echelon {
namespace {

void require_range(const char* family, int value, int lo, int hi) {
  if (value < lo || value > hi)
    throw InputError(std::string(family) + ": parameter " + std::to_string(value) +
                     " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::vector<std::vector<int>> permutations_lex(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string one_line(const std::vector<int>& p) {
  std::string s;
  for (int v : p) s += std::to_string(v);
  return s;
}

// Index of a permutation among all permutations in lexicographic order.
int lex_rank(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  int rank = 0;
  std::vector<int> factorial(n + 1, 1);
  for (int i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    rank += smaller * factorial[n - 1 - i];
  }
  return rank;
}

Poset symmetric_group_order(int n, bool bruhat) {
  const auto perms = permutations_lex(n);
  std::vector<Cover> covers;
  std::vector<std::string> names;
  for (const auto& u : perms) {
    names.push_back(one_line(u));
    const int from = lex_rank(u);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (u[i] > u[j]) continue;
        if (!bruhat && j != i + 1) continue;
        bool gap = false;
        for (int k = i + 1; k < j && !gap; ++k) gap = u[i] < u[k] && u[k] < u[j];
        if (gap) continue;
        auto v = u;
        std::swap(v[i], v[j]);
        covers.emplace_back(from, lex_rank(v));
      }
  }
  return Poset::from_covers(static_cast<int>(perms.size()), covers, std::move(names));
}

std::string set_name(const Poset& q, const Bitset& s) {
  std::string out = "{";
  bool first = true;
  for (int x : bitset_elements(s)) {
    if (!first) out += ",";
    out += q.name(x);
    first = false;
  }
  return out + "}";
}

std::vector<Bitset> order_ideals(const Poset& q) {
  const LinearExtension order = first_linear_extension(q);
  std::vector<Bitset> ideals;
  Bitset current(q.size());
  std::function<void(int)> walk = [&](int k) {
    if (k == q.size()) {
      ideals.push_back(current);
      return;
    }
    walk(k + 1);
    const int x = order.at(k);
    bool allowed = true;
    for (int c : q.covers_down(x)) allowed = allowed && current[c];
    if (allowed) {
      current.set(x);
      walk(k + 1);
      current.reset(x);
    }
  };
  walk(0);
  std::sort(ideals.begin(), ideals.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return bitset_elements(a) < bitset_elements(b);
  });
  return ideals;
}

Poset with_bounds(const Poset& inner) {
  const int n = inner.size() + 2;
  std::vector<Cover> covers;
  for (int x = 0; x < inner.size(); ++x) {
    covers.emplace_back(0, x + 1);
    covers.emplace_back(x + 1, n - 1);
  }
  for (auto [a, b] : inner.cover_pairs()) covers.emplace_back(a + 1, b + 1);
  if (inner.size() == 0) covers.emplace_back(0, 1);
  return Poset::from_covers(n, covers);
}

std::vector<int> parse_ints(const std::vector<std::string>& parts, std::size_t from) {
  std::vector<int> out;
  for (std::size_t i = from; i < parts.size(); ++i) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(parts[i], &used));
      if (used != parts[i].size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("generator parameter '" + parts[i] + "' is not an integer");
    }
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

void require_arity(const std::string& family, const std::vector<int>& args, std::size_t arity) {
  if (args.size() != arity)
    throw InputError("family '" + family + "' takes " + std::to_string(arity) + " parameter(s)");
}

}  // namespace

Poset chain(int n) {
  require_range("chain", n, 1, 100000);
  std::vector<Cover> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_covers(n, covers);
}

Poset antichain(int n) {
  require_range("antichain", n, 1, 100000);
  return Poset::from_covers(n, {});
}

Poset boolean(int n) {
  require_range("boolean", n, 0, 12);
  const int size = 1 << n;
  std::vector<Cover> covers;
  std::vector<std::string> names;
  for (int s = 0; s < size; ++s) {
    std::string name = "{";
    for (int b = 0; b < n; ++b)
      if (s >> b & 1) name += std::to_string(b + 1);
    names.push_back(name + "}");
    for (int b = 0; b < n; ++b)
      if (!(s >> b & 1)) covers.emplace_back(s, s | 1 << b);
  }
  return Poset::from_covers(size, covers, std::move(names));
}

Poset product_of_chains(int a, int b) {
  require_range("product", a, 1, 1000);
  require_range("product", b, 1, 1000);
  std::vector<Cover> covers;
  std::vector<std::string> names;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (i + 1 < a) covers.emplace_back(i * b + j, (i + 1) * b + j);
      if (j + 1 < b) covers.emplace_back(i * b + j, i * b + j + 1);
    }
  return Poset::from_covers(a * b, covers, std::move(names));
}

Poset m3() {
  const std::vector<Cover> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return Poset::from_covers(5, covers, {"0", "a", "b", "c", "1"});
}

Poset n5() {
  const std::vector<Cover> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return Poset::from_covers(5, covers, {"0", "a", "b", "c", "1"});
}

Poset r5_example() {
  const std::vector<Cover> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}};
  return Poset::from_covers(5, covers, {"e1", "e2", "e3", "e4", "e5"});
}

Poset v_poset() {
  const std::vector<Cover> covers{{0, 1}, {0, 2}};
  return Poset::from_covers(3, covers, {"x", "y1", "y2"});
}

Poset j_of_poset(const Poset& q) {
  const std::vector<Bitset> ideals = order_ideals(q);
  std::vector<std::string> names;
  for (const auto& i : ideals) names.push_back(set_name(q, i));
  std::vector<Cover> covers;
  for (std::size_t a = 0; a < ideals.size(); ++a)
    for (std::size_t b = 0; b < ideals.size(); ++b)
      if (ideals[b].count() == ideals[a].count() + 1 && ideals[a].is_subset_of(ideals[b]))
        covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Poset::from_covers(static_cast<int>(ideals.size()), covers, std::move(names));
}

Poset bruhat_symmetric(int n) {
  require_range("bruhat", n, 1, 6);
  return symmetric_group_order(n, true);
}

Poset weak_order_symmetric(int n) {
  require_range("weak", n, 1, 5);
  return symmetric_group_order(n, false);
}

Poset tamari(int n) {
  require_range("tamari", n, 1, 6);
  std::vector<std::vector<int>> vectors;
  std::vector<int> b(n);
  // b[i] in [i, n-1] with b[j] <= b[i] whenever i <= j <= b[i] (0-based).
  std::function<void(int)> fill = [&](int i) {
    if (i < 0) {
      vectors.push_back(b);
      return;
    }
    for (int v = i; v < n; ++v) {
      bool ok = true;
      for (int j = i + 1; j <= v && ok; ++j) ok = b[j] <= v;
      if (!ok) continue;
      b[i] = v;
      fill(i - 1);
    }
  };
  fill(n - 1);
  std::sort(vectors.begin(), vectors.end());
  std::vector<std::string> names;
  for (const auto& v : vectors) {
    std::string s;
    for (int x : v) s += std::to_string(x + 1);
    names.push_back(s);
  }
  const int m = static_cast<int>(vectors.size());
  return Poset::from_relation(
      m,
      [&](int x, int y) {
        for (int i = 0; i < n; ++i)
          if (vectors[x][i] > vectors[y][i]) return false;
        return true;
      },
      std::move(names));
}

Poset face_lattice_polygon(int n) {
  require_range("polygon", n, 3, 10000);
  // 0 = empty face, 1..n vertices, n+1..2n edges (edge i joins vertices i, i+1), 2n+1 = polygon.
  std::vector<Cover> covers;
  std::vector<std::string> names{"empty"};
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  names.push_back("P");
  for (int i = 0; i < n; ++i) {
    covers.emplace_back(0, 1 + i);
    covers.emplace_back(1 + i, 1 + n + i);
    covers.emplace_back(1 + (i + 1) % n, 1 + n + i);
    covers.emplace_back(1 + n + i, 2 * n + 1);
  }
  return Poset::from_covers(2 * n + 2, covers, std::move(names));
}

Poset subspace_lattice(int q, int d) {
  if (q != 2 && q != 3) throw InputError("subspace: q must be 2 or 3");
  require_range("subspace", d, 0, 3);
  int count = 1;
  for (int i = 0; i < d; ++i) count *= q;
  auto digits = [&](int v) {
    std::vector<int> out(d);
    for (int i = 0; i < d; ++i, v /= q) out[i] = v % q;
    return out;
  };
  auto number = [&](const std::vector<int>& ds) {
    int v = 0;
    for (int i = d - 1; i >= 0; --i) v = v * q + ds[i];
    return v;
  };
  auto add = [&](int a, int b) {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < d; ++i) x[i] = (x[i] + y[i]) % q;
    return number(x);
  };
  auto scale = [&](int a, int c) {
    auto x = digits(a);
    for (int i = 0; i < d; ++i) x[i] = x[i] * c % q;
    return number(x);
  };
  auto span_with = [&](std::uint32_t space, int v) {
    std::uint32_t out = space;
    for (int u = 0; u < count; ++u)
      if (space >> u & 1)
        for (int c = 0; c < q; ++c) out |= std::uint32_t{1} << add(u, scale(v, c));
    return out;
  };
  std::set<std::uint32_t> spaces{1u};
  std::vector<std::uint32_t> frontier{1u};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto s : frontier)
      for (int v = 0; v < count; ++v) {
        if (s >> v & 1) continue;
        auto t = span_with(s, v);
        if (spaces.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  std::vector<std::uint32_t> list(spaces.begin(), spaces.end());
  std::stable_sort(list.begin(), list.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  const int m = static_cast<int>(list.size());
  return Poset::from_relation(m, [&](int a, int b) { return (list[a] & ~list[b]) == 0; });
}

std::vector<Poset> all_posets(int n) {
  require_range("all_posets", n, 0, 8);
  if (n == 0) return {Poset::from_covers(0, {})};
  std::vector<Poset> previous = all_posets(n - 1);
  std::vector<Poset> out;
  std::unordered_set<std::string> seen;
  for (const Poset& p : previous) {
    // New maximal element n-1 above each order ideal of p.
    for (const Bitset& ideal : order_ideals(p)) {
      std::vector<Cover> covers = p.cover_pairs();
      for (int x : bitset_elements(ideal)) covers.emplace_back(x, n - 1);
      Poset candidate = Poset::from_covers(n, covers);
      if (seen.insert(canonical_form(candidate)).second) out.push_back(std::move(candidate));
    }
  }
  return out;
}

std::vector<Poset> all_lattices(int n) {
  require_range("all_lattices", n, 1, 8);
  if (n == 1) return {chain(1)};
  std::vector<Poset> out;
  for (const Poset& inner : all_posets(n - 2)) {
    Poset p = with_bounds(inner);
    if (is_lattice(p)) out.push_back(std::move(p));
  }
  return out;
}

Poset generate(const std::string& expr) {
  const std::vector<std::string> parts = split(expr, ':');
  if (parts.empty() || parts[0].empty()) throw InputError("empty family name");
  const std::string& family = parts[0];
  const std::vector<int> args = parse_ints(parts, 1);
  if (family == "chain") return require_arity(family, args, 1), chain(args[0]);
  if (family == "antichain") return require_arity(family, args, 1), antichain(args[0]);
  if (family == "boolean") return require_arity(family, args, 1), boolean(args[0]);
  if (family == "product")
    return require_arity(family, args, 2), product_of_chains(args[0], args[1]);
  if (family == "m3") return require_arity(family, args, 0), m3();
  if (family == "n5") return require_arity(family, args, 0), n5();
  if (family == "r5") return require_arity(family, args, 0), r5_example();
  if (family == "v") return require_arity(family, args, 0), v_poset();
  if (family == "bruhat") return require_arity(family, args, 1), bruhat_symmetric(args[0]);
  if (family == "weak") return require_arity(family, args, 1), weak_order_symmetric(args[0]);
  if (family == "tamari") return require_arity(family, args, 1), tamari(args[0]);
  if (family == "polygon") return require_arity(family, args, 1), face_lattice_polygon(args[0]);
  if (family == "subspace")
    return require_arity(family, args, 2), subspace_lattice(args[0], args[1]);
  throw InputError("unknown poset family '" + family + "'");
}

std::vector<Poset> generate_scope(const std::string& expr) {
  std::vector<Poset> out;
  for (const std::string& term : split(expr, ',')) {
    if (term.empty()) throw InputError("empty term in scope '" + expr + "'");
    std::vector<std::string> parts = split(term, ':');
    // Expand a single "a..b" range parameter.
    std::vector<std::string> terms;
    bool expanded = false;
    for (std::size_t i = 1; i < parts.size() && !expanded; ++i) {
      const auto dots = parts[i].find("..");
      if (dots == std::string::npos) continue;
      const std::vector<int> bounds =
          parse_ints({parts[i].substr(0, dots), parts[i].substr(dots + 2)}, 0);
      if (bounds[1] < bounds[0]) throw InputError("empty range in '" + term + "'");
      for (int v = bounds[0]; v <= bounds[1]; ++v) {
        auto copy = parts;
        copy[i] = std::to_string(v);
        std::string joined = copy[0];
        for (std::size_t k = 1; k < copy.size(); ++k) joined += ":" + copy[k];
        terms.push_back(joined);
      }
      expanded = true;
    }
    if (!expanded) terms.push_back(term);
    for (const std::string& t : terms) {
      const std::vector<std::string> tp = split(t, ':');
      const std::string& family = tp[0];
      const std::vector<int> args = parse_ints(tp, 1);
      if (family == "all_posets" || family == "connected_posets") {
        require_arity(family, args, 1);
        for (Poset& p : all_posets(args[0]))
          if (family == "all_posets" || p.is_connected()) out.push_back(std::move(p));
      } else if (family == "all_lattices") {
        require_arity(family, args, 1);
        for (Poset& p : all_lattices(args[0])) out.push_back(std::move(p));
      } else if (family == "j_of_all") {
        require_arity(family, args, 1);
        for (const Poset& q : all_posets(args[0])) out.push_back(j_of_poset(q));
      } else {
        out.push_back(generate(t));
      }
    }
  }
  return out;
}

}  // namespace echelon
