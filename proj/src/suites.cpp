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

#include "echelon/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "echelon/canonical.hpp"
#include "echelon/errors.hpp"
#include "echelon/generators.hpp"
#include "echelon/io.hpp"
#include "echelon/lattice.hpp"
#include "echelon/linear_extensions.hpp"
#include "echelon/macneille.hpp"
#include "echelon/trim.hpp"

namespace echelon {
namespace {

using nlohmann::json;

struct Context {
  const SuiteOptions& options;
  std::mt19937_64 rng;
  Arithmetic mode;
  InstanceResult& out;

  void check(bool ok, const std::string& name, json witness = json::object()) {
    ++out.checks;
    if (!ok) out.violations.push_back({name, std::move(witness)});
  }
  void skip() { out.applicable = false; }
};

std::string bij(const ElementBijection& f) { return format_bijection(f); }
std::string ext(const LinearExtension& s) { return format_extension(s); }

// Every linear extension when there are at most options.extension_cap of them,
// otherwise options.samples uniform samples. With sampling off, `fallback` runs
// instead if given, else CapacityError.
void for_each_extension(const Poset& p, Context& ctx,
                        const std::function<void(const LinearExtension&)>& visit,
                        const std::function<void()>& fallback = {}) {
  bool small = false;
  if (p.size() <= 64) small = count_linear_extensions(p) <= ctx.options.extension_cap;
  if (small) {
    for_each_linear_extension(p, [&](const LinearExtension& s) {
      visit(s);
      return true;
    });
    return;
  }
  if (ctx.options.samples <= 0 && fallback) {
    ctx.out.exhaustive = false;
    ctx.out.stats["fast_test_fallback"] = true;
    return fallback();
  }
  if (ctx.options.samples <= 0)
    throw CapacityError("more than " + std::to_string(ctx.options.extension_cap) +
                        " linear extensions and sampling is disabled");
  ctx.out.exhaustive = false;
  std::optional<ExtensionCounter> counter;
  if (p.size() <= 64) counter.emplace(p);
  for (int s = 0; s < ctx.options.samples; ++s)
    visit(counter ? counter->sample(ctx.rng) : sample_greedy_extension(p, ctx.rng));
}

std::optional<Lattice> lattice_or_skip(const Poset& p, Context& ctx) {
  try {
    return Lattice(p);
  } catch (const NotALatticeError&) {
    ctx.skip();
    return std::nullopt;
  }
}

json witness_of(const IndependenceReport& r) {
  if (!r.witness) return json::object();
  const auto& w = *r.witness;
  return {{"x", w.x},
          {"sigma", ext(w.sigma)},
          {"sigma_prime", ext(w.sigma_prime)},
          {"y", w.y},
          {"y_prime", w.y_prime},
          {"representative", w.representative}};
}

IndependenceReport independence(const Poset& p, Context& ctx) {
  return is_echelon_independent_fast(p, ctx.mode);
}

void check_fast_test_matches(const Poset& p, Context& ctx, const ElementBijection& row) {
  const IndependenceReport r = independence(p, ctx);
  ctx.check(r.independent, "fast_test_independent", witness_of(r));
  if (r.independent)
    ctx.check(*r.canonical_map == row, "canonical_echelonmotion_equals_rowmotion",
              {{"ech", bij(*r.canonical_map)}, {"row", bij(row)}});
}

// Suites ------------------------------------------------------------------

void suite_distributive(const Poset& p, Context& ctx) {
  auto l = lattice_or_skip(p, ctx);
  if (!l) return;
  if (!is_distributive(*l)) return ctx.skip();
  const ElementBijection row = birkhoff_rowmotion(*l);
  ctx.check(row == barnard_rowmotion(*l), "birkhoff_equals_barnard", {{"birkhoff", bij(row)}});
  for_each_extension(
      p, ctx,
      [&](const LinearExtension& s) {
        const ElementBijection e = echelonmotion(p, s, ctx.mode);
        ctx.check(e == row, "echelonmotion_equals_rowmotion",
                  {{"sigma", ext(s)}, {"ech", bij(e)}, {"row", bij(row)}});
      },
      [&] { check_fast_test_matches(p, ctx, row); });
}

void suite_semidist(const Poset& p, Context& ctx) {
  auto l = lattice_or_skip(p, ctx);
  if (!l) return;
  const bool sd = is_semidistributive(*l);
  ctx.out.stats["semidistributive"] = sd;
  if (!sd) {
    const IndependenceReport r = independence(p, ctx);
    ctx.check(!r.independent, "non_semidistributive_is_dependent", witness_of(r));
    return;
  }
  const ElementBijection row = barnard_rowmotion(*l);
  for_each_extension(
      p, ctx,
      [&](const LinearExtension& s) {
        const ElementBijection e = echelonmotion(p, s, ctx.mode);
        ctx.check(e == row, "echelonmotion_equals_rowmotion",
                  {{"sigma", ext(s)}, {"ech", bij(e)}, {"row", bij(row)}});
      },
      [&] { check_fast_test_matches(p, ctx, row); });
}

void suite_trim_vertebral(const Poset& p, Context& ctx) {
  auto l = lattice_or_skip(p, ctx);
  if (!l) return;
  const auto canonical = trim_data(*l);
  if (!canonical) return ctx.skip();
  const ElementBijection row = trim_rowmotion(*l, *canonical);
  std::set<std::vector<int>> distinct;
  int chains = 0;
  for (const auto& chain : maximum_length_chains(p)) {
    ++chains;
    const TrimData t = trim_data_for_chain(*l, chain);
    bool same_labels = true;
    for (auto [x, y] : p.cover_pairs()) same_labels = same_labels && t.label(x, y) == canonical->label(x, y);
    ctx.check(same_labels, "edge_labels_independent_of_chain", {{"chain", chain}});
    ctx.check(t.kappa == canonical->kappa, "kappa_independent_of_chain", {{"chain", chain}});
    const LinearExtension s = vertebral_extension(*l, t);
    distinct.insert(s.order());
    const ElementBijection r = trim_rowmotion(*l, t);
    ctx.check(r == row, "rowmotion_independent_of_chain", {{"chain", chain}, {"row", bij(r)}});
    const ElementBijection e = echelonmotion(p, s, ctx.mode);
    ctx.check(e == r, "vertebral_echelonmotion_equals_rowmotion",
              {{"chain", chain}, {"sigma", ext(s)}, {"ech", bij(e)}, {"row", bij(r)}});
  }
  ctx.out.stats["maximum_length_chains"] = chains;
  ctx.out.stats["distinct_vertebral_extensions"] = distinct.size();
  ctx.out.stats["semidistributive"] = is_semidistributive(*l);
}

void suite_eulerian(const Poset& p, Context& ctx) {
  if (!is_eulerian(p)) return ctx.skip();
  const auto rank = *rank_function(p);
  for_each_extension(p, ctx, [&](const LinearExtension& s) {
    const ElementBijection e = echelonmotion(p, s, ctx.mode);
    ctx.check(e.is_involution(), "echelonmotion_is_involution", {{"sigma", ext(s)}, {"ech", bij(e)}});
    const ExactMatrix w = cartan_matrix(p, s).matrix;
    ExactMatrix dwd = w;
    for (int i = 0; i < w.rows(); ++i)
      for (int j = 0; j < w.cols(); ++j)
        if ((rank[s.at(i)] + rank[s.at(j)]) % 2 != 0) dwd(i, j) = -dwd(i, j);
    ctx.check(inverse(w) == dwd, "cartan_inverse_is_sign_conjugate", {{"sigma", ext(s)}});
  });
}

void suite_bounded(const Poset& p, Context& ctx) {
  if (!p.is_connected()) return ctx.skip();
  const IndependenceReport r = independence(p, ctx);
  ctx.out.stats["independent"] = r.independent;
  if (r.independent) ctx.check(p.is_bounded(), "independent_connected_is_bounded");
}

void suite_fixed_points(const Poset& p, Context& ctx) {
  if (!p.is_connected() || p.size() < 2) return ctx.skip();
  const IndependenceReport r = independence(p, ctx);
  ctx.out.stats["independent"] = r.independent;
  if (r.independent)
    ctx.check(r.canonical_map->fixed_points().empty(), "independent_has_no_fixed_points",
              {{"ech", bij(*r.canonical_map)}});
}

void suite_macneille(const Poset& p, Context& ctx) {
  if (!p.is_connected()) return ctx.skip();
  const IndependenceReport r = independence(p, ctx);
  const Completion c = macneille_completion(p);
  ctx.out.stats["independent"] = r.independent;
  ctx.out.stats["completion_size"] = c.lattice.size();
  if (r.independent)
    ctx.check(is_semidistributive(c.lattice), "independent_completion_is_semidistributive");
  else if (is_distributive(c.lattice))
    ctx.out.stats["dependent_with_distributive_completion"] = true;
}

void suite_modular_conjecture(const Poset& p, Context& ctx) {
  auto l = lattice_or_skip(p, ctx);
  if (!l) return;
  if (!is_modular(*l)) return ctx.skip();
  for_each_extension(p, ctx, [&](const LinearExtension& s) {
    const ElementBijection e = echelonmotion(p, s, ctx.mode);
    for (int x = 0; x < p.size(); ++x)
      ctx.check(p.covers_up(e(x)).size() == p.covers_down(x).size(),
                "upper_covers_of_image_match_lower_covers", {{"sigma", ext(s)}, {"x", x}, {"ech", bij(e)}});
  });
}

void suite_dilworth(const Poset& p, Context& ctx) {
  auto l = lattice_or_skip(p, ctx);
  if (!l) return;
  if (!is_modular(*l)) return ctx.skip();
  for (const auto& [k, counts] : dilworth_profile(*l))
    ctx.check(counts.first == counts.second, "cover_count_profile_symmetric",
              {{"k", k}, {"covered_by_k", counts.first}, {"covering_k", counts.second}});
}

void suite_independence_crosscheck(const Poset& p, Context& ctx) {
  const IndependenceReport fast = independence(p, ctx);
  IndependenceReport other;
  const bool small = p.size() <= 64 && count_linear_extensions(p) <= ctx.options.extension_cap;
  if (small) {
    other = is_echelon_independent_brute(p, ctx.options.extension_cap);
  } else {
    if (ctx.options.samples <= 0)
      throw CapacityError("independence-crosscheck: too many linear extensions for brute force");
    ctx.out.exhaustive = false;
    other = is_echelon_independent_sampled(p, ctx.options.samples, ctx.rng);
  }
  ctx.out.stats["independent"] = fast.independent;
  json w{{"fast", fast.independent}, {"reference", other.independent},
         {"fast_witness", witness_of(fast)}, {"reference_witness", witness_of(other)}};
  if (small || !other.independent)
    ctx.check(fast.independent == other.independent, "fast_matches_reference", w);
  if (fast.independent && other.independent)
    ctx.check(*fast.canonical_map == *other.canonical_map, "canonical_maps_agree", w);
}

void suite_bruhat_s6_witness(const Poset& p, Context& ctx) {
  int x = -1, y_expected = -1, informational = -1;
  for (int e = 0; e < p.size(); ++e) {
    if (p.name(e) == "241635") x = e;
    if (p.name(e) == "513264") y_expected = e;
    if (p.name(e) == "315462") informational = e;
  }
  if (x < 0 || y_expected < 0) return ctx.skip();
  std::vector<int> lex(p.size());
  for (int e = 0; e < p.size(); ++e) lex[e] = e;
  const LinearExtension sigma(p, lex);
  const int y = echelon_image(p, sigma, x, Arithmetic::exact);
  ctx.check(y == y_expected, "lex_extension_image", {{"x", p.name(x)}, {"image", p.name(y)}});
  const LinearExtension xi = build_constrained_extension(p, ExtensionClass::xi1, x, y);
  const int y_xi = echelon_image(p, xi, x, Arithmetic::exact);
  ctx.check(y_xi != y, "xi1_representative_image_differs",
            {{"x", p.name(x)}, {"sigma_prime", ext(xi)}, {"image", p.name(y_xi)}});
  ctx.out.stats["lex_image"] = p.name(y);
  ctx.out.stats["xi1_image"] = p.name(y_xi);
  ctx.out.stats["xi1_image_is_315462"] = y_xi == informational;
}

void suite_meet_irreducible_maxima(const Poset& p, Context& ctx) {
  auto l = lattice_or_skip(p, ctx);
  if (!l) return;
  for (const Lattice* side : {&*l}) {
    for (auto [x, y] : side->poset().cover_pairs()) {
      Bitset s(side->size());
      for (int z = 0; z < side->size(); ++z)
        if (side->meet(z, y) == x) s.set(z);
      for (int z : bitset_elements(s))
        if ((side->poset().up_set(z) & s).count() == 1)
          ctx.check(side->is_meet_irreducible(z), "maximal_meet_complement_is_meet_irreducible",
                    {{"x", x}, {"y", y}, {"z", z}});
    }
  }
  const Lattice d = l->dual();
  for (auto [x, y] : d.poset().cover_pairs()) {
    Bitset s(d.size());
    for (int z = 0; z < d.size(); ++z)
      if (d.meet(z, y) == x) s.set(z);
    for (int z : bitset_elements(s))
      if ((d.poset().up_set(z) & s).count() == 1)
        ctx.check(d.is_meet_irreducible(z), "minimal_join_complement_is_join_irreducible",
                  {{"x", y}, {"y", x}, {"z", z}});
  }
}

void suite_semidistributivity_criterion(const Poset& p, Context& ctx) {
  auto l = lattice_or_skip(p, ctx);
  if (!l) return;
  const Lattice d = l->dual();
  ctx.check(meet_semidistributive_by_definition(*l) == meet_semidistributive_by_irreducibles(*l),
            "meet_side_routes_agree");
  ctx.check(meet_semidistributive_by_definition(d) == meet_semidistributive_by_irreducibles(d),
            "join_side_routes_agree");
}

void suite_popdown_mobius(const Poset& p, Context& ctx) {
  auto l = lattice_or_skip(p, ctx);
  if (!l) return;
  if (!is_semidistributive(*l) && !is_trim(*l)) return ctx.skip();
  for (int x = 0; x < p.size(); ++x) {
    const long long mu = mobius(p, popdown(*l, x), x);
    ctx.check(mu == 1 || mu == -1, "popdown_mobius_is_unit", {{"x", x}, {"mu", mu}});
  }
}

void suite_label_sets(const Poset& p, Context& ctx) {
  auto l = lattice_or_skip(p, ctx);
  if (!l) return;
  if (!is_semidistributive(*l)) return ctx.skip();
  const LabelSets sets = label_sets(*l);
  std::set<Bitset> downs(sets.down.begin(), sets.down.end());
  std::set<Bitset> ups(sets.up.begin(), sets.up.end());
  ctx.check(static_cast<int>(downs.size()) == p.size(), "down_label_sets_injective");
  ctx.check(static_cast<int>(ups.size()) == p.size(), "up_label_sets_injective");
  ctx.check(downs == ups, "label_set_families_equal");
}

void suite_extremal_images(const Poset& p, Context& ctx) {
  if (!p.is_connected()) return ctx.skip();
  for (int x : p.minimals())
    for (int y : p.maximals()) {
      if (!p.leq(x, y) || (x == y && p.size() > 1)) continue;
      std::vector<ExtensionBlock> blocks{{{x}, x}};
      std::vector<int> middle;
      for (int z = 0; z < p.size(); ++z)
        if (z != x && z != y) middle.push_back(z);
      if (!middle.empty()) blocks.push_back({middle, std::nullopt});
      if (y != x) blocks.push_back({{y}, y});
      const LinearExtension s = extension_from_blocks(p, blocks);
      const int image = echelon_image(p, s, x, ctx.mode);
      ctx.check(image == y, "minimal_first_maps_to_maximal_last",
                {{"x", x}, {"y", y}, {"sigma", ext(s)}, {"image", image}});
    }
}

void suite_upsilon_bound(const Poset& p, Context& ctx) {
  auto l = lattice_or_skip(p, ctx);
  if (!l) return;
  std::vector<long long> mu(p.size());
  bool all_nonzero = true;
  for (int x = 0; x < p.size(); ++x) {
    mu[x] = mobius(p, popdown(*l, x), x);
    all_nonzero = all_nonzero && mu[x] != 0;
  }
  ctx.out.stats["all_popdown_mobius_nonzero"] = all_nonzero;
  for_each_extension(p, ctx, [&](const LinearExtension& s) {
    const ElementBijection e = echelonmotion(p, s, ctx.mode);
    std::vector<int> image(p.size());
    for (int x = 0; x < p.size(); ++x) {
      image[x] = max_extension_upsilon(*l, s, x);
      if (mu[x] != 0)
        ctx.check(s.position(e(x)) <= s.position(image[x]), "image_not_after_upsilon_maximum",
                  {{"sigma", ext(s)}, {"x", x}, {"ech", bij(e)}, {"upsilon_max", image[x]}});
    }
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    const bool bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (all_nonzero && bijective)
      ctx.check(ElementBijection(image) == e, "upsilon_maximum_map_is_echelonmotion",
                {{"sigma", ext(s)}, {"ech", bij(e)}});
  });
}

void suite_trim_structure(const Poset& p, Context& ctx) {
  auto l = lattice_or_skip(p, ctx);
  if (!l) return;
  const auto t = trim_data(*l);
  if (!t) return ctx.skip();
  const LabelSets sets = trim_label_sets(*l, *t);
  std::set<Bitset> downs, ups;
  for (int x = 0; x < p.size(); ++x) {
    Bitset kappa_up(p.size());
    for (int j : bitset_elements(sets.up[x])) kappa_up.set(t->kappa.at(j));
    ctx.check(l->join_of(sets.down[x]) == x, "element_is_join_of_down_labels", {{"x", x}});
    ctx.check(l->meet_of(kappa_up) == x, "element_is_meet_of_kappa_up_labels", {{"x", x}});
    ctx.check(is_independent_in_galois_graph(*t, sets.down[x]), "down_labels_independent", {{"x", x}});
    ctx.check(is_independent_in_galois_graph(*t, sets.up[x]), "up_labels_independent", {{"x", x}});
    downs.insert(sets.down[x]);
    ups.insert(sets.up[x]);
  }
  ctx.check(static_cast<int>(downs.size()) == p.size(), "down_labels_injective");
  ctx.check(static_cast<int>(ups.size()) == p.size(), "up_labels_injective");
  ctx.check(count_galois_independent_sets(*l, *t) == static_cast<std::uint64_t>(p.size()),
            "independent_set_count_equals_size");

  const LinearExtension s = vertebral_extension(*l, *t);
  ctx.check(is_linear_extension(p, s.order()), "vertebral_order_is_linear_extension");

  for (int v = 0; v < p.size(); ++v)
    for (int w : bitset_elements(p.up_set(v))) {
      bool ok = true;
      try {
        interval_trim_restriction(*l, *t, v, w);
      } catch (const InternalInconsistency&) {
        ok = false;
      }
      ctx.check(ok, "interval_gamma_relabeling", {{"v", v}, {"w", w}});
    }

  for (int v = 0; v < p.size(); ++v) {
    const IntervalTrim up = interval_trim_restriction(*l, *t, v, l->top());
    const LinearExtension local = vertebral_extension(up.lattice, up.data);
    std::vector<int> expected = up.sub.to_parent;
    std::sort(expected.begin(), expected.end(),
              [&](int a, int b) { return s.position(a) < s.position(b); });
    std::vector<int> got;
    for (int c : local.order()) got.push_back(up.sub.to_parent[c]);
    ctx.check(got == expected, "upper_interval_vertebral_is_restriction", {{"v", v}});
  }
}

void suite_duality(const Poset& p, Context& ctx) {
  const Poset d = p.dual();
  for_each_extension(p, ctx, [&](const LinearExtension& s) {
    const ElementBijection e = echelonmotion(p, s, ctx.mode);
    const ElementBijection e_dual = echelonmotion(d, s.reversed_for(d), ctx.mode);
    ctx.check(e_dual == e.inverse(), "dual_reversed_is_inverse",
              {{"sigma", ext(s)}, {"ech", bij(e)}, {"dual_ech", bij(e_dual)}});
  });
}

void suite_coxeter_factorization(const Poset& p, Context& ctx) {
  auto l = lattice_or_skip(p, ctx);
  if (!l) return;
  const bool distributive = is_distributive(*l);
  for_each_extension(p, ctx, [&](const LinearExtension& s) {
    ctx.check(pu_check(p, s) == distributive, "pu_factorization_iff_distributive",
              {{"sigma", ext(s)}, {"distributive", distributive}});
  });
}

using SuiteFn = void (*)(const Poset&, Context&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"distributive", suite_distributive},
      {"semidist", suite_semidist},
      {"trim-vertebral", suite_trim_vertebral},
      {"eulerian", suite_eulerian},
      {"bounded", suite_bounded},
      {"fixed-points", suite_fixed_points},
      {"macneille", suite_macneille},
      {"modular-conjecture", suite_modular_conjecture},
      {"dilworth", suite_dilworth},
      {"independence-crosscheck", suite_independence_crosscheck},
      {"bruhat-s6-witness", suite_bruhat_s6_witness},
      {"meet-irreducible-maxima", suite_meet_irreducible_maxima},
      {"semidistributivity-criterion", suite_semidistributivity_criterion},
      {"popdown-mobius", suite_popdown_mobius},
      {"label-sets", suite_label_sets},
      {"extremal-images", suite_extremal_images},
      {"upsilon-bound", suite_upsilon_bound},
      {"trim-structure", suite_trim_structure},
      {"duality", suite_duality},
      {"coxeter-factorization", suite_coxeter_factorization},
  };
  return r;
}

}  // namespace

std::uint64_t SuiteReport::checks() const {
  std::uint64_t c = 0;
  for (const auto& r : instances) c += r.checks;
  return c;
}

std::uint64_t SuiteReport::violation_count() const {
  std::uint64_t c = 0;
  for (const auto& r : instances) c += r.violations.size();
  return c;
}

int SuiteReport::applicable_count() const {
  return static_cast<int>(
      std::count_if(instances.begin(), instances.end(), [](const auto& r) { return r.applicable; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::string default_scope(const std::string& suite) {
  if (suite == "distributive") return "j_of_all:1..4";
  if (suite == "eulerian") return "boolean:2..3,polygon:3..5";
  if (suite == "bruhat-s6-witness") return "bruhat:6";
  if (suite == "modular-conjecture" || suite == "dilworth") return "all_lattices:1..7";
  if (suite == "bounded" || suite == "fixed-points" || suite == "macneille" ||
      suite == "independence-crosscheck" || suite == "extremal-images")
    return "connected_posets:1..6";
  if (suite == "duality") return "all_posets:1..5";
  return "all_lattices:1..7";
}

Arithmetic arithmetic_for(const Poset& p, const SuiteOptions& options) {
  return !options.exact_only && p.size() > 64 ? Arithmetic::prescreened : Arithmetic::exact;
}

SuiteReport verify_suite(const std::string& suite, const std::string& scope,
                         const SuiteOptions& options) {
  if (!registry().count(suite)) throw InputError("unknown suite '" + suite + "'");
  return verify_suite(suite, generate_scope(scope), scope, options);
}

SuiteReport verify_suite(const std::string& suite, const std::vector<Poset>& instances,
                         const std::string& scope_label, const SuiteOptions& options) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw InputError("unknown suite '" + suite + "'");
  const SuiteFn fn = it->second;
  const auto start = std::chrono::steady_clock::now();

  SuiteReport report;
  report.suite = suite;
  report.scope = scope_label;
  report.seed = options.seed;
  report.instances.resize(instances.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      InstanceResult& r = report.instances[i];
      r.instance = static_cast<int>(i);
      r.poset = instances[i];
      std::seed_seq seq{options.seed, static_cast<std::uint64_t>(i)};
      Context ctx{options, std::mt19937_64(seq), arithmetic_for(instances[i], options), r};
      try {
        fn(instances[i], ctx);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = instances.size();
        return;
      }
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json instance_to_json(const SuiteReport& report, const InstanceResult& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"check", v.check}, {"witness", v.witness}});
  return {{"suite", report.suite},
          {"scope", report.scope},
          {"instance", r.instance},
          {"poset", poset_to_json(r.poset)},
          {"applicable", r.applicable},
          {"exhaustive", r.exhaustive},
          {"arithmetic", to_string(arithmetic_for(r.poset, SuiteOptions{}))},
          {"seed", report.seed},
          {"checks", r.checks},
          {"violations", violations},
          {"stats", r.stats}};
}

nlohmann::json summary_to_json(const SuiteReport& report) {
  return {{"suite", report.suite},
          {"scope", report.scope},
          {"seed", report.seed},
          {"instances", report.instances.size()},
          {"applicable", report.applicable_count()},
          {"checks", report.checks()},
          {"violations", report.violation_count()},
          {"passed", report.passed()},
          {"seconds", report.seconds}};
}

}  // namespace echelon
