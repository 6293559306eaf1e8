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

// echelon: generate posets, compute echelonmotion and rowmotion, run the
// verification suites.
//
// Exit codes: 0 pass, 1 violation or dependence found, 2 input error,
// 3 capacity exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "echelon/echelon.hpp"
#include "echelon/errors.hpp"
#include "echelon/generators.hpp"
#include "echelon/io.hpp"
#include "echelon/lattice.hpp"
#include "echelon/linear_extensions.hpp"
#include "echelon/macneille.hpp"
#include "echelon/suites.hpp"
#include "echelon/trim.hpp"

namespace {

using namespace echelon;
using nlohmann::json;

struct Globals {
  std::uint64_t seed = 1;
  int jobs = 1;
  bool exact_only = false;
  std::string out;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw InputError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// A path to a poset-v1 file, "-" for stdin, or a generator expression such as
// "tamari:4".
Poset load_poset(const std::string& source) {
  if (source == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return read_poset(ss.str());
  }
  if (std::filesystem::exists(source)) {
    std::ifstream in(source);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_poset(ss.str());
  }
  return generate(source);
}

Arithmetic mode_for(const Poset& p, const Globals& g) {
  SuiteOptions o;
  o.exact_only = g.exact_only;
  return arithmetic_for(p, o);
}

LinearExtension extension_arg(const Poset& p, const std::string& text) {
  return text.empty() ? first_linear_extension(p) : parse_extension(p, text);
}

int cmd_gen(const Globals& g, const std::string& scope) {
  Output out(g.out);
  const std::vector<Poset> posets = generate_scope(scope);
  if (posets.size() == 1) {
    out.stream() << write_poset(posets.front()) << "\n";
  } else {
    for (const Poset& p : posets) out.stream() << poset_to_json(p).dump() << "\n";
  }
  return 0;
}

int cmd_ech(const Globals& g, const std::string& source, const std::string& extension,
            bool all) {
  const Poset p = load_poset(source);
  Output out(g.out);
  if (all) {
    for_each_linear_extension(p, [&](const LinearExtension& s) {
      out.stream() << format_extension(s) << " " << format_bijection(echelonmotion(p, s, mode_for(p, g)))
                   << "\n";
      return true;
    });
    return 0;
  }
  const LinearExtension s = extension_arg(p, extension);
  out.stream() << format_bijection(echelonmotion(p, s, mode_for(p, g))) << "\n";
  return 0;
}

int cmd_row(const Globals& g, const std::string& source) {
  const Lattice l(load_poset(source));
  Output out(g.out);
  std::string method;
  ElementBijection row;
  if (is_distributive(l)) {
    method = "birkhoff";
    row = birkhoff_rowmotion(l);
  } else if (is_semidistributive(l)) {
    method = "barnard";
    row = barnard_rowmotion(l);
  } else if (const auto t = trim_data(l)) {
    method = "trim";
    row = trim_rowmotion(l, *t);
  } else {
    throw NotSemidistributiveError("rowmotion needs a semidistributive or trim lattice");
  }
  out.stream() << format_bijection(row) << "\n";
  std::cerr << "method: " << method << "\n";
  return 0;
}

int cmd_independent(const Globals& g, const std::string& source, const std::string& method,
                    std::uint64_t cap, int samples) {
  const Poset p = load_poset(source);
  IndependenceReport r;
  if (method == "fast") {
    r = is_echelon_independent_fast(p, mode_for(p, g));
  } else if (method == "brute") {
    r = is_echelon_independent_brute(p, cap);
  } else {
    std::mt19937_64 rng(g.seed);
    r = is_echelon_independent_sampled(p, samples, rng);
  }
  json j{{"independent", r.independent},
         {"method", to_string(r.method)},
         {"arithmetic", to_string(r.arithmetic)},
         {"exhaustive", r.exhaustive},
         {"extensions_checked", r.extensions_checked}};
  if (r.canonical_map) j["echelonmotion"] = format_bijection(*r.canonical_map);
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"x", w.x},
                    {"sigma", format_extension(w.sigma)},
                    {"y", w.y},
                    {"sigma_prime", format_extension(w.sigma_prime)},
                    {"y_prime", w.y_prime},
                    {"representative", w.representative}};
  }
  Output out(g.out);
  out.stream() << j.dump() << "\n";
  return r.independent ? 0 : 1;
}

int cmd_complete(const Globals& g, const std::string& source) {
  const Completion c = macneille_completion(load_poset(source));
  Output out(g.out);
  out.stream() << write_poset(c.lattice.poset()) << "\n";
  std::cerr << "embed: ";
  for (std::size_t i = 0; i < c.embed.size(); ++i) std::cerr << (i ? "," : "") << c.embed[i];
  std::cerr << "\n";
  return 0;
}

int cmd_props(const Globals& g, const std::string& source) {
  const Poset p = load_poset(source);
  json j{{"n", p.size()},
         {"connected", p.is_connected()},
         {"bounded", p.is_bounded()},
         {"graded", rank_function(p).has_value()},
         {"eulerian", is_eulerian(p)},
         {"lattice", false}};
  if (p.size() <= 64) j["linear_extensions"] = count_linear_extensions(p).get_str();
  if (p.size() <= 6) j["echelon_classes"] = echelon_class_count(p);
  if (is_lattice(p)) {
    const Lattice l(p);
    j["lattice"] = true;
    j["distributive"] = is_distributive(l);
    j["modular"] = is_modular(l);
    j["meet_semidistributive"] = is_meet_semidistributive(l);
    j["join_semidistributive"] = is_join_semidistributive(l);
    j["extremal"] = is_extremal(l);
    j["trim"] = is_trim(l);
    j["join_irreducibles"] = l.join_irreducibles().size();
    j["meet_irreducibles"] = l.meet_irreducibles().size();
  }
  const IndependenceReport r = is_echelon_independent_fast(p, mode_for(p, g));
  j["echelon_independent"] = r.independent;
  Output out(g.out);
  out.stream() << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const Globals& g, const std::string& suite, std::string scope, std::uint64_t cap,
               int samples) {
  if (scope.empty()) scope = default_scope(suite);
  SuiteOptions o;
  o.seed = g.seed;
  o.jobs = g.jobs;
  o.exact_only = g.exact_only;
  o.extension_cap = cap;
  o.samples = samples;
  const SuiteReport report = verify_suite(suite, scope, o);
  Output out(g.out);
  for (const auto& r : report.instances) out.stream() << instance_to_json(report, r).dump() << "\n";
  std::cerr << summary_to_json(report).dump() << "\n";
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Echelonmotion and rowmotion on finite posets"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for verify")->capture_default_str();
  app.add_flag("--exact-only", g.exact_only, "Never use modular prescreening");
  app.add_option("--out", g.out, "Output file (default stdout)");

  std::string scope, source, extension, method = "fast", suite, verify_scope;
  bool all = false;
  std::uint64_t cap = kDefaultExtensionCap;
  std::uint64_t suite_cap = SuiteOptions{}.extension_cap;
  int samples = 200;
  int suite_samples = 0;

  auto* gen = app.add_subcommand("gen", "Write generated posets (poset-v1, or JSONL for several)");
  gen->add_option("scope", scope, "Generator expression, e.g. tamari:4 or all_lattices:1..5")->required();

  auto* ech = app.add_subcommand("ech", "Echelonmotion as a 1-based image array");
  ech->add_option("poset", source, "poset-v1 file, '-' or generator expression")->required();
  ech->add_option("-e,--extension", extension, "Positions by element, e.g. 1,2,3,4,5 (default: first)");
  ech->add_flag("--all", all, "Every linear extension");

  auto* row = app.add_subcommand("row", "Rowmotion of a distributive, semidistributive or trim lattice");
  row->add_option("poset", source)->required();

  auto* ind = app.add_subcommand("independent", "Decide echelon-independence (exit 1 when dependent)");
  ind->add_option("poset", source)->required();
  ind->add_option("--method", method)->check(CLI::IsMember({"fast", "brute", "sampled"}))->capture_default_str();
  ind->add_option("--cap", cap, "Extension cap for brute")->capture_default_str();
  ind->add_option("--samples", samples, "Extensions for sampled")->capture_default_str();

  auto* comp = app.add_subcommand("complete", "MacNeille completion");
  comp->add_option("poset", source)->required();

  auto* props = app.add_subcommand("props", "Order and lattice properties as JSON");
  props->add_option("poset", source)->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite, JSONL per instance");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--scope", verify_scope, "Generator expression (default depends on suite)");
  verify->add_option("--cap", suite_cap, "Exhaustive up to this many extensions")->capture_default_str();
  verify->add_option("--samples", suite_samples,
                     "Seeded extensions to sample above the cap (0: no sampling)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(g, scope);
    if (*ech) return cmd_ech(g, source, extension, all);
    if (*row) return cmd_row(g, source);
    if (*ind) return cmd_independent(g, source, method, cap, samples);
    if (*comp) return cmd_complete(g, source);
    if (*props) return cmd_props(g, source);
    if (*verify) return cmd_verify(g, suite, verify_scope, suite_cap, suite_samples);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
