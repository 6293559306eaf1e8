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

#ifndef ECHELON_SUITES_HPP
#define ECHELON_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "echelon/echelon.hpp"
#include "echelon/poset.hpp"

namespace echelon {

struct Violation {
  std::string check;
  nlohmann::json witness;  // together with the instance poset, enough to reproduce
};

struct InstanceResult {
  int instance = 0;
  Poset poset;
  bool applicable = true;  // false when the instance falls outside the suite's hypotheses
  bool exhaustive = true;  // false when extensions were sampled
  std::uint64_t checks = 0;
  std::vector<Violation> violations;
  nlohmann::json stats = nlohmann::json::object();
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int jobs = 1;
  bool exact_only = false;
  /// Exhaustive over linear extensions up to this count per instance.
  std::uint64_t extension_cap = 100'000;
  /// Above the cap: sample this many extensions. When 0, suites with an
  /// independence-test fallback use it and the rest throw CapacityError.
  int samples = 0;
};

struct SuiteReport {
  std::string suite;
  std::string scope;
  std::uint64_t seed = 0;
  std::vector<InstanceResult> instances;
  double seconds = 0;

  std::uint64_t checks() const;
  std::uint64_t violation_count() const;
  int applicable_count() const;
  bool passed() const { return violation_count() == 0; }
};

/// Names accepted by verify_suite.
const std::vector<std::string>& suite_names();
/// Scope used when the caller does not give one.
std::string default_scope(const std::string& suite);

SuiteReport verify_suite(const std::string& suite, const std::string& scope,
                         const SuiteOptions& options = {});
SuiteReport verify_suite(const std::string& suite, const std::vector<Poset>& instances,
                         const std::string& scope_label, const SuiteOptions& options = {});

/// Deterministic per-instance JSONL record (no timing).
nlohmann::json instance_to_json(const SuiteReport& report, const InstanceResult& r);
/// Aggregate record, including wall-clock seconds.
nlohmann::json summary_to_json(const SuiteReport& report);

/// Pivot arithmetic used for a poset of this size under these options.
Arithmetic arithmetic_for(const Poset& p, const SuiteOptions& options);

}  // namespace echelon

#endif  // ECHELON_SUITES_HPP
