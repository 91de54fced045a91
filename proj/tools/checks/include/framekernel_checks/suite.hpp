// Copyright 2026 The framekernel Authors
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

// Named property checks shared by the `suite` command and the acceptance
// test binary. Every check is a deterministic function of its options.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "framekernel/numeric.hpp"

namespace framekernel::checks {

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Trial-count multiplier: 1 for "fast", 3 for "full".
  std::size_t scale = 1;
  double tol = kDefaultTolerance;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t trials = 0;
  std::string failure;
  nlohmann::json details = nlohmann::json::object();
  double elapsed_ms = 0.0;
};

struct CheckEntry {
  std::string name;
  std::string summary;
  std::function<CheckResult(const SuiteOptions&)> run;
};

const std::vector<CheckEntry>& registered_checks();

/// Runs one check by name, timing it and turning exceptions into failures.
/// Throws std::out_of_range for unknown names.
CheckResult run_check(const std::string& name, const SuiteOptions& options);

struct SuiteSummary {
  std::string suite;
  std::uint64_t seed = 0;
  bool pass = true;
  std::string first_failure;
  std::vector<CheckResult> checks;
};

bool is_known_suite(const std::string& name);

/// "fast" or "full"; throws std::invalid_argument otherwise.
SuiteSummary run_suite(const std::string& name, std::uint64_t seed,
                       double tol = kDefaultTolerance);

nlohmann::json to_json(const CheckResult& result);
nlohmann::json to_json(const SuiteSummary& summary);

/// Copy of `j` with every "elapsed_ms" member removed, at any depth.
nlohmann::json strip_timing(const nlohmann::json& j);

}  // namespace framekernel::checks
