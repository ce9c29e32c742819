// Copyright 2026 The macbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Randomized property suites. Each suite draws seeded instances and checks
// inequalities or identities between the bounds, error probabilities and
// linear-algebra routines, counting violations per check.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace macbound {

struct CheckStat {
  std::string name;
  double tolerance = 0.0;
  std::size_t count = 0;
  std::size_t failures = 0;
  // Smallest observed slack; a check fails when slack < -tolerance.
  double min_slack = std::numeric_limits<double>::infinity();
};

struct SuiteFailure {
  std::string check;
  std::size_t instance = 0;
  std::uint64_t instance_seed = 0;
  double slack = 0.0;
  // JSON description of the instance, enough to replay it.
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::vector<CheckStat> checks;
  // First few failures only; `checks` carries the full counts.
  std::vector<SuiteFailure> failures;

  bool passed() const;
  // Throws std::out_of_range for an unknown check name.
  const CheckStat& check(const std::string& name) const;
};

// theorem1, theorem2, yo-vs-han, quantum-classical, eq74, linalg.
const std::vector<std::string>& suite_names();
std::size_t default_instances(const std::string& suite);

// Throws UsageError for an unknown suite name.
SuiteResult run_suite(const std::string& suite, std::uint64_t seed, std::size_t instances);

// Deterministic JSON rendering (no timing information).
std::string suite_json(const SuiteResult& r);

}  // namespace macbound
