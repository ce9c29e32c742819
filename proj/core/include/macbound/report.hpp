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

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace macbound {

// Result of one lower-bound evaluation.
//
// Every report satisfies bound == probability_term - penalty_term. For the
// positive-part bounds, probability_term is 1 - positive_part_sum,
// so bound == 1 - penalty_term - positive_part_sum. Raw bounds may be negative.
struct BoundReport {
  std::string name;
  double bound = 0.0;
  double probability_term = 0.0;
  double penalty_term = 0.0;
  std::optional<double> positive_part_sum;
  std::vector<std::pair<std::string, double>> params;
  std::vector<std::pair<std::string, double>> diagnostics;
  std::vector<std::string> flags;

  double clamped() const { return std::max(bound, 0.0); }
};

}  // namespace macbound
