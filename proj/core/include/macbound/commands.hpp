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

// Batch drivers behind the command-line tool: evaluate requested bounds for
// a setting, sweep rate regions, and render CSV tables and JSON reports.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "macbound/io.hpp"
#include "macbound/report.hpp"
#include "macbound/spectrum.hpp"

namespace macbound {

inline constexpr const char* kVersion = "0.1.0";

// 1: input distribution, 2: stochastic encoders, 3: codebooks,
// q1 / q2: the cq-channel analogues of 1 / 2.
enum class Setting { kInput, kEncoders, kCodebooks, kQuantumInput, kQuantumEncoders };

// Throws UsageError for anything but 1, 2, 3, q1, q2.
Setting parse_setting(const std::string& s);
std::string setting_name(Setting s);

struct BoundRow {
  BoundReport report;
  // Exact minimum error probability when it is computable (classical
  // channels, including q-settings on a classical channel).
  std::optional<double> min_error;
};

// Evaluates every requested bound at every parameter point, in request order.
// Throws ParseError when a request is incomplete or names a bound that the
// setting does not offer, UsageError when the channel kind does not fit.
std::vector<BoundRow> run_bounds(const ChannelSpec& channel, Setting setting,
                                 const ParamsSpec& params);

// Header: setting,bound,params,bound_raw,bound_clamped,probability_term,
// penalty_term,min_error,flags
std::string bounds_csv(Setting setting, const std::vector<BoundRow>& rows);
std::string bounds_body_json(Setting setting, const std::vector<BoundRow>& rows);

// Header: R1,R2,k_term,member
std::string region_csv(const RegionGrid& g);
std::string region_body_json(const RegionGrid& g, std::size_t n,
                             const std::optional<KWindow>& window);

// Report envelope: tool, version, command, input digests, body, wall clock.
// The body is embedded verbatim (it must be a JSON document).
std::string run_report(const std::string& command,
                       const std::vector<std::pair<std::string, std::string>>& digests,
                       const std::string& body_json, double wall_seconds);

}  // namespace macbound
