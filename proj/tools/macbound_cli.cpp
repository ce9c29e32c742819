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

// Command-line front end: bound tables, verification suites and rate-region
// sweeps. Exit codes: 0 ok, 1 verification failure, 2 parse error,
// 3 precondition failure, 4 usage error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "macbound/commands.hpp"
#include "macbound/error.hpp"
#include "macbound/io.hpp"
#include "macbound/spectrum.hpp"
#include "macbound/verify.hpp"

namespace {

enum ExitCode : int { kOk = 0, kFailed = 1, kParse = 2, kPrecondition = 3, kUsage = 4 };

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    macbound::write_file_atomic(path, content);
  }
}

struct BoundsArgs {
  std::string channel, setting, params, out, report;
};

int cmd_bounds(const BoundsArgs& a) {
  const auto start = Clock::now();
  const auto setting = macbound::parse_setting(a.setting);
  const auto channel_text = macbound::read_text_file(a.channel);
  const auto params_text = macbound::read_text_file(a.params);
  const auto channel = macbound::parse_channel(channel_text);
  const auto params = macbound::parse_params(params_text, channel.n1(), channel.n2());
  const auto rows = macbound::run_bounds(channel, setting, params);
  const auto csv = macbound::bounds_csv(setting, rows);
  const auto report = macbound::run_report(
      "bounds",
      {{"channel", macbound::fnv1a_hex(channel_text)}, {"params", macbound::fnv1a_hex(params_text)}},
      macbound::bounds_body_json(setting, rows), seconds_since(start));
  emit(a.out, csv);
  if (!a.report.empty()) emit(a.report, report);
  return kOk;
}

struct VerifyArgs {
  std::string suite, out;
  std::uint64_t seed = 42;
  std::size_t instances = 0;
};

int cmd_verify(const VerifyArgs& a) {
  const auto start = Clock::now();
  const std::size_t count =
      a.instances != 0 ? a.instances : macbound::default_instances(a.suite);
  const auto result = macbound::run_suite(a.suite, a.seed, count);
  const auto report = macbound::run_report(
      "verify", {{"suite", a.suite}, {"seed", std::to_string(a.seed)}},
      macbound::suite_json(result), seconds_since(start));
  emit(a.out, report);
  for (const auto& c : result.checks) {
    std::cerr << (c.failures == 0 ? "pass " : "FAIL ") << a.suite << '/' << c.name << ": "
              << c.count << " checks, " << c.failures << " violations, min slack "
              << macbound::format_double(c.min_slack) << '\n';
  }
  for (const auto& f : result.failures) {
    std::cerr << "violation " << f.check << " at instance " << f.instance << " (seed "
              << f.instance_seed << ", slack " << macbound::format_double(f.slack)
              << "): " << f.detail << '\n';
  }
  return result.passed() ? kOk : kFailed;
}

struct RegionArgs {
  std::string channel, params, grid = "0:2:41,0:2:41", triple = "wp", out, report, rates = "0,0";
  std::size_t n = 1;
  std::size_t k_window = 0;
  double eps = 0.0;
};

int cmd_region(const RegionArgs& a) {
  const auto start = Clock::now();
  if (a.n == 0) throw macbound::UsageError("--n must be positive");
  const auto channel_text = macbound::read_text_file(a.channel);
  const auto channel = macbound::parse_channel(channel_text);
  const auto wq = channel.as_quantum();
  std::vector<std::pair<std::string, std::string>> digests{
      {"channel", macbound::fnv1a_hex(channel_text)}};

  auto p1 = macbound::Distribution::uniform(wq.n1());
  auto p2 = macbound::Distribution::uniform(wq.n2());
  if (!a.params.empty()) {
    const auto text = macbound::read_text_file(a.params);
    digests.emplace_back("params", macbound::fnv1a_hex(text));
    const auto params = macbound::parse_params(text, wq.n1(), wq.n2());
    if (params.input && !params.p1) {
      throw macbound::ParseError("params.input: region sweeps need {\"p1\": ..., \"p2\": ...}");
    }
    if (params.p1) {
      p1 = *params.p1;
      p2 = *params.p2;
    }
  }
  std::optional<macbound::SigmaTriple> custom;
  if (a.triple != "wp") {
    const auto text = macbound::read_text_file(a.triple);
    digests.emplace_back("triple", macbound::fnv1a_hex(text));
    custom = macbound::parse_triple(text, macbound::product_extend(p1, a.n),
                                    macbound::product_extend(p2, a.n));
  }
  const auto [axis1, axis2] = macbound::parse_grid(a.grid);
  const auto grid = macbound::region_grid(wq, a.n, p1, p2, custom, a.eps, axis1, axis2);

  std::optional<macbound::KWindow> window;
  if (a.k_window > 0) {
    std::istringstream in(a.rates);
    double r1 = 0.0, r2 = 0.0;
    char comma = 0;
    if (!(in >> r1 >> comma >> r2) || comma != ',') {
      throw macbound::UsageError("--rates expects R1,R2");
    }
    window = macbound::k_window(wq, p1, p2, macbound::RatePair(r1, r2), a.k_window);
  }
  for (const auto& v : grid.violations) {
    std::cerr << "warning: k_term decreases along R" << v.axis << " at grid point (" << v.i
              << "," << v.j << ") by " << macbound::format_double(v.drop) << '\n';
  }
  const auto report = macbound::run_report(
      "region", digests, macbound::region_body_json(grid, a.n, window), seconds_since(start));
  emit(a.out, macbound::region_csv(grid));
  if (!a.report.empty()) emit(a.report, report);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Converse bounds on the decoding error of multiple-access channels"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(macbound::kVersion));

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Evaluate lower bounds and write a CSV table");
  bounds->add_option("--channel", ba.channel, "Channel file (JSON)")->required();
  bounds->add_option("--setting", ba.setting, "1, 2, 3, q1 or q2")->required();
  bounds->add_option("--params", ba.params, "Parameter file (JSON)")->required();
  bounds->add_option("--out", ba.out, "CSV output path (default: stdout)");
  bounds->add_option("--report", ba.report, "JSON run report path");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a randomized property suite");
  verify->add_option("--suite", va.suite, "Suite name")->required();
  verify->add_option("--seed", va.seed, "Random seed")->capture_default_str();
  verify->add_option("--instances", va.instances, "Instance count (default: suite size)");
  verify->add_option("--out", va.out, "JSON run report path (default: stdout)");

  RegionArgs ra;
  auto* region = app.add_subcommand("region", "Sweep the finite-n threshold term over rates");
  region->add_option("--channel", ra.channel, "Channel file (JSON)")->required();
  region->add_option("--params", ra.params, "Parameter file with {\"input\": {\"p1\", \"p2\"}}");
  region->add_option("--n", ra.n, "Blocklength")->capture_default_str();
  region->add_option("--eps", ra.eps, "Membership threshold")->required();
  region->add_option("--grid", ra.grid, "R1min:R1max:steps,R2min:R2max:steps")
      ->capture_default_str();
  region->add_option("--triple", ra.triple, "wp, or a sigma-triple file")->capture_default_str();
  region->add_option("--out", ra.out, "CSV output path (default: stdout)");
  region->add_option("--report", ra.report, "JSON run report path");
  region->add_option("--k-window", ra.k_window, "Also report k_term for n = 1..N");
  region->add_option("--rates", ra.rates, "R1,R2 for --k-window")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*bounds) return cmd_bounds(ba);
    if (*verify) return cmd_verify(va);
    return cmd_region(ra);
  } catch (const macbound::PreconditionViolation& e) {
    std::cerr << "precondition failed: " << e.what() << "\nworst entry: " << e.where() << '\n';
    return kPrecondition;
  } catch (const macbound::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const macbound::SizeCapExceeded& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const macbound::Error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  }
}
