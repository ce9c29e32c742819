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

#include "macbound/commands.hpp"

#include <sstream>

#include "json.hpp"
#include "macbound/classical_bounds.hpp"
#include "macbound/decoders.hpp"
#include "macbound/error.hpp"
#include "macbound/quantum_bounds.hpp"

namespace macbound {
namespace {

using nlohmann::json;

const ClassicalMAC& classical_channel(const ChannelSpec& ch, Setting s) {
  if (!ch.classical) {
    throw UsageError("setting " + setting_name(s) + " needs a classical channel");
  }
  return *ch.classical;
}

const Distribution& need_input(const ParamsSpec& p) {
  if (!p.input) throw ParseError("params: this setting needs \"input\"");
  return *p.input;
}

const EncoderPair& need_encoders(const ParamsSpec& p) {
  if (!p.encoders) throw ParseError("params: this setting needs \"encoders\"");
  return *p.encoders;
}

const CodebookPair& need_codebooks(const ParamsSpec& p) {
  if (!p.codebooks) throw ParseError("params: this setting needs \"codebooks\"");
  return *p.codebooks;
}

std::vector<AlphaTriple> need_triples(const BoundRequest& b, const std::string& where) {
  if (b.triples.empty()) throw ParseError(where + ": needs \"alpha\", \"alpha_grid\" or \"gammas\"");
  std::vector<AlphaTriple> out;
  for (const auto& t : b.triples) out.emplace_back(t[0], t[1], t[2]);
  return out;
}

const std::vector<double>& need_scalars(const BoundRequest& b, const std::string& where) {
  if (b.scalars.empty()) throw ParseError(where + ": needs \"gamma\"");
  return b.scalars;
}

Distribution need_pi(const BoundRequest& b, const std::string& where) {
  if (b.pi.empty()) throw ParseError(where + ": needs \"pi\"");
  try {
    return Distribution(b.pi);
  } catch (const InvalidModel& e) {
    throw ParseError(where + ".pi: " + e.what());
  }
}

ClassicalMAC qcond_or_channel(const BoundRequest& b, const ClassicalMAC& w,
                              const std::string& where) {
  if (!b.qcond) return w;
  const auto& t = *b.qcond;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(w.n1() * w.n2()), static_cast<Eigen::Index>(w.m()));
  for (std::size_t x1 = 0; x1 < w.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < w.n2(); ++x2) {
      const auto& row = t[x1][x2];
      if (row.size() != w.m()) throw ParseError(where + ".qcond: rows need m entries");
      for (std::size_t y = 0; y < w.m(); ++y) {
        m(static_cast<Eigen::Index>(w.pair_index(x1, x2)), static_cast<Eigen::Index>(y)) = row[y];
      }
    }
  }
  return ClassicalMAC(w.n1(), w.n2(), std::move(m));
}

DominatedFamily classical_family(const BoundRequest& b, const JointPMF& joint,
                                 const std::string& where) {
  if (b.family.empty() || b.family == "marginals") return DominatedFamily::from_marginals(joint);
  if (b.family == "output") {
    const Eigen::VectorXd py = joint.output_marginal();
    return DominatedFamily::output_only(
        Distribution(std::vector<double>(py.data(), py.data() + py.size())), joint.n1(),
        joint.n2());
  }
  throw ParseError(where + ".family: expected \"marginals\" or \"output\"");
}

SigmaFamily quantum_family(const BoundRequest& b, const Distribution& p, const CqMAC& wq,
                           const std::string& where) {
  if (b.family.empty() || b.family == "average") return average_family(p, wq);
  if (b.family == "constructive") return constructive_sigma_family(p, wq, b.mix);
  throw ParseError(where + ".family: expected \"average\" or \"constructive\"");
}

[[noreturn]] void unavailable(const BoundRequest& b, Setting s, const std::string& where) {
  throw ParseError(where + ": bound \"" + b.name + "\" is not available in setting " +
                   setting_name(s));
}

// Positive-part, event and Poor-Verdu style bounds over one joint pmf.
bool joint_bounds(const BoundRequest& b, const JointPMF& joint, const std::string& where,
                  std::vector<BoundReport>& out) {
  if (b.name == "theorem1" || b.name == "cor1") {
    const auto fam = classical_family(b, joint, where);
    for (const auto& a : need_triples(b, where)) {
      out.push_back(b.name == "theorem1" ? theorem1_bound(joint, fam, a)
                                         : cor1_bound(joint, fam, a));
    }
    return true;
  }
  if (b.name == "cor2") {
    for (const auto& a : need_triples(b, where)) out.push_back(cor2_bound(joint, a));
    return true;
  }
  return false;
}

std::string params_field(const BoundReport& r) {
  std::string s;
  for (const auto& [k, v] : r.params) {
    if (!s.empty()) s += ';';
    s += k + "=" + format_double(v);
  }
  return s;
}

std::string flags_field(const BoundReport& r) {
  std::string s;
  for (auto f : r.flags) {
    for (char& c : f) {
      if (c == ',' || c == '\n') c = ';';
    }
    if (!s.empty()) s += ';';
    s += f;
  }
  return s;
}

}  // namespace

Setting parse_setting(const std::string& s) {
  if (s == "1") return Setting::kInput;
  if (s == "2") return Setting::kEncoders;
  if (s == "3") return Setting::kCodebooks;
  if (s == "q1") return Setting::kQuantumInput;
  if (s == "q2") return Setting::kQuantumEncoders;
  throw UsageError("unknown setting '" + s + "' (expected 1, 2, 3, q1 or q2)");
}

std::string setting_name(Setting s) {
  switch (s) {
    case Setting::kInput:
      return "1";
    case Setting::kEncoders:
      return "2";
    case Setting::kCodebooks:
      return "3";
    case Setting::kQuantumInput:
      return "q1";
    case Setting::kQuantumEncoders:
      return "q2";
  }
  return "?";
}

std::vector<BoundRow> run_bounds(const ChannelSpec& channel, Setting setting,
                                 const ParamsSpec& params) {
  std::vector<BoundReport> reports;
  std::optional<double> pmin;
  for (std::size_t i = 0; i < params.bounds.size(); ++i) {
    const auto& b = params.bounds[i];
    const std::string where = "bounds[" + std::to_string(i) + "]";
    switch (setting) {
      case Setting::kInput: {
        const auto& w = classical_channel(channel, setting);
        const auto joint = joint_from_setting1(need_input(params), w);
        pmin = min_error(joint);
        if (!joint_bounds(b, joint, where, reports)) unavailable(b, setting, where);
        break;
      }
      case Setting::kEncoders: {
        const auto& w = classical_channel(channel, setting);
        const auto& enc = need_encoders(params);
        pmin = min_error(joint_from_setting1(Distribution::uniform(enc.M3()), lifted_channel(w, enc)));
        if (b.name == "cor3") {
          const auto fam = induced_encoder_family(w, enc);
          for (const auto& g : need_triples(b, where)) reports.push_back(cor3_bound(w, enc, fam, g));
        } else if (b.name == "cor4") {
          const auto q = qcond_or_channel(b, w, where);
          const auto pi = need_pi(b, where);
          for (double g : need_scalars(b, where)) reports.push_back(cor4_bound(w, enc, q, pi, g));
        } else {
          unavailable(b, setting, where);
        }
        break;
      }
      case Setting::kCodebooks: {
        const auto& w = classical_channel(channel, setting);
        const auto& cb = need_codebooks(params);
        const auto embed = setting3_embed(cb, w);
        const auto joint = joint_from_setting1(embed.input, embed.channel);
        pmin = min_error(joint);
        if (b.name == "han" || b.name == "yo") {
          for (double g : need_scalars(b, where)) {
            reports.push_back(b.name == "han" ? han_bound(w, cb, g) : yo_specialized(w, cb, g));
          }
        } else if (b.name == "yagi_oohama") {
          const auto q = qcond_or_channel(b, w, where);
          const auto pi = need_pi(b, where);
          for (double g : need_scalars(b, where)) {
            reports.push_back(yagi_oohama_bound(w, cb, q, pi, g));
          }
        } else if (!joint_bounds(b, joint, where, reports)) {
          unavailable(b, setting, where);
        }
        break;
      }
      case Setting::kQuantumInput: {
        const auto wq = channel.as_quantum();
        const auto& p = need_input(params);
        if (channel.classical) pmin = min_error(joint_from_setting1(p, *channel.classical));
        if (b.name == "theorem2" || b.name == "cor5") {
          const auto fam = quantum_family(b, p, wq, where);
          for (const auto& a : need_triples(b, where)) {
            reports.push_back(b.name == "theorem2" ? theorem2_bound(p, wq, fam, a)
                                                   : cor5_bound(p, wq, fam, a));
          }
        } else if (b.name == "cor6") {
          for (const auto& a : need_triples(b, where)) reports.push_back(cor6_bound(p, wq, a));
        } else {
          unavailable(b, setting, where);
        }
        break;
      }
      case Setting::kQuantumEncoders: {
        const auto wq = channel.as_quantum();
        const auto& enc = need_encoders(params);
        if (channel.classical) {
          pmin = min_error(joint_from_setting1(Distribution::uniform(enc.M3()),
                                               lifted_channel(*channel.classical, enc)));
        }
        if (b.name != "cor7") unavailable(b, setting, where);
        const auto fam = induced_encoder_sigma_family(wq, enc);
        for (const auto& g : need_triples(b, where)) reports.push_back(cor7_bound(wq, enc, fam, g));
        break;
      }
    }
  }
  std::vector<BoundRow> rows;
  rows.reserve(reports.size());
  for (auto& r : reports) rows.push_back({std::move(r), pmin});
  return rows;
}

std::string bounds_csv(Setting setting, const std::vector<BoundRow>& rows) {
  std::ostringstream out;
  out << "setting,bound,params,bound_raw,bound_clamped,probability_term,penalty_term,min_error,"
         "flags\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    out << setting_name(setting) << ',' << r.name << ',' << params_field(r) << ','
        << format_double(r.bound) << ',' << format_double(r.clamped()) << ','
        << format_double(r.probability_term) << ',' << format_double(r.penalty_term) << ','
        << (row.min_error ? format_double(*row.min_error) : "") << ',' << flags_field(r) << '\n';
  }
  return out.str();
}

std::string bounds_body_json(Setting setting, const std::vector<BoundRow>& rows) {
  json arr = json::array();
  for (const auto& row : rows) {
    const auto& r = row.report;
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    json diag = json::object();
    for (const auto& [k, v] : r.diagnostics) diag[k] = v;
    json entry = {{"name", r.name},
                  {"params", params},
                  {"bound", r.bound},
                  {"clamped", r.clamped()},
                  {"probability_term", r.probability_term},
                  {"penalty_term", r.penalty_term},
                  {"diagnostics", diag},
                  {"flags", r.flags}};
    entry["positive_part_sum"] = r.positive_part_sum ? json(*r.positive_part_sum) : json(nullptr);
    entry["min_error"] = row.min_error ? json(*row.min_error) : json(nullptr);
    arr.push_back(std::move(entry));
  }
  return json{{"setting", setting_name(setting)}, {"rows", arr}}.dump(2);
}

std::string region_csv(const RegionGrid& g) {
  std::ostringstream out;
  out << "R1,R2,k_term,member\n";
  for (std::size_t i = 0; i < g.axis1.steps; ++i) {
    for (std::size_t j = 0; j < g.axis2.steps; ++j) {
      out << format_double(g.axis1.at(i)) << ',' << format_double(g.axis2.at(j)) << ','
          << format_double(g.k(i, j)) << ',' << (g.contains(i, j) ? 1 : 0) << '\n';
    }
  }
  return out.str();
}

std::string region_body_json(const RegionGrid& g, std::size_t n,
                             const std::optional<KWindow>& window) {
  json violations = json::array();
  for (const auto& v : g.violations) {
    violations.push_back({{"i", v.i}, {"j", v.j}, {"axis", v.axis}, {"drop", v.drop}});
  }
  auto axis = [](const GridAxis& a) {
    return json{{"min", a.min}, {"max", a.max}, {"steps", a.steps}};
  };
  json body = {{"n", n},
               {"eps", g.eps},
               {"grid", {{"r1", axis(g.axis1)}, {"r2", axis(g.axis2)}}},
               {"points", g.k_values.size()},
               {"members", g.member_count()},
               {"monotonicity_violations", violations},
               {"note", "finite-n evidence only; region membership is not certified"}};
  if (window) {
    body["k_window"] = {{"values", window->values},
                        {"upper", window->upper},
                        {"lower", window->lower},
                        {"label", window->label}};
  }
  return body.dump(2);
}

std::string run_report(const std::string& command,
                       const std::vector<std::pair<std::string, std::string>>& digests,
                       const std::string& body_json, double wall_seconds) {
  json d = json::object();
  for (const auto& [k, v] : digests) d[k] = v;
  json doc = {{"tool", "macbound"},
              {"version", kVersion},
              {"command", command},
              {"inputs", d},
              {"body", json::parse(body_json)},
              {"wall_clock_seconds", wall_seconds}};
  return doc.dump(2) + "\n";
}

}  // namespace macbound
