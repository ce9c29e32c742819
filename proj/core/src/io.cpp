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

#include "macbound/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "macbound/error.hpp"

namespace macbound {
namespace {

using nlohmann::json;

std::string at(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.count(key)) throw ParseError(where + ": unknown field \"" + key + "\"");
  }
}

const json& array_of(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  if (n != 0 && v.size() != n) {
    throw ParseError(where + ": expected " + std::to_string(n) + " entries, found " +
                     std::to_string(v.size()));
  }
  return v;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(where + ": not finite");
  return d;
}

std::size_t count(const json& v, const std::string& where) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw ParseError(where + ": expected a nonnegative integer");
  }
  const auto i = v.get<long long>();
  if (i < 0) throw ParseError(where + ": expected a nonnegative integer");
  return static_cast<std::size_t>(i);
}

std::size_t positive_count(const json& v, const std::string& where) {
  const auto n = count(v, where);
  if (n == 0) throw ParseError(where + ": must be positive");
  return n;
}

std::vector<double> numbers(const json& v, std::size_t n, const std::string& where) {
  array_of(v, n, where);
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], at(where, i)));
  return out;
}

// Probability row: entries >= -1e-15 summing to one within kSumTolerance.
std::vector<double> probability_row(const json& v, std::size_t n, const std::string& where) {
  auto row = numbers(v, n, where);
  double sum = 0.0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] < -kClampTolerance) throw ParseError(at(where, i) + ": negative probability");
    sum += row[i];
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw ParseError(where + ": sums to " + format_double(sum) + ", not 1");
  }
  return row;
}

std::complex<double> complex_entry(const json& v, const std::string& where) {
  if (v.is_number()) return {number(v, where), 0.0};
  if (v.is_array() && v.size() == 2) return {number(v[0], where + ".re"), number(v[1], where + ".im")};
  throw ParseError(where + ": expected [re, im] or a number");
}

CMatrix complex_matrix(const json& v, std::size_t dim, const std::string& where) {
  array_of(v, dim, where);
  CMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    array_of(v[r], dim, at(where, r));
    for (std::size_t c = 0; c < dim; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_entry(v[r][c], at(at(where, r), c));
    }
  }
  return m;
}

// Density operator with location-tagged errors. A state with a negative
// eigenvalue raises PreconditionViolation naming `label`.
DensityOperator density(const CMatrix& m, const std::string& where, const std::string& label) {
  HermitianOperator h;
  try {
    h = HermitianOperator(m);
  } catch (const InvalidModel& e) {
    throw ParseError(where + ": " + e.what());
  }
  const double lmin = min_eigenvalue(h);
  if (lmin < -kPsdTolerance) {
    throw PreconditionViolation(where + ": state is not positive semidefinite", label, -lmin);
  }
  try {
    return DensityOperator(std::move(h));
  } catch (const InvalidModel& e) {
    throw ParseError(where + ": " + e.what());
  }
}

json complex_matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ClassicalMAC classical_table(const json& w, std::size_t n1, std::size_t n2, std::size_t m,
                             const std::string& where) {
  array_of(w, n1, where);
  Eigen::MatrixXd mat(static_cast<Eigen::Index>(n1 * n2), static_cast<Eigen::Index>(m));
  for (std::size_t x1 = 0; x1 < n1; ++x1) {
    array_of(w[x1], n2, at(where, x1));
    for (std::size_t x2 = 0; x2 < n2; ++x2) {
      const auto row = probability_row(w[x1][x2], m, at(at(where, x1), x2));
      for (std::size_t y = 0; y < m; ++y) {
        mat(static_cast<Eigen::Index>(x1 * n2 + x2), static_cast<Eigen::Index>(y)) = row[y];
      }
    }
  }
  return ClassicalMAC(n1, n2, std::move(mat));
}

StochasticMatrix encoder_table(const json& f, std::size_t n, const std::string& where) {
  array_of(f, 0, where);
  if (f.empty()) throw ParseError(where + ": needs at least one message");
  Eigen::MatrixXd mat(static_cast<Eigen::Index>(f.size()), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < f.size(); ++r) {
    const auto row = probability_row(f[r], n, at(where, r));
    for (std::size_t c = 0; c < n; ++c) {
      mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row[c];
    }
  }
  return StochasticMatrix(std::move(mat));
}

std::array<double, 3> triple(const json& v, const std::string& where) {
  const auto t = numbers(v, 3, where);
  return {t[0], t[1], t[2]};
}

// A single triple or an array of triples.
std::vector<std::array<double, 3>> triples(const json& v, const std::string& where) {
  array_of(v, 0, where);
  if (!v.empty() && v[0].is_array()) {
    std::vector<std::array<double, 3>> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(triple(v[i], at(where, i)));
    return out;
  }
  return {triple(v, where)};
}

BoundRequest bound_request(const json& b, std::size_t n1, std::size_t n2,
                           const std::string& where) {
  if (!b.is_object()) throw ParseError(where + ": expected an object");
  reject_unknown(b, {"name", "alpha", "alpha_grid", "gammas", "gamma", "pi", "family", "mix", "qcond"},
                 where);
  BoundRequest r;
  const auto& name = member(b, "name", where);
  if (!name.is_string()) throw ParseError(where + ".name: expected a string");
  r.name = name.get<std::string>();
  for (const char* key : {"alpha", "alpha_grid", "gammas"}) {
    if (b.contains(key)) {
      auto t = triples(b[key], where + "." + key);
      r.triples.insert(r.triples.end(), t.begin(), t.end());
    }
  }
  if (b.contains("gamma")) {
    const auto& g = b["gamma"];
    r.scalars = g.is_array() ? numbers(g, 0, where + ".gamma")
                             : std::vector<double>{number(g, where + ".gamma")};
  }
  if (b.contains("pi")) r.pi = numbers(b["pi"], 3, where + ".pi");
  if (b.contains("family")) {
    if (!b["family"].is_string()) throw ParseError(where + ".family: expected a string");
    r.family = b["family"].get<std::string>();
  }
  if (b.contains("mix")) r.mix = number(b["mix"], where + ".mix");
  if (b.contains("qcond")) {
    const auto& q = b["qcond"];
    array_of(q, n1, where + ".qcond");
    std::vector<std::vector<std::vector<double>>> table(n1);
    for (std::size_t x1 = 0; x1 < n1; ++x1) {
      array_of(q[x1], n2, at(where + ".qcond", x1));
      for (std::size_t x2 = 0; x2 < n2; ++x2) {
        table[x1].push_back(probability_row(q[x1][x2], 0, at(at(where + ".qcond", x1), x2)));
      }
    }
    r.qcond = std::move(table);
  }
  return r;
}

template <typename Fn>
auto tagged(const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const InvalidModel& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

std::size_t ChannelSpec::n1() const { return classical ? classical->n1() : quantum->n1(); }
std::size_t ChannelSpec::n2() const { return classical ? classical->n2() : quantum->n2(); }

CqMAC ChannelSpec::as_quantum() const { return quantum ? *quantum : diag_embed(*classical); }

ChannelSpec parse_channel(const std::string& text) {
  const json doc = parse_document(text);
  const auto& kind = member(doc, "kind", "channel");
  if (!kind.is_string()) throw ParseError("channel.kind: expected a string");
  const auto n1 = positive_count(member(doc, "n1", "channel"), "channel.n1");
  const auto n2 = positive_count(member(doc, "n2", "channel"), "channel.n2");
  ChannelSpec spec;
  if (kind == "classical") {
    reject_unknown(doc, {"kind", "n1", "n2", "m", "w"}, "channel");
    const auto m = positive_count(member(doc, "m", "channel"), "channel.m");
    spec.kind = ChannelKind::kClassical;
    spec.classical = tagged("channel.w", [&] {
      return classical_table(member(doc, "w", "channel"), n1, n2, m, "w");
    });
    return spec;
  }
  if (kind == "quantum") {
    reject_unknown(doc, {"kind", "n1", "n2", "dim", "states"}, "channel");
    const auto dim = positive_count(member(doc, "dim", "channel"), "channel.dim");
    const auto& states = member(doc, "states", "channel");
    array_of(states, n1, "states");
    std::vector<DensityOperator> rho;
    for (std::size_t x1 = 0; x1 < n1; ++x1) {
      array_of(states[x1], n2, at("states", x1));
      for (std::size_t x2 = 0; x2 < n2; ++x2) {
        const auto where = at(at("states", x1), x2);
        rho.push_back(density(complex_matrix(states[x1][x2], dim, where), where,
                              "(x1,x2)=(" + std::to_string(x1) + "," + std::to_string(x2) + ")"));
      }
    }
    spec.kind = ChannelKind::kQuantum;
    spec.quantum = CqMAC(n1, n2, std::move(rho));
    return spec;
  }
  throw ParseError("channel.kind: expected \"classical\" or \"quantum\"");
}

std::string serialize_channel(const ClassicalMAC& w) {
  json table = json::array();
  for (std::size_t x1 = 0; x1 < w.n1(); ++x1) {
    json row = json::array();
    for (std::size_t x2 = 0; x2 < w.n2(); ++x2) {
      json probs = json::array();
      for (std::size_t y = 0; y < w.m(); ++y) probs.push_back(w(x1, x2, y));
      row.push_back(std::move(probs));
    }
    table.push_back(std::move(row));
  }
  json doc = {{"kind", "classical"}, {"n1", w.n1()}, {"n2", w.n2()}, {"m", w.m()}, {"w", table}};
  return doc.dump(2) + "\n";
}

std::string serialize_channel(const CqMAC& wq) {
  json states = json::array();
  for (std::size_t x1 = 0; x1 < wq.n1(); ++x1) {
    json row = json::array();
    for (std::size_t x2 = 0; x2 < wq.n2(); ++x2) {
      row.push_back(complex_matrix_json(wq.state(x1, x2).matrix()));
    }
    states.push_back(std::move(row));
  }
  json doc = {{"kind", "quantum"}, {"n1", wq.n1()}, {"n2", wq.n2()},
              {"dim", static_cast<std::size_t>(wq.dim())}, {"states", states}};
  return doc.dump(2) + "\n";
}

ParamsSpec parse_params(const std::string& text, std::size_t n1, std::size_t n2) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("params: expected an object");
  reject_unknown(doc, {"input", "encoders", "codebooks", "bounds"}, "params");
  ParamsSpec spec;
  if (doc.contains("input")) {
    const auto& in = doc["input"];
    if (in.is_object()) {
      reject_unknown(in, {"p1", "p2"}, "input");
      spec.p1 = tagged("input.p1", [&] {
        return Distribution(probability_row(member(in, "p1", "input"), n1, "input.p1"));
      });
      spec.p2 = tagged("input.p2", [&] {
        return Distribution(probability_row(member(in, "p2", "input"), n2, "input.p2"));
      });
      spec.input = product_input(*spec.p1, *spec.p2);
    } else {
      array_of(in, n1, "input");
      std::vector<double> flat;
      for (std::size_t x1 = 0; x1 < n1; ++x1) {
        const auto row = numbers(in[x1], n2, at("input", x1));
        flat.insert(flat.end(), row.begin(), row.end());
      }
      spec.input = tagged("input", [&] { return Distribution(std::move(flat)); });
    }
  }
  if (doc.contains("encoders")) {
    const auto& e = doc["encoders"];
    reject_unknown(e, {"f1", "f2"}, "encoders");
    spec.encoders = tagged("encoders", [&] {
      return EncoderPair(encoder_table(member(e, "f1", "encoders"), n1, "encoders.f1"),
                         encoder_table(member(e, "f2", "encoders"), n2, "encoders.f2"));
    });
  }
  if (doc.contains("codebooks")) {
    const auto& c = doc["codebooks"];
    reject_unknown(c, {"c1", "c2"}, "codebooks");
    auto words = [&](const char* key) {
      const std::string where = std::string("codebooks.") + key;
      const auto& v = array_of(member(c, key, "codebooks"), 0, where);
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < v.size(); ++i) out.push_back(count(v[i], at(where, i)));
      return out;
    };
    spec.codebooks = tagged("codebooks", [&] {
      CodebookPair cb(words("c1"), words("c2"));
      cb.check_range(n1, n2);
      return cb;
    });
  }
  if (doc.contains("bounds")) {
    const auto& b = array_of(doc["bounds"], 0, "bounds");
    for (std::size_t i = 0; i < b.size(); ++i) {
      spec.bounds.push_back(bound_request(b[i], n1, n2, at("bounds", i)));
    }
  }
  return spec;
}

SigmaTriple parse_triple(const std::string& text, const Distribution& p1, const Distribution& p2) {
  const json doc = parse_document(text);
  reject_unknown(doc, {"sigma", "sigma1", "sigma2"}, "triple");
  const auto& s = member(doc, "sigma", "triple");
  if (!s.is_array() || s.empty()) throw ParseError("triple.sigma: expected a square matrix");
  const std::size_t dim = s.size();
  auto one = [&](const json& v, const std::string& where) {
    return density(complex_matrix(v, dim, where), where, where);
  };
  auto list = [&](const char* key, std::size_t n) {
    const std::string where = std::string("triple.") + key;
    const auto& v = array_of(member(doc, key, "triple"), n, where);
    std::vector<DensityOperator> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(one(v[i], at(where, i)));
    return out;
  };
  return tagged("triple", [&] {
    return SigmaTriple(one(s, "triple.sigma"), list("sigma1", p1.size()), list("sigma2", p2.size()),
                       p1, p2);
  });
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot move output into place at " + path + ": " + ec.message());
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace macbound
