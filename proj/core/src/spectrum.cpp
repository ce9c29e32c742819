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

#include "macbound/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "macbound/error.hpp"

namespace macbound {
namespace {

double probs_gap(const Distribution& a, const Distribution& b) {
  if (a.size() != b.size()) return INFINITY;
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

void require_triple_matches(const CqMAC& wn, const Distribution& p1, const Distribution& p2,
                            const SigmaTriple& st, const char* what) {
  if (p1.size() != wn.n1() || p2.size() != wn.n2()) {
    throw DimensionMismatch(std::string(what) + ": input distributions do not match channel");
  }
  if (st.n1() != wn.n1() || st.n2() != wn.n2() || st.dim() != wn.dim()) {
    throw DimensionMismatch(std::string(what) + ": sigma triple does not match channel");
  }
  const double g1 = probs_gap(p1, st.p1());
  const double g2 = probs_gap(p2, st.p2());
  if (g1 > kTripleTolerance) {
    throw PreconditionViolation(std::string(what) + ": sigma triple built for another p1", "p1",
                                g1);
  }
  if (g2 > kTripleTolerance) {
    throw PreconditionViolation(std::string(what) + ": sigma triple built for another p2", "p2",
                                g2);
  }
}

// c[0] sigma_x2 + c[1] sigma_x1 + c[2] sigma
HermitianOperator threshold(const SigmaTriple& st, const double (&c)[3], std::size_t x1,
                            std::size_t x2) {
  auto t = c[0] * st.sigma2(x2).op();
  t += c[1] * st.sigma1(x1).op();
  t += c[2] * st.sigma().op();
  return t;
}

// sum p1 p2 Tr[W {W <= T}] with T from coefficients c.
double threshold_trace(const CqMAC& wn, const Distribution& p1, const Distribution& p2,
                       const SigmaTriple& st, const double (&c)[3]) {
  double sum = 0.0;
  for (std::size_t x1 = 0; x1 < wn.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < wn.n2(); ++x2) {
      const double w = p1[x1] * p2[x2];
      if (w == 0.0) continue;
      const auto& state = wn.state(x1, x2).op();
      sum += w * trace_product(state, projector_leq(state, threshold(st, c, x1, x2)).op());
    }
  }
  return sum;
}

void check_rate(double r, const char* name) {
  if (!std::isfinite(r) || r < 0.0) {
    throw InvalidModel(std::string("rate ") + name + " must be finite and nonnegative");
  }
}

}  // namespace

SigmaTriple::SigmaTriple(DensityOperator sigma, std::vector<DensityOperator> sigma1,
                         std::vector<DensityOperator> sigma2, Distribution p1, Distribution p2)
    : sigma_(std::move(sigma)),
      sigma1_(std::move(sigma1)),
      sigma2_(std::move(sigma2)),
      p1_(std::move(p1)),
      p2_(std::move(p2)) {
  if (sigma1_.size() != p1_.size() || sigma2_.size() != p2_.size()) {
    throw DimensionMismatch("sigma triple: one operator per input symbol required");
  }
  for (const auto& s : sigma1_) {
    if (s.dim() != sigma_.dim()) throw DimensionMismatch("sigma triple: mixed dimensions");
  }
  for (const auto& s : sigma2_) {
    if (s.dim() != sigma_.dim()) throw DimensionMismatch("sigma triple: mixed dimensions");
  }
  const double r1 = residual1();
  if (r1 > kTripleTolerance) {
    throw PreconditionViolation("sigma triple: sum_x1 p1 sigma_x1 differs from sigma", "sigma_x1",
                                r1);
  }
  const double r2 = residual2();
  if (r2 > kTripleTolerance) {
    throw PreconditionViolation("sigma triple: sum_x2 p2 sigma_x2 differs from sigma", "sigma_x2",
                                r2);
  }
}

double SigmaTriple::residual1() const {
  CMatrix acc = -sigma_.matrix();
  for (std::size_t x = 0; x < sigma1_.size(); ++x) acc += p1_[x] * sigma1_[x].matrix();
  return acc.norm();
}

double SigmaTriple::residual2() const {
  CMatrix acc = -sigma_.matrix();
  for (std::size_t x = 0; x < sigma2_.size(); ++x) acc += p2_[x] * sigma2_[x].matrix();
  return acc.norm();
}

RatePair::RatePair(double r1_, double r2_) : r1(r1_), r2(r2_) {
  check_rate(r1, "R1");
  check_rate(r2, "R2");
}

double k_term(const CqMAC& wn, const Distribution& p1, const Distribution& p2,
              const SigmaTriple& st, const RatePair& rates, std::size_t n) {
  if (n == 0) throw InvalidModel("k_term: n must be positive");
  check_rate(rates.r1, "R1");
  check_rate(rates.r2, "R2");
  require_triple_matches(wn, p1, p2, st, "k_term");
  const double dn = static_cast<double>(n);
  const double c[3] = {std::exp(dn * rates.r1), std::exp(dn * rates.r2),
                       std::exp(dn * (rates.r1 + rates.r2))};
  return threshold_trace(wn, p1, p2, st, c);
}

SigmaTriple wp_triple(const Distribution& p1, const Distribution& p2, const CqMAC& wq) {
  if (p1.size() != wq.n1() || p2.size() != wq.n2()) {
    throw DimensionMismatch("wp_triple: input distributions do not match channel");
  }
  const Eigen::Index dim = wq.dim();
  auto sigma = HermitianOperator::zero(dim);
  std::vector<HermitianOperator> s1(wq.n1(), HermitianOperator::zero(dim));
  std::vector<HermitianOperator> s2(wq.n2(), HermitianOperator::zero(dim));
  for (std::size_t x1 = 0; x1 < wq.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < wq.n2(); ++x2) {
      const auto& w = wq.state(x1, x2).op();
      if (p2[x2] != 0.0) s1[x1] += p2[x2] * w;
      if (p1[x1] != 0.0) s2[x2] += p1[x1] * w;
      if (p1[x1] * p2[x2] != 0.0) sigma += (p1[x1] * p2[x2]) * w;
    }
  }
  std::vector<DensityOperator> d1, d2;
  for (auto& s : s1) d1.emplace_back(std::move(s));
  for (auto& s : s2) d2.emplace_back(std::move(s));
  return SigmaTriple(DensityOperator(std::move(sigma)), std::move(d1), std::move(d2), p1, p2);
}

ConverseReport finite_n_converse_check(const CqMAC& wn, const CodeInstance& code,
                                       const SigmaTriple& st, double gamma,
                                       const RatePair& rates) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidModel("finite_n_converse_check: gamma must be positive");
  }
  if (code.n == 0) throw InvalidModel("finite_n_converse_check: n must be positive");
  check_rate(rates.r1, "R1");
  check_rate(rates.r2, "R2");
  const auto& enc = code.enc;
  if (enc.n1() != wn.n1() || enc.n2() != wn.n2()) {
    throw DimensionMismatch("finite_n_converse_check: encoders do not match channel");
  }
  if (code.decoder.d1() != enc.M1() || code.decoder.d2() != enc.M2() ||
      code.decoder.dim() != wn.dim()) {
    throw DimensionMismatch("finite_n_converse_check: decoder does not match code");
  }
  const auto [p1, p2] = induced_input(enc);
  require_triple_matches(wn, p1, p2, st, "finite_n_converse_check");

  ConverseReport r;
  r.n = code.n;
  r.gamma = gamma;
  r.rates = rates;
  const double n = static_cast<double>(code.n);
  const double M1 = static_cast<double>(enc.M1());
  const double M2 = static_cast<double>(enc.M2());
  const double shrink = std::exp(-n * gamma);
  r.precondition_met = std::log(M1) >= n * (rates.r1 - gamma) - 1e-12 &&
                       std::log(M2) >= n * (rates.r2 - gamma) - 1e-12;
  r.error_probability = pe_q2(wn, enc, code.decoder);

  EncoderSigmaFamily fam{st.sigma(), {}, {}};
  for (std::size_t x = 0; x < st.n1(); ++x) fam.sigma1.push_back(st.sigma1(x).op());
  for (std::size_t x = 0; x < st.n2(); ++x) fam.sigma2.push_back(st.sigma2(x).op());
  r.message_sum = cor7_positive_part_sum(wn, enc, fam,
                                         AlphaTriple(shrink * M1, shrink * M2, shrink * M1 * M2));

  const double a[3] = {std::exp(n * (rates.r1 - 2 * gamma)), std::exp(n * (rates.r2 - 2 * gamma)),
                       std::exp(n * (rates.r1 + rates.r2 - 3 * gamma))};
  const double b[3] = {a[0], a[1], std::exp(n * (rates.r1 + rates.r2 - 4 * gamma))};
  r.a_coefficients.assign(a, a + 3);
  r.b_coefficients.assign(b, b + 3);

  double b_leq = 0.0;
  for (std::size_t x1 = 0; x1 < wn.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < wn.n2(); ++x2) {
      const double w = p1[x1] * p2[x2];
      if (w == 0.0) continue;
      const auto& state = wn.state(x1, x2).op();
      const auto tb = threshold(st, b, x1, x2);
      r.a_sum += w * positive_part_trace(state - threshold(st, a, x1, x2));
      r.b_sum += w * positive_part_trace(state - tb);
      r.b_complement += w * trace_product(state, projector_gt(state, tb).op());
      b_leq += w * trace_product(state, projector_leq(state, tb).op());
    }
  }
  r.rhs = b_leq - 3.0 * shrink;
  r.slack = r.error_probability - r.rhs;
  r.inequality_holds = r.slack >= -kConverseTolerance;
  if (!r.precondition_met) {
    r.notes.emplace_back("rate precondition not met; inequality is not implied");
  }
  r.notes.emplace_back("finite-n evidence only; membership in a capacity region is not certified");
  return r;
}

double GridAxis::at(std::size_t i) const {
  if (steps <= 1) return min;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::pair<GridAxis, GridAxis> parse_grid(const std::string& spec) {
  auto parse_axis = [&](const std::string& part) {
    std::istringstream in(part);
    GridAxis ax;
    char c1 = 0, c2 = 0;
    long long steps = 0;
    if (!(in >> ax.min >> c1 >> ax.max >> c2 >> steps) || c1 != ':' || c2 != ':' ||
        !(in >> std::ws).eof()) {
      throw InvalidModel("grid axis '" + part + "' is not min:max:steps");
    }
    if (steps < 1 || steps > 100000) throw InvalidModel("grid steps out of range in '" + part + "'");
    if (!std::isfinite(ax.min) || !std::isfinite(ax.max) || ax.min < 0.0 || ax.max < ax.min) {
      throw InvalidModel("grid bounds must satisfy 0 <= min <= max in '" + part + "'");
    }
    ax.steps = static_cast<std::size_t>(steps);
    return ax;
  };
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw InvalidModel("grid needs two comma-separated axes");
  return {parse_axis(spec.substr(0, comma)), parse_axis(spec.substr(comma + 1))};
}

std::size_t RegionGrid::member_count() const {
  std::size_t c = 0;
  for (bool b : member) c += b ? 1 : 0;
  return c;
}

RegionGrid region_grid(const CqMAC& wq, std::size_t n, const Distribution& p1,
                       const Distribution& p2, const std::optional<SigmaTriple>& custom,
                       double eps, const GridAxis& axis1, const GridAxis& axis2) {
  if (axis1.steps == 0 || axis2.steps == 0) throw InvalidModel("region_grid: empty grid");
  const auto wn = product_extend(wq, n);
  const auto p1n = product_extend(p1, n);
  const auto p2n = product_extend(p2, n);
  const SigmaTriple st = custom ? *custom : wp_triple(p1n, p2n, wn);

  RegionGrid g;
  g.axis1 = axis1;
  g.axis2 = axis2;
  g.eps = eps;
  g.k_values.resize(axis1.steps * axis2.steps);
  g.member.resize(axis1.steps * axis2.steps);
  for (std::size_t i = 0; i < axis1.steps; ++i) {
    for (std::size_t j = 0; j < axis2.steps; ++j) {
      const double k = k_term(wn, p1n, p2n, st, RatePair(axis1.at(i), axis2.at(j)), n);
      g.k_values[i * axis2.steps + j] = k;
      g.member[i * axis2.steps + j] = k <= eps;
    }
  }
  for (std::size_t i = 0; i < axis1.steps; ++i) {
    for (std::size_t j = 0; j < axis2.steps; ++j) {
      if (i > 0 && g.k(i, j) < g.k(i - 1, j) - kMonotoneTolerance) {
        g.violations.push_back({i, j, 1, g.k(i - 1, j) - g.k(i, j)});
      }
      if (j > 0 && g.k(i, j) < g.k(i, j - 1) - kMonotoneTolerance) {
        g.violations.push_back({i, j, 2, g.k(i, j - 1) - g.k(i, j)});
      }
    }
  }
  return g;
}

KWindow k_window(const CqMAC& wq, const Distribution& p1, const Distribution& p2,
                 const RatePair& rates, std::size_t n_max) {
  if (n_max == 0) throw InvalidModel("k_window: n_max must be positive");
  KWindow w;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto wn = product_extend(wq, n);
    const auto p1n = product_extend(p1, n);
    const auto p2n = product_extend(p2, n);
    w.values.push_back(k_term(wn, p1n, p2n, wp_triple(p1n, p2n, wn), rates, n));
  }
  w.upper = *std::max_element(w.values.begin(), w.values.end());
  w.lower = *std::min_element(w.values.begin(), w.values.end());
  return w;
}

}  // namespace macbound
