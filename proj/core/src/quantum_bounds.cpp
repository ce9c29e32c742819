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

#include "macbound/quantum_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "macbound/error.hpp"

namespace macbound {
namespace {

std::string pair_name(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void require_pairs(const Distribution& p, const CqMAC& wq, const char* what) {
  if (p.size() != wq.n1() * wq.n2()) {
    throw DimensionMismatch(std::string(what) + ": input distribution size does not match n1*n2");
  }
}

void require_psd(const HermitianOperator& a, const std::string& name) {
  const double lmin = min_eigenvalue(a);
  if (lmin < -kPsdTolerance) {
    throw PreconditionViolation(name + " is not positive semidefinite", name, -lmin);
  }
}

// Tracks the worst operator-order violation lambda_min(S - T) < -tol.
struct OrderScan {
  double worst = 0.0;
  std::string where;

  void visit(const HermitianOperator& s, const HermitianOperator& t, const std::string& at) {
    const double v = -min_eigenvalue(s - t);
    if (v > worst) {
      worst = v;
      where = at;
    }
  }
  void raise_if_violated(const std::string& what) const {
    if (worst > kPsdTolerance) throw PreconditionViolation(what, where, worst);
  }
};

BoundReport positive_part_report(std::string name, double sum, double penalty) {
  BoundReport r;
  r.name = std::move(name);
  r.positive_part_sum = sum;
  r.probability_term = 1.0 - sum;
  r.penalty_term = penalty;
  r.bound = r.probability_term - r.penalty_term;
  return r;
}

void add_params(BoundReport& r, const AlphaTriple& a, const char* prefix) {
  const std::string p(prefix);
  r.params.emplace_back(p + "1", a.a1());
  r.params.emplace_back(p + "2", a.a2());
  r.params.emplace_back(p + "3", a.a3());
}

POVM square_root_measurement(std::size_t d1, std::size_t d2,
                             const std::vector<HermitianOperator>& weighted) {
  const Eigen::Index dim = weighted.front().dim();
  auto s = HermitianOperator::zero(dim);
  for (const auto& w : weighted) s += w;
  const auto inv = inverse_sqrt_on_support(s);
  std::vector<HermitianOperator> elements;
  elements.reserve(weighted.size());
  auto total = HermitianOperator::zero(dim);
  for (const auto& w : weighted) {
    elements.push_back(conjugate_by(inv.inv_sqrt.matrix(), w));
    total += elements.back();
  }
  // `total` is a projector up to rounding amplified by small kept
  // eigenvalues of s; one more normalization restores it to ~1e-15.
  const auto refine = inverse_sqrt_on_support(total, 0.5);
  for (auto& e : elements) e = conjugate_by(refine.inv_sqrt.matrix(), e);
  elements.front() += HermitianOperator::identity(dim) - refine.support;
  return POVM(d1, d2, std::move(elements));
}

}  // namespace

CqMAC::CqMAC(std::size_t n1, std::size_t n2, std::vector<DensityOperator> states)
    : n1_(n1), n2_(n2), states_(std::move(states)) {
  if (n1 == 0 || n2 == 0) throw InvalidModel("cq channel: empty input alphabet");
  if (states_.size() != n1 * n2) throw DimensionMismatch("cq channel: need n1*n2 states");
  for (const auto& s : states_) {
    if (s.dim() != states_.front().dim()) throw DimensionMismatch("cq channel: mixed dimensions");
  }
}

POVM::POVM(std::size_t d1, std::size_t d2, std::vector<HermitianOperator> elements)
    : d1_(d1), d2_(d2), elements_(std::move(elements)) {
  if (elements_.empty() || elements_.size() != d1 * d2) {
    throw DimensionMismatch("povm: need d1*d2 elements");
  }
  const Eigen::Index dim = elements_.front().dim();
  auto total = HermitianOperator::zero(dim);
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k].dim() != dim) throw DimensionMismatch("povm: mixed dimensions");
    const double lmin = min_eigenvalue(elements_[k]);
    if (lmin < -kPsdTolerance) {
      throw InvalidModel("povm: element " + pair_name(k / d2, k % d2) +
                         " not positive semidefinite (min eigenvalue " + std::to_string(lmin) + ")");
    }
    total += elements_[k];
  }
  const double residual = (total.matrix() - CMatrix::Identity(dim, dim)).norm();
  if (residual > 1e-10) {
    std::ostringstream msg;
    msg << "povm: elements sum to the identity only within " << residual;
    throw InvalidModel(msg.str());
  }
}

SigmaFamily::SigmaFamily(DensityOperator sigma, std::vector<HermitianOperator> sigma1,
                         std::vector<HermitianOperator> sigma2)
    : sigma_(std::move(sigma)), sigma1_(std::move(sigma1)), sigma2_(std::move(sigma2)) {
  OrderScan scan;
  for (std::size_t x = 0; x < sigma1_.size(); ++x) {
    if (sigma1_[x].dim() != sigma_.dim()) throw DimensionMismatch("sigma family: dimension");
    require_psd(sigma1_[x], "sigma_x1[" + std::to_string(x) + "]");
    scan.visit(sigma_.op(), sigma1_[x], "sigma_x1[" + std::to_string(x) + "]");
  }
  for (std::size_t x = 0; x < sigma2_.size(); ++x) {
    if (sigma2_[x].dim() != sigma_.dim()) throw DimensionMismatch("sigma family: dimension");
    require_psd(sigma2_[x], "sigma_x2[" + std::to_string(x) + "]");
    scan.visit(sigma_.op(), sigma2_[x], "sigma_x2[" + std::to_string(x) + "]");
  }
  scan.raise_if_violated("operator order sigma >= sigma_x fails");
}

HermitianOperator SigmaFamily::sigma_alpha(const AlphaTriple& a, std::size_t x1,
                                           std::size_t x2) const {
  auto out = a.a3() * sigma_.op();
  if (a.a1() != 0.0) out += a.a1() * sigma2_[x2];
  if (a.a2() != 0.0) out += a.a2() * sigma1_[x1];
  return out;
}

double pe_q1(const Distribution& p, const CqMAC& wq, const POVM& y) {
  require_pairs(p, wq, "pe_q1");
  if (y.d1() != wq.n1() || y.d2() != wq.n2() || y.dim() != wq.dim()) {
    throw DimensionMismatch("pe_q1: POVM must be indexed by X1 x X2 on the channel space");
  }
  double success = 0.0;
  for (std::size_t x1 = 0; x1 < wq.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < wq.n2(); ++x2) {
      const double px = p[wq.pair_index(x1, x2)];
      if (px != 0.0) success += px * trace_product(wq.state(x1, x2).op(), y.element(x1, x2));
    }
  }
  return 1.0 - success;
}

double pe_q2(const CqMAC& wq, const EncoderPair& enc, const POVM& y) {
  if (enc.n1() != wq.n1() || enc.n2() != wq.n2()) {
    throw DimensionMismatch("pe_q2: encoder alphabets do not match channel");
  }
  if (y.d1() != enc.M1() || y.d2() != enc.M2() || y.dim() != wq.dim()) {
    throw DimensionMismatch("pe_q2: POVM must be indexed by M1 x M2 on the channel space");
  }
  double success = 0.0;
  for (std::size_t m1 = 0; m1 < enc.M1(); ++m1) {
    for (std::size_t m2 = 0; m2 < enc.M2(); ++m2) {
      for (std::size_t x1 = 0; x1 < wq.n1(); ++x1) {
        for (std::size_t x2 = 0; x2 < wq.n2(); ++x2) {
          const double f = enc.f1(x1, m1) * enc.f2(x2, m2);
          if (f != 0.0) success += f * trace_product(wq.state(x1, x2).op(), y.element(m1, m2));
        }
      }
    }
  }
  return 1.0 - success / static_cast<double>(enc.M3());
}

CqMAC lifted_cq_channel(const CqMAC& wq, const EncoderPair& enc) {
  if (enc.n1() != wq.n1() || enc.n2() != wq.n2()) {
    throw DimensionMismatch("lifted_cq_channel: encoder alphabets do not match channel");
  }
  std::vector<DensityOperator> states;
  states.reserve(enc.M3());
  for (std::size_t m1 = 0; m1 < enc.M1(); ++m1) {
    for (std::size_t m2 = 0; m2 < enc.M2(); ++m2) {
      auto v = HermitianOperator::zero(wq.dim());
      for (std::size_t x1 = 0; x1 < wq.n1(); ++x1) {
        for (std::size_t x2 = 0; x2 < wq.n2(); ++x2) {
          const double f = enc.f1(x1, m1) * enc.f2(x2, m2);
          if (f != 0.0) v += f * wq.state(x1, x2).op();
        }
      }
      states.emplace_back(std::move(v));
    }
  }
  return CqMAC(enc.M1(), enc.M2(), std::move(states));
}

double theorem2_positive_part_sum(const Distribution& p, const CqMAC& wq, const SigmaFamily& fam,
                                  const AlphaTriple& alpha) {
  require_pairs(p, wq, "theorem2");
  if (fam.n1() != wq.n1() || fam.n2() != wq.n2() || fam.sigma().dim() != wq.dim()) {
    throw DimensionMismatch("theorem2: sigma family shape does not match channel");
  }
  double sum = 0.0;
  for (std::size_t x1 = 0; x1 < wq.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < wq.n2(); ++x2) {
      const double px = p[wq.pair_index(x1, x2)];
      auto diff = px * wq.state(x1, x2).op();
      diff -= fam.sigma_alpha(alpha, x1, x2);
      sum += positive_part_trace(diff);
    }
  }
  return sum;
}

BoundReport theorem2_bound(const Distribution& p, const CqMAC& wq, const SigmaFamily& fam,
                           const AlphaTriple& alpha) {
  auto r = positive_part_report("theorem2", theorem2_positive_part_sum(p, wq, fam, alpha),
                                alpha.sum());
  add_params(r, alpha, "alpha");
  return r;
}

BoundReport cor5_bound(const Distribution& p, const CqMAC& wq, const SigmaFamily& fam,
                       const AlphaTriple& alpha) {
  require_pairs(p, wq, "cor5");
  if (fam.n1() != wq.n1() || fam.n2() != wq.n2() || fam.sigma().dim() != wq.dim()) {
    throw DimensionMismatch("cor5: sigma family shape does not match channel");
  }
  double prob = 0.0;
  int hits = 0;
  for (std::size_t x1 = 0; x1 < wq.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < wq.n2(); ++x2) {
      const double px = p[wq.pair_index(x1, x2)];
      if (px == 0.0) continue;
      const auto& w = wq.state(x1, x2).op();
      const auto proj = projector_leq(px * w, fam.sigma_alpha(alpha, x1, x2));
      hits += proj.band_hits();
      prob += px * trace_product(w, proj.op());
    }
  }
  BoundReport r;
  r.name = "cor5";
  r.probability_term = prob;
  r.penalty_term = alpha.sum();
  r.bound = prob - alpha.sum();
  add_params(r, alpha, "alpha");
  r.diagnostics.emplace_back("band_hits", hits);
  return r;
}

BoundReport cor6_bound(const Distribution& p, const CqMAC& wq, const AlphaTriple& alpha) {
  require_pairs(p, wq, "cor6");
  const auto avg = average_family(p, wq);
  double prob = 0.0;
  int hits = 0;
  for (std::size_t x1 = 0; x1 < wq.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < wq.n2(); ++x2) {
      const double px = p[wq.pair_index(x1, x2)];
      if (px == 0.0) continue;
      const auto& w = wq.state(x1, x2).op();
      const auto proj = projector_leq(px * w, avg.sigma_alpha(alpha, x1, x2));
      hits += proj.band_hits();
      prob += px * trace_product(w, proj.op());
    }
  }
  BoundReport r;
  r.name = "cor6";
  r.probability_term = prob;
  r.penalty_term = alpha.sum() * prob;
  r.bound = prob - r.penalty_term;
  add_params(r, alpha, "alpha");
  r.diagnostics.emplace_back("band_hits", hits);
  if (alpha.sum() > 1.0) r.flags.emplace_back("vacuous: sum(alpha) > 1");
  return r;
}

SigmaFamily average_family(const Distribution& p, const CqMAC& wq) {
  require_pairs(p, wq, "average_family");
  const Eigen::Index dim = wq.dim();
  auto wp = HermitianOperator::zero(dim);
  std::vector<HermitianOperator> s1(wq.n1(), HermitianOperator::zero(dim));
  std::vector<HermitianOperator> s2(wq.n2(), HermitianOperator::zero(dim));
  for (std::size_t x1 = 0; x1 < wq.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < wq.n2(); ++x2) {
      const double px = p[wq.pair_index(x1, x2)];
      if (px == 0.0) continue;
      const auto term = px * wq.state(x1, x2).op();
      wp += term;
      s1[x1] += term;
      s2[x2] += term;
    }
  }
  return SigmaFamily(DensityOperator(std::move(wp)), std::move(s1), std::move(s2));
}

SigmaFamily constructive_sigma_family(const Distribution& p, const CqMAC& wq, double mix) {
  require_pairs(p, wq, "constructive_sigma_family");
  if (!(mix >= 0.0 && mix <= 1.0)) throw InvalidModel("constructive_sigma_family: mix in [0,1]");
  const Eigen::Index dim = wq.dim();
  const auto avg = average_family(p, wq);
  auto sigma = (1.0 - mix) * avg.sigma().op();
  sigma += (mix / static_cast<double>(dim)) * HermitianOperator::identity(dim);

  // Largest c in [0,1] with sigma - c*a >= 0, by bisection.
  auto scale = [&](const HermitianOperator& a) {
    if (min_eigenvalue(sigma - a) >= 0.0) return a;
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 50; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (min_eigenvalue(sigma - mid * a) >= 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return lo * a;
  };
  // p-conditional average state of one input; uniform weights if the input
  // has probability zero.
  auto conditional = [&](bool first, std::size_t x) {
    const std::size_t other = first ? wq.n2() : wq.n1();
    auto acc = HermitianOperator::zero(dim);
    double total = 0.0;
    for (std::size_t k = 0; k < other; ++k) {
      const auto idx = first ? wq.pair_index(x, k) : wq.pair_index(k, x);
      total += p[idx];
    }
    for (std::size_t k = 0; k < other; ++k) {
      const auto idx = first ? wq.pair_index(x, k) : wq.pair_index(k, x);
      const double w = total > 0.0 ? p[idx] / total : 1.0 / static_cast<double>(other);
      if (w != 0.0) acc += w * wq.states()[idx].op();
    }
    return acc;
  };
  std::vector<HermitianOperator> s1, s2;
  for (std::size_t x = 0; x < wq.n1(); ++x) s1.push_back(scale(conditional(true, x)));
  for (std::size_t x = 0; x < wq.n2(); ++x) s2.push_back(scale(conditional(false, x)));
  return SigmaFamily(DensityOperator(std::move(sigma)), std::move(s1), std::move(s2));
}

EncoderSigmaFamily induced_encoder_sigma_family(const CqMAC& wq, const EncoderPair& enc) {
  if (enc.n1() != wq.n1() || enc.n2() != wq.n2()) {
    throw DimensionMismatch("induced_encoder_sigma_family: encoder alphabets do not match");
  }
  const auto [p1, p2] = induced_input(enc);
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
  return {DensityOperator(std::move(sigma)), std::move(s1), std::move(s2)};
}

std::vector<std::string> check_encoder_dominance(const EncoderPair& enc,
                                                 const EncoderSigmaFamily& fam) {
  if (fam.sigma1.size() != enc.n1() || fam.sigma2.size() != enc.n2()) {
    throw DimensionMismatch("encoder sigma family: need one operator per input symbol");
  }
  std::vector<std::string> warnings;
  for (std::size_t x = 0; x < fam.sigma1.size(); ++x) {
    require_psd(fam.sigma1[x], "sigma_x1[" + std::to_string(x) + "]");
    if (std::abs(fam.sigma1[x].trace() - 1.0) > kTraceTolerance) {
      warnings.push_back("sigma_x1[" + std::to_string(x) + "] has non-unit trace");
    }
  }
  for (std::size_t x = 0; x < fam.sigma2.size(); ++x) {
    require_psd(fam.sigma2[x], "sigma_x2[" + std::to_string(x) + "]");
    if (std::abs(fam.sigma2[x].trace() - 1.0) > kTraceTolerance) {
      warnings.push_back("sigma_x2[" + std::to_string(x) + "] has non-unit trace");
    }
  }
  const Eigen::Index dim = fam.sigma.dim();
  OrderScan scan;
  for (std::size_t m = 0; m < enc.M1(); ++m) {
    auto mixed = HermitianOperator::zero(dim);
    for (std::size_t x = 0; x < enc.n1(); ++x) {
      if (enc.f1(x, m) != 0.0) mixed += enc.f1(x, m) * fam.sigma1[x];
    }
    scan.visit(fam.sigma.op(), (1.0 / static_cast<double>(enc.M1())) * mixed,
               "sigma'_m1[" + std::to_string(m) + "]");
  }
  for (std::size_t m = 0; m < enc.M2(); ++m) {
    auto mixed = HermitianOperator::zero(dim);
    for (std::size_t x = 0; x < enc.n2(); ++x) {
      if (enc.f2(x, m) != 0.0) mixed += enc.f2(x, m) * fam.sigma2[x];
    }
    scan.visit(fam.sigma.op(), (1.0 / static_cast<double>(enc.M2())) * mixed,
               "sigma'_m2[" + std::to_string(m) + "]");
  }
  scan.raise_if_violated("operator order sigma >= (1/M) sum_x f(x|m) sigma_x fails");
  return warnings;
}

double cor7_positive_part_sum(const CqMAC& wq, const EncoderPair& enc,
                              const EncoderSigmaFamily& fam, const AlphaTriple& gammas) {
  if (enc.n1() != wq.n1() || enc.n2() != wq.n2() || fam.sigma.dim() != wq.dim()) {
    throw DimensionMismatch("cor7: shapes do not match channel");
  }
  check_encoder_dominance(enc, fam);
  const auto [p1, p2] = induced_input(enc);
  double sum = 0.0;
  for (std::size_t x1 = 0; x1 < wq.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < wq.n2(); ++x2) {
      const double px = p1[x1] * p2[x2];
      if (px == 0.0) continue;
      auto diff = wq.state(x1, x2).op();
      diff -= gammas.a1() * fam.sigma2[x2];
      diff -= gammas.a2() * fam.sigma1[x1];
      diff -= gammas.a3() * fam.sigma.op();
      sum += px * positive_part_trace(diff);
    }
  }
  return sum;
}

BoundReport cor7_bound(const CqMAC& wq, const EncoderPair& enc, const EncoderSigmaFamily& fam,
                       const AlphaTriple& gammas) {
  const auto warnings = check_encoder_dominance(enc, fam);
  const double penalty = gammas.a1() / static_cast<double>(enc.M1()) +
                         gammas.a2() / static_cast<double>(enc.M2()) +
                         gammas.a3() / static_cast<double>(enc.M3());
  auto r = positive_part_report("cor7", cor7_positive_part_sum(wq, enc, fam, gammas), penalty);
  add_params(r, gammas, "gamma");
  r.flags = warnings;
  return r;
}

double cor7_message_level_sum(const CqMAC& wq, const EncoderPair& enc,
                              const EncoderSigmaFamily& fam, const AlphaTriple& gammas) {
  check_encoder_dominance(enc, fam);
  const auto v = lifted_cq_channel(wq, enc);
  const Eigen::Index dim = wq.dim();
  const double M1 = static_cast<double>(enc.M1());
  const double M2 = static_cast<double>(enc.M2());
  const double M3 = static_cast<double>(enc.M3());
  auto mixes = [&](const StochasticMatrix& f, const std::vector<HermitianOperator>& s, double M) {
    std::vector<HermitianOperator> out;
    for (Eigen::Index m = 0; m < f.rows(); ++m) {
      auto acc = HermitianOperator::zero(dim);
      for (std::size_t x = 0; x < s.size(); ++x) {
        const double w = f(m, static_cast<Eigen::Index>(x));
        if (w != 0.0) acc += w * s[x];
      }
      out.push_back((1.0 / M) * acc);
    }
    return out;
  };
  const auto s1p = mixes(enc.first(), fam.sigma1, M1);
  const auto s2p = mixes(enc.second(), fam.sigma2, M2);
  double sum = 0.0;
  for (std::size_t m1 = 0; m1 < enc.M1(); ++m1) {
    for (std::size_t m2 = 0; m2 < enc.M2(); ++m2) {
      auto diff = (1.0 / M3) * v.state(m1, m2).op();
      diff -= (gammas.a1() / M1) * s2p[m2];
      diff -= (gammas.a2() / M2) * s1p[m1];
      diff -= (gammas.a3() / M3) * fam.sigma.op();
      sum += positive_part_trace(diff);
    }
  }
  return sum;
}

POVM pgm_decoder(const Distribution& p, const CqMAC& wq) {
  require_pairs(p, wq, "pgm_decoder");
  std::vector<HermitianOperator> weighted;
  weighted.reserve(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) weighted.push_back(p[k] * wq.states()[k].op());
  return square_root_measurement(wq.n1(), wq.n2(), weighted);
}

POVM pgm_decoder(const CqMAC& wq, const EncoderPair& enc) {
  const auto v = lifted_cq_channel(wq, enc);
  return pgm_decoder(Distribution::uniform(enc.M3()), v);
}

POVM random_povm(Eigen::Index dim, std::size_t d1, std::size_t d2, Rng& rng) {
  const std::size_t k = d1 * d2;
  if (k == 0) throw InvalidModel("random_povm: need at least one outcome");
  if (k == 1) return POVM(1, 1, {HermitianOperator::identity(dim)});
  std::vector<HermitianOperator> g;
  g.reserve(k);
  for (std::size_t i = 0; i < k; ++i) g.push_back(random_psd(dim, rng));
  return square_root_measurement(d1, d2, g);
}

POVM random_povm(Eigen::Index dim, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return random_povm(dim, k, 1, rng);
}

CqMAC diag_embed(const ClassicalMAC& w) {
  std::vector<DensityOperator> states;
  states.reserve(w.n1() * w.n2());
  for (std::size_t k = 0; k < w.n1() * w.n2(); ++k) {
    const Eigen::VectorXd row = w.matrix().row(static_cast<Eigen::Index>(k)).transpose();
    states.emplace_back(HermitianOperator::diagonal(row));
  }
  return CqMAC(w.n1(), w.n2(), std::move(states));
}

POVM diag_povm(const Decoder& g) {
  std::vector<HermitianOperator> elements;
  elements.reserve(g.d1() * g.d2());
  for (std::size_t k = 0; k < g.d1() * g.d2(); ++k) {
    elements.push_back(HermitianOperator::diagonal(g.matrix().col(static_cast<Eigen::Index>(k))));
  }
  return POVM(g.d1(), g.d2(), std::move(elements));
}

CqMAC restrict_to_codebooks(const CqMAC& wq, const CodebookPair& cb) {
  cb.check_range(wq.n1(), wq.n2());
  std::vector<DensityOperator> states;
  for (auto a : cb.first()) {
    for (auto b : cb.second()) states.push_back(wq.state(a, b));
  }
  return CqMAC(cb.M1(), cb.M2(), std::move(states));
}

CqMAC product_extend(const CqMAC& wq, std::size_t n, std::size_t cap) {
  if (n == 0) throw InvalidModel("product_extend: n must be positive");
  std::size_t n1 = 1, n2 = 1, dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    n1 *= wq.n1();
    n2 *= wq.n2();
    dim *= static_cast<std::size_t>(wq.dim());
    if (n1 * n2 > cap || dim * dim > cap || n1 * n2 * dim * dim > cap) {
      throw SizeCapExceeded("cq product extension exceeds size cap of " + std::to_string(cap));
    }
  }
  std::vector<DensityOperator> states;
  states.reserve(n1 * n2);
  std::vector<std::size_t> a1(n), a2(n);
  for (std::size_t s1 = 0; s1 < n1; ++s1) {
    for (std::size_t s2 = 0; s2 < n2; ++s2) {
      std::size_t r1 = s1, r2 = s2;
      for (std::size_t k = n; k-- > 0;) {
        a1[k] = r1 % wq.n1();
        r1 /= wq.n1();
        a2[k] = r2 % wq.n2();
        r2 /= wq.n2();
      }
      HermitianOperator acc = wq.state(a1[0], a2[0]).op();
      for (std::size_t k = 1; k < n; ++k) acc = kron(acc, wq.state(a1[k], a2[k]).op());
      states.emplace_back(std::move(acc));
    }
  }
  return CqMAC(n1, n2, std::move(states));
}

CqMAC random_cq_mac(std::size_t n1, std::size_t n2, Eigen::Index dim, Rng& rng) {
  std::vector<DensityOperator> states;
  states.reserve(n1 * n2);
  for (std::size_t k = 0; k < n1 * n2; ++k) {
    const auto rank = static_cast<Eigen::Index>(1 + rng() % static_cast<std::uint64_t>(dim));
    states.push_back(random_density(dim, rank, rng));
  }
  return CqMAC(n1, n2, std::move(states));
}

}  // namespace macbound
