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

#include "macbound/classical_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "macbound/decoders.hpp"
#include "macbound/error.hpp"

namespace macbound {
namespace {

std::string cell(const char* name, std::size_t a, std::size_t b) {
  return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_nonnegative(const Eigen::MatrixXd& t, const char* name) {
  for (Eigen::Index r = 0; r < t.rows(); ++r) {
    for (Eigen::Index c = 0; c < t.cols(); ++c) {
      if (!std::isfinite(t(r, c)) || t(r, c) < 0.0) {
        throw InvalidModel(cell(name, static_cast<std::size_t>(r), static_cast<std::size_t>(c)) +
                           " must be finite and nonnegative");
      }
    }
  }
}

// Tracks the worst violation of q(y) >= t(row,y) over a table.
struct DominanceScan {
  double worst = 0.0;
  std::string where;

  void visit(double excess, const std::string& at) {
    if (excess > worst) {
      worst = excess;
      where = at;
    }
  }
  void raise_if_violated(const std::string& what) const {
    if (worst > kDominanceTolerance) throw PreconditionViolation(what, where, worst);
  }
};

void add_params(BoundReport& r, const AlphaTriple& a, const char* prefix) {
  const std::string p(prefix);
  r.params.emplace_back(p + "1", a.a1());
  r.params.emplace_back(p + "2", a.a2());
  r.params.emplace_back(p + "3", a.a3());
}

BoundReport positive_part_report(std::string name, double sum, double penalty) {
  BoundReport r;
  r.name = std::move(name);
  r.positive_part_sum = sum;
  r.probability_term = 1.0 - sum;
  r.penalty_term = penalty;
  r.bound = r.probability_term - r.penalty_term;
  return r;
}

BoundReport probability_report(std::string name, double prob, double penalty) {
  BoundReport r;
  r.name = std::move(name);
  r.probability_term = prob;
  r.penalty_term = penalty;
  r.bound = prob - penalty;
  return r;
}

void check_gamma(double gamma, bool allow_zero) {
  if (!std::isfinite(gamma) || gamma < 0.0 || (!allow_zero && gamma == 0.0)) {
    throw InvalidModel("gamma must be " + std::string(allow_zero ? "nonnegative" : "positive"));
  }
}

void check_pi(const Distribution& pi) {
  if (pi.size() != 3) throw DimensionMismatch("pi must be a distribution on {1,2,3}");
}

// q(y|x1), q(y|x2), q(y) of the joint p1(x1) p2(x2) q(y|x1,x2). Conditionals of
// zero-probability inputs are left as NaN; they only ever meet zero weight.
struct AuxMarginals {
  Eigen::MatrixXd given_x1;  // n1 x m
  Eigen::MatrixXd given_x2;  // n2 x m
  Eigen::VectorXd out;       // m
};

AuxMarginals aux_marginals(const ClassicalMAC& q, const Distribution& p1, const Distribution& p2) {
  const auto n1 = static_cast<Eigen::Index>(q.n1());
  const auto n2 = static_cast<Eigen::Index>(q.n2());
  const auto m = static_cast<Eigen::Index>(q.m());
  AuxMarginals a{Eigen::MatrixXd::Zero(n1, m), Eigen::MatrixXd::Zero(n2, m),
                 Eigen::VectorXd::Zero(m)};
  for (std::size_t x1 = 0; x1 < q.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < q.n2(); ++x2) {
      const auto row = q.matrix().row(static_cast<Eigen::Index>(q.pair_index(x1, x2)));
      a.given_x1.row(static_cast<Eigen::Index>(x1)) += p2[x2] * row;
      a.given_x2.row(static_cast<Eigen::Index>(x2)) += p1[x1] * row;
      a.out += p1[x1] * p2[x2] * row.transpose();
    }
  }
  const double nan = std::nan("");
  for (std::size_t x1 = 0; x1 < q.n1(); ++x1) {
    if (p1[x1] == 0.0) a.given_x1.row(static_cast<Eigen::Index>(x1)).setConstant(nan);
  }
  for (std::size_t x2 = 0; x2 < q.n2(); ++x2) {
    if (p2[x2] == 0.0) a.given_x2.row(static_cast<Eigen::Index>(x2)).setConstant(nan);
  }
  return a;
}

double defined(double v, const char* what) {
  if (std::isnan(v)) throw UndefinedConditional(std::string(what) + " used with nonzero weight");
  return v;
}

// Pr{W <= scale * (pi1 q(y|x2) + pi2 q(y|x1) + pi3 q(y))} under p1 p2 W.
double yo_event_probability(const ClassicalMAC& w, const Distribution& p1, const Distribution& p2,
                            const AuxMarginals& aux, const Distribution& pi, double scale) {
  double prob = 0.0;
  for (std::size_t x1 = 0; x1 < w.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < w.n2(); ++x2) {
      const double px = p1[x1] * p2[x2];
      if (px == 0.0) continue;
      for (std::size_t y = 0; y < w.m(); ++y) {
        const double wv = w(x1, x2, y);
        if (wv == 0.0) continue;
        const auto yi = static_cast<Eigen::Index>(y);
        const double qt =
            pi[0] * defined(aux.given_x2(static_cast<Eigen::Index>(x2), yi), "q(y|x2)") +
            pi[1] * defined(aux.given_x1(static_cast<Eigen::Index>(x1), yi), "q(y|x1)") +
            pi[2] * aux.out(yi);
        if (event_member(wv, scale * qt)) prob += px * wv;
      }
    }
  }
  return prob;
}

}  // namespace

AlphaTriple::AlphaTriple(double a1, double a2, double a3) : a_{a1, a2, a3} {
  for (double v : a_) {
    if (!std::isfinite(v) || v < 0.0) throw InvalidModel("alpha components must be nonnegative");
  }
}

DominatedFamily::DominatedFamily(Distribution q, Eigen::MatrixXd q1, Eigen::MatrixXd q2)
    : q_(std::move(q)), q1_(std::move(q1)), q2_(std::move(q2)) {
  const auto m = static_cast<Eigen::Index>(q_.size());
  if (q1_.cols() != m || q2_.cols() != m) {
    throw DimensionMismatch("dominated family: q1/q2 must have one column per output");
  }
  check_nonnegative(q1_, "q1");
  check_nonnegative(q2_, "q2");
  DominanceScan scan;
  for (Eigen::Index y = 0; y < m; ++y) {
    const double qy = q_[static_cast<std::size_t>(y)];
    for (Eigen::Index x = 0; x < q1_.rows(); ++x) {
      scan.visit(q1_(x, y) - qy, cell("q1", static_cast<std::size_t>(x), static_cast<std::size_t>(y)));
    }
    for (Eigen::Index x = 0; x < q2_.rows(); ++x) {
      scan.visit(q2_(x, y) - qy, cell("q2", static_cast<std::size_t>(x), static_cast<std::size_t>(y)));
    }
  }
  scan.raise_if_violated("dominance q(y) >= q1(x1,y), q2(x2,y) fails");
}

DominatedFamily DominatedFamily::output_only(const Distribution& q, std::size_t n1,
                                             std::size_t n2) {
  Eigen::RowVectorXd row(static_cast<Eigen::Index>(q.size()));
  for (std::size_t y = 0; y < q.size(); ++y) row(static_cast<Eigen::Index>(y)) = q[y];
  return DominatedFamily(q, row.replicate(static_cast<Eigen::Index>(n1), 1),
                         row.replicate(static_cast<Eigen::Index>(n2), 1));
}

DominatedFamily DominatedFamily::from_marginals(const JointPMF& joint) {
  const auto& py = joint.output_marginal();
  return DominatedFamily(Distribution(std::vector<double>(py.data(), py.data() + py.size())),
                         joint.x1y_marginal(), joint.x2y_marginal());
}

double theorem1_positive_part_sum(const JointPMF& joint, const DominatedFamily& fam,
                                  const AlphaTriple& alpha) {
  if (fam.n1() != joint.n1() || fam.n2() != joint.n2() || fam.m() != joint.m()) {
    throw DimensionMismatch("theorem1: family shape does not match joint");
  }
  double sum = 0.0;
  for (std::size_t x1 = 0; x1 < joint.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < joint.n2(); ++x2) {
      for (std::size_t y = 0; y < joint.m(); ++y) {
        sum += std::max(0.0, joint(x1, x2, y) - fam.q_alpha(alpha, x1, x2, y));
      }
    }
  }
  return sum;
}

BoundReport theorem1_bound(const JointPMF& joint, const DominatedFamily& fam,
                           const AlphaTriple& alpha) {
  auto r = positive_part_report("theorem1", theorem1_positive_part_sum(joint, fam, alpha),
                                alpha.sum());
  add_params(r, alpha, "alpha");
  return r;
}

BoundReport cor1_bound(const JointPMF& joint, const DominatedFamily& fam,
                       const AlphaTriple& alpha) {
  if (fam.n1() != joint.n1() || fam.n2() != joint.n2() || fam.m() != joint.m()) {
    throw DimensionMismatch("cor1: family shape does not match joint");
  }
  double prob = 0.0;
  for (std::size_t x1 = 0; x1 < joint.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < joint.n2(); ++x2) {
      for (std::size_t y = 0; y < joint.m(); ++y) {
        const double p = joint(x1, x2, y);
        if (p > 0.0 && event_member(p, fam.q_alpha(alpha, x1, x2, y))) prob += p;
      }
    }
  }
  auto r = probability_report("cor1", prob, alpha.sum());
  add_params(r, alpha, "alpha");
  return r;
}

BoundReport cor2_bound(const JointPMF& joint, const AlphaTriple& alpha) {
  double prob = 0.0;
  for (std::size_t x1 = 0; x1 < joint.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < joint.n2(); ++x2) {
      for (std::size_t y = 0; y < joint.m(); ++y) {
        const double p = joint(x1, x2, y);
        if (p == 0.0) continue;
        const double pa = alpha.a1() * joint.px2y(x2, y) + alpha.a2() * joint.px1y(x1, y) +
                          alpha.a3() * joint.py(y);
        if (event_member(p, pa)) prob += p;
      }
    }
  }
  // bound = (1 - sum alpha) * prob, split as prob - (sum alpha) * prob
  auto r = probability_report("cor2", prob, alpha.sum() * prob);
  add_params(r, alpha, "alpha");
  if (alpha.sum() > 1.0) r.flags.emplace_back("vacuous: sum(alpha) > 1");
  return r;
}

BoundReport han_bound(const ClassicalMAC& w, const CodebookPair& cb, double gamma) {
  check_gamma(gamma, false);
  const auto embed = setting3_embed(cb, w);
  const auto joint = joint_from_setting1(embed.input, embed.channel);
  const auto& v = embed.channel;
  const double M1 = static_cast<double>(cb.M1());
  const double M2 = static_cast<double>(cb.M2());
  const double M3 = static_cast<double>(cb.M3());
  double pl[3] = {0.0, 0.0, 0.0};
  double prob = 0.0;
  for (std::size_t i = 0; i < cb.M1(); ++i) {
    for (std::size_t j = 0; j < cb.M2(); ++j) {
      for (std::size_t y = 0; y < v.m(); ++y) {
        const double p = joint(i, j, y);
        if (p == 0.0) continue;
        const double wv = v(i, j, y);
        const bool in1 = event_member(wv, gamma * M1 * joint.py_given_x2(y, j));
        const bool in2 = event_member(wv, gamma * M2 * joint.py_given_x1(y, i));
        const bool in3 = event_member(wv, gamma * M3 * joint.py(y));
        if (in1) pl[0] += p;
        if (in2) pl[1] += p;
        if (in3) pl[2] += p;
        if (in1 || in2 || in3) prob += p;
      }
    }
  }
  auto r = probability_report("han", prob, 3.0 * gamma);
  r.params.emplace_back("gamma", gamma);
  r.diagnostics.emplace_back("pr_L1", pl[0]);
  r.diagnostics.emplace_back("pr_L2", pl[1]);
  r.diagnostics.emplace_back("pr_L3", pl[2]);
  return r;
}

BoundReport yagi_oohama_bound(const ClassicalMAC& w, const CodebookPair& cb,
                              const ClassicalMAC& qcond, const Distribution& pi,
                              double gamma_prime) {
  check_gamma(gamma_prime, false);
  check_pi(pi);
  if (qcond.n1() != w.n1() || qcond.n2() != w.n2() || qcond.m() != w.m()) {
    throw DimensionMismatch("yagi_oohama: qcond must have the shape of W");
  }
  const auto wr = restrict_to_codebooks(w, cb);
  const auto qr = restrict_to_codebooks(qcond, cb);
  const auto pu1 = Distribution::uniform(cb.M1());
  const auto pu2 = Distribution::uniform(cb.M2());
  const auto aux = aux_marginals(qr, pu1, pu2);
  const double prob = yo_event_probability(wr, pu1, pu2, aux, pi, gamma_prime);
  const double penalty = gamma_prime * (pi[0] / static_cast<double>(cb.M1()) +
                                        pi[1] / static_cast<double>(cb.M2()) +
                                        pi[2] / static_cast<double>(cb.M3()));
  auto r = probability_report("yagi_oohama", prob, penalty);
  r.params.emplace_back("gamma_prime", gamma_prime);
  r.params.emplace_back("pi1", pi[0]);
  r.params.emplace_back("pi2", pi[1]);
  r.params.emplace_back("pi3", pi[2]);
  return r;
}

BoundReport yo_specialized(const ClassicalMAC& w, const CodebookPair& cb, double gamma) {
  check_gamma(gamma, false);
  const auto embed = setting3_embed(cb, w);
  const auto joint = joint_from_setting1(embed.input, embed.channel);
  const auto& v = embed.channel;
  const double M1 = static_cast<double>(cb.M1());
  const double M2 = static_cast<double>(cb.M2());
  const double M3 = static_cast<double>(cb.M3());
  double prob = 0.0;
  for (std::size_t i = 0; i < cb.M1(); ++i) {
    for (std::size_t j = 0; j < cb.M2(); ++j) {
      for (std::size_t y = 0; y < v.m(); ++y) {
        const double p = joint(i, j, y);
        if (p == 0.0) continue;
        const double rhs = gamma * (M1 * joint.py_given_x2(y, j) + M2 * joint.py_given_x1(y, i) +
                                    M3 * joint.py(y));
        if (event_member(v(i, j, y), rhs)) prob += p;
      }
    }
  }
  auto r = probability_report("yo", prob, 3.0 * gamma);
  r.params.emplace_back("gamma", gamma);
  return r;
}

EncoderFamily induced_encoder_family(const ClassicalMAC& w, const EncoderPair& enc) {
  const auto [p1, p2] = induced_input(enc);
  auto aux = aux_marginals(w, p1, p2);
  for (Eigen::Index x = 0; x < aux.given_x1.rows(); ++x) {
    if (std::isnan(aux.given_x1(x, 0))) aux.given_x1.row(x) = aux.out.transpose();
  }
  for (Eigen::Index x = 0; x < aux.given_x2.rows(); ++x) {
    if (std::isnan(aux.given_x2(x, 0))) aux.given_x2.row(x) = aux.out.transpose();
  }
  return {Distribution(std::vector<double>(aux.out.data(), aux.out.data() + aux.out.size())),
          std::move(aux.given_x1), std::move(aux.given_x2)};
}

void check_encoder_dominance(const EncoderPair& enc, const EncoderFamily& fam) {
  const auto m = static_cast<Eigen::Index>(fam.q.size());
  if (static_cast<std::size_t>(fam.q1c.rows()) != enc.n1() || fam.q1c.cols() != m ||
      static_cast<std::size_t>(fam.q2c.rows()) != enc.n2() || fam.q2c.cols() != m) {
    throw DimensionMismatch("encoder family: q1c must be n1 x m and q2c n2 x m");
  }
  check_nonnegative(fam.q1c, "q1c");
  check_nonnegative(fam.q2c, "q2c");
  // (1/M) f q for every message row; f is M x n, q is n x m.
  const Eigen::MatrixXd mix1 = enc.first().matrix() * fam.q1c / static_cast<double>(enc.M1());
  const Eigen::MatrixXd mix2 = enc.second().matrix() * fam.q2c / static_cast<double>(enc.M2());
  DominanceScan scan;
  for (Eigen::Index y = 0; y < m; ++y) {
    const double qy = fam.q[static_cast<std::size_t>(y)];
    for (Eigen::Index k = 0; k < mix1.rows(); ++k) {
      scan.visit(mix1(k, y) - qy, cell("q1'", static_cast<std::size_t>(k), static_cast<std::size_t>(y)));
    }
    for (Eigen::Index k = 0; k < mix2.rows(); ++k) {
      scan.visit(mix2(k, y) - qy, cell("q2'", static_cast<std::size_t>(k), static_cast<std::size_t>(y)));
    }
  }
  scan.raise_if_violated("dominance q(y) >= (1/M) sum_x f(x|m) q(y|x) fails");
}

double cor3_positive_part_sum(const ClassicalMAC& w, const EncoderPair& enc,
                              const EncoderFamily& fam, const AlphaTriple& gammas) {
  if (enc.n1() != w.n1() || enc.n2() != w.n2() || fam.q.size() != w.m()) {
    throw DimensionMismatch("cor3: encoder/family shapes do not match channel");
  }
  check_encoder_dominance(enc, fam);
  const auto [p1, p2] = induced_input(enc);
  double sum = 0.0;
  for (std::size_t x1 = 0; x1 < w.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < w.n2(); ++x2) {
      const double px = p1[x1] * p2[x2];
      if (px == 0.0) continue;
      for (std::size_t y = 0; y < w.m(); ++y) {
        const auto yi = static_cast<Eigen::Index>(y);
        const double qt = gammas.a1() * fam.q2c(static_cast<Eigen::Index>(x2), yi) +
                          gammas.a2() * fam.q1c(static_cast<Eigen::Index>(x1), yi) +
                          gammas.a3() * fam.q[y];
        sum += px * std::max(0.0, w(x1, x2, y) - qt);
      }
    }
  }
  return sum;
}

BoundReport cor3_bound(const ClassicalMAC& w, const EncoderPair& enc, const EncoderFamily& fam,
                       const AlphaTriple& gammas) {
  const double sum = cor3_positive_part_sum(w, enc, fam, gammas);
  const double penalty = gammas.a1() / static_cast<double>(enc.M1()) +
                         gammas.a2() / static_cast<double>(enc.M2()) +
                         gammas.a3() / static_cast<double>(enc.M3());
  auto r = positive_part_report("cor3", sum, penalty);
  add_params(r, gammas, "gamma");
  auto normalized = [](const Eigen::MatrixXd& t) {
    for (Eigen::Index k = 0; k < t.rows(); ++k) {
      if (std::abs(t.row(k).sum() - 1.0) > kSumTolerance) return false;
    }
    return true;
  };
  if (!normalized(fam.q1c)) r.flags.emplace_back("q1c rows not normalized");
  if (!normalized(fam.q2c)) r.flags.emplace_back("q2c rows not normalized");
  return r;
}

double cor3_message_level_sum(const ClassicalMAC& w, const EncoderPair& enc,
                              const EncoderFamily& fam, const AlphaTriple& gammas) {
  check_encoder_dominance(enc, fam);
  const auto v = lifted_channel(w, enc);
  const double M1 = static_cast<double>(enc.M1());
  const double M2 = static_cast<double>(enc.M2());
  const double M3 = static_cast<double>(enc.M3());
  const Eigen::MatrixXd q1p = enc.first().matrix() * fam.q1c / M1;   // q1'(m1,y)
  const Eigen::MatrixXd q2p = enc.second().matrix() * fam.q2c / M2;  // q2'(m2,y)
  double sum = 0.0;
  for (std::size_t m1 = 0; m1 < enc.M1(); ++m1) {
    for (std::size_t m2 = 0; m2 < enc.M2(); ++m2) {
      for (std::size_t y = 0; y < w.m(); ++y) {
        const auto yi = static_cast<Eigen::Index>(y);
        const double qt = gammas.a1() / M1 * q2p(static_cast<Eigen::Index>(m2), yi) +
                          gammas.a2() / M2 * q1p(static_cast<Eigen::Index>(m1), yi) +
                          gammas.a3() / M3 * fam.q[y];
        sum += std::max(0.0, v(m1, m2, y) / M3 - qt);
      }
    }
  }
  return sum;
}

BoundReport cor4_bound(const ClassicalMAC& w, const EncoderPair& enc, const ClassicalMAC& qcond,
                       const Distribution& pi, double gamma) {
  check_gamma(gamma, true);
  check_pi(pi);
  if (enc.n1() != w.n1() || enc.n2() != w.n2() || qcond.n1() != w.n1() ||
      qcond.n2() != w.n2() || qcond.m() != w.m()) {
    throw DimensionMismatch("cor4: encoder/qcond shapes do not match channel");
  }
  const auto [p1, p2] = induced_input(enc);
  const auto aux = aux_marginals(qcond, p1, p2);
  const double prob = yo_event_probability(w, p1, p2, aux, pi, gamma);
  const double penalty = gamma * (pi[0] / static_cast<double>(enc.M1()) +
                                  pi[1] / static_cast<double>(enc.M2()) +
                                  pi[2] / static_cast<double>(enc.M3()));
  auto r = probability_report("cor4", prob, penalty);
  r.params.emplace_back("gamma", gamma);
  r.params.emplace_back("pi1", pi[0]);
  r.params.emplace_back("pi2", pi[1]);
  r.params.emplace_back("pi3", pi[2]);
  return r;
}

}  // namespace macbound
