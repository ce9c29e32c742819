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

// Lower bounds on the decoding error of a classical two-user MAC: the
// positive-part inequality, its Yagi-Oohama-type and Poor-Verdu-type
// corollaries, their stochastic-encoder versions, and the Han and
// Yagi-Oohama bounds for codebooks.

#include <cstddef>

#include <Eigen/Core>

#include "macbound/model.hpp"
#include "macbound/report.hpp"

namespace macbound {

// Tolerance for the dominance preconditions q >= q1, q >= q2.
inline constexpr double kDominanceTolerance = 1e-12;
// Relative tolerance under which lhs <= rhs counts as a tie (and so as a member).
inline constexpr double kTieTolerance = 1e-14;

// Non-strict event membership lhs <= rhs, with near-equalities counted in.
inline bool event_member(double lhs, double rhs) {
  const double scale = lhs > rhs ? lhs : rhs;
  const double mag = scale < 0.0 ? -scale : scale;
  return lhs <= rhs + kTieTolerance * mag;
}

// Nonnegative weights (alpha1, alpha2, alpha3). Alpha1 multiplies the
// user-2 term, alpha2 the user-1 term and alpha3 the output-only term.
class AlphaTriple {
 public:
  AlphaTriple() = default;
  AlphaTriple(double a1, double a2, double a3);

  double a1() const noexcept { return a_[0]; }
  double a2() const noexcept { return a_[1]; }
  double a3() const noexcept { return a_[2]; }
  double operator[](std::size_t i) const { return a_[i]; }
  double sum() const noexcept { return a_[0] + a_[1] + a_[2]; }

 private:
  double a_[3] = {0.0, 0.0, 0.0};
};

// (q(y), q1(x1,y), q2(x2,y)) with q a distribution and q >= q1, q >= q2
// entrywise. q1 is n1 x m, q2 is n2 x m; neither needs to be normalized.
class DominatedFamily {
 public:
  DominatedFamily() = default;
  // Throws PreconditionViolation naming the worst entry if dominance fails.
  DominatedFamily(Distribution q, Eigen::MatrixXd q1, Eigen::MatrixXd q2);

  // q1(x1,y) = q2(x2,y) = q(y).
  static DominatedFamily output_only(const Distribution& q, std::size_t n1, std::size_t n2);
  // q = p(y), q1 = p(x1,y), q2 = p(x2,y).
  static DominatedFamily from_marginals(const JointPMF& joint);

  std::size_t n1() const noexcept { return static_cast<std::size_t>(q1_.rows()); }
  std::size_t n2() const noexcept { return static_cast<std::size_t>(q2_.rows()); }
  std::size_t m() const noexcept { return q_.size(); }
  double q(std::size_t y) const { return q_[y]; }
  double q1(std::size_t x1, std::size_t y) const {
    return q1_(static_cast<Eigen::Index>(x1), static_cast<Eigen::Index>(y));
  }
  double q2(std::size_t x2, std::size_t y) const {
    return q2_(static_cast<Eigen::Index>(x2), static_cast<Eigen::Index>(y));
  }

  // q_alpha(x1,x2,y) = a1 q2(x2,y) + a2 q1(x1,y) + a3 q(y)
  double q_alpha(const AlphaTriple& a, std::size_t x1, std::size_t x2, std::size_t y) const {
    return a.a1() * q2(x2, y) + a.a2() * q1(x1, y) + a.a3() * q(y);
  }

 private:
  Distribution q_;
  Eigen::MatrixXd q1_;
  Eigen::MatrixXd q2_;
};

// sum_{x1,x2,y} [p(x1,x2,y) - q_alpha(x1,x2,y)]_+ . For every decoder g,
// 1 - Pe(g) - sum(alpha) is at most this value.
double theorem1_positive_part_sum(const JointPMF& joint, const DominatedFamily& fam,
                                  const AlphaTriple& alpha);

// Pe >= 1 - sum(alpha) - theorem1_positive_part_sum.
BoundReport theorem1_bound(const JointPMF& joint, const DominatedFamily& fam,
                           const AlphaTriple& alpha);

// Pe >= Pr{p <= q_alpha} - sum(alpha).
BoundReport cor1_bound(const JointPMF& joint, const DominatedFamily& fam,
                       const AlphaTriple& alpha);

// Pe >= (1 - sum(alpha)) Pr{p <= p_alpha}, p_alpha = a1 p(x2,y) + a2 p(x1,y) + a3 p(y).
// sum(alpha) > 1 is allowed and flagged "vacuous".
BoundReport cor2_bound(const JointPMF& joint, const AlphaTriple& alpha);

// Han: Pe >= Pr{L1 u L2 u L3} - 3 gamma over the uniform codebook joint.
// Diagnostics carry Pr{L1}, Pr{L2}, Pr{L3}.
BoundReport han_bound(const ClassicalMAC& w, const CodebookPair& cb, double gamma);

// Yagi-Oohama: Pe >= Pr{W <= gamma' q~} - gamma' sum_i pi_i / M_i, with
// q~ = pi1 q(y|x2) + pi2 q(y|x1) + pi3 q(y) from q(x1,x2,y) = pu1 pu2 qcond.
// `qcond` has the full shape of `w`; only codeword rows are used.
BoundReport yagi_oohama_bound(const ClassicalMAC& w, const CodebookPair& cb,
                              const ClassicalMAC& qcond, const Distribution& pi, double gamma_prime);

// Yagi-Oohama with qcond = W, pi_i = M_i / sum M, gamma' = gamma sum M:
// Pe >= Pr{W <= gamma (M1 p(y|x2) + M2 p(y|x1) + M3 p(y))} - 3 gamma.
BoundReport yo_specialized(const ClassicalMAC& w, const CodebookPair& cb, double gamma);

// Auxiliary functions for the stochastic-encoder bound: q(y) and
// nonnegative tables q1c(y|x1) (n1 x m), q2c(y|x2) (n2 x m), checked for
//   q(y) >= (1/M1) sum_x1 f1(x1|m1) q1c(y|x1)   for all m1, y
//   q(y) >= (1/M2) sum_x2 f2(x2|m2) q2c(y|x2)   for all m2, y.
struct EncoderFamily {
  Distribution q;
  Eigen::MatrixXd q1c;
  Eigen::MatrixXd q2c;
};

// q = p(y), q1c = p(y|x1), q2c = p(y|x2) of the joint p1 p2 W; rows of
// zero-probability inputs are filled with q. Always satisfies the dominance.
EncoderFamily induced_encoder_family(const ClassicalMAC& w, const EncoderPair& enc);

// Throws PreconditionViolation if the 1/M-scaled dominance fails.
void check_encoder_dominance(const EncoderPair& enc, const EncoderFamily& fam);

// sum_{x1,x2,y} p1 p2 [W - q~_gamma]_+ with q~ = g1 q2c(y|x2) + g2 q1c(y|x1) + g3 q(y).
// 1 - Pe - sum_i gamma_i / M_i is at most this value.
double cor3_positive_part_sum(const ClassicalMAC& w, const EncoderPair& enc,
                              const EncoderFamily& fam, const AlphaTriple& gammas);

BoundReport cor3_bound(const ClassicalMAC& w, const EncoderPair& enc, const EncoderFamily& fam,
                       const AlphaTriple& gammas);

// The same inequality before the convexity step: positive parts taken per
// message pair on the lifted channel V. Never exceeds cor3_positive_part_sum.
double cor3_message_level_sum(const ClassicalMAC& w, const EncoderPair& enc,
                              const EncoderFamily& fam, const AlphaTriple& gammas);

// Pe >= Pr{W <= gamma q~} - gamma sum_i pi_i / M_i under p1 p2 W, with q~
// built from q(x1,x2,y) = p1 p2 qcond.
BoundReport cor4_bound(const ClassicalMAC& w, const EncoderPair& enc, const ClassicalMAC& qcond,
                       const Distribution& pi, double gamma);

}  // namespace macbound
