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

// Finite-blocklength spectrum quantities for cq-MACs: the threshold trace
// term, the average-state triple, the finite-n converse check for a concrete
// code, and rate-region sweeps.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "macbound/hermitian.hpp"
#include "macbound/model.hpp"
#include "macbound/quantum_bounds.hpp"

namespace macbound {

// Residual tolerance for the two averaging constraints of a SigmaTriple.
inline constexpr double kTripleTolerance = 1e-10;
// Slack allowed in the finite-n converse inequality.
inline constexpr double kConverseTolerance = 1e-8;
// Slack allowed when checking monotonicity of the threshold term on grids.
inline constexpr double kMonotoneTolerance = 1e-12;

// (sigma, sigma_x1, sigma_x2) with
//   sigma = sum_x1 p1(x1) sigma_x1 = sum_x2 p2(x2) sigma_x2.
class SigmaTriple {
 public:
  // Throws PreconditionViolation if either average misses sigma by more than
  // kTripleTolerance (Frobenius).
  SigmaTriple(DensityOperator sigma, std::vector<DensityOperator> sigma1,
              std::vector<DensityOperator> sigma2, Distribution p1, Distribution p2);

  const DensityOperator& sigma() const noexcept { return sigma_; }
  const DensityOperator& sigma1(std::size_t x1) const { return sigma1_[x1]; }
  const DensityOperator& sigma2(std::size_t x2) const { return sigma2_[x2]; }
  const Distribution& p1() const noexcept { return p1_; }
  const Distribution& p2() const noexcept { return p2_; }
  std::size_t n1() const noexcept { return sigma1_.size(); }
  std::size_t n2() const noexcept { return sigma2_.size(); }
  Eigen::Index dim() const noexcept { return sigma_.dim(); }

  // Frobenius residuals of the two averaging constraints.
  double residual1() const;
  double residual2() const;

 private:
  DensityOperator sigma_;
  std::vector<DensityOperator> sigma1_;
  std::vector<DensityOperator> sigma2_;
  Distribution p1_;
  Distribution p2_;
};

// Rates in nats per channel use; finite and nonnegative.
struct RatePair {
  double r1 = 0.0;
  double r2 = 0.0;

  RatePair() = default;
  RatePair(double r1_, double r2_);
};

// A blocklength-n code for the n-fold channel.
struct CodeInstance {
  std::size_t n = 1;
  EncoderPair enc;
  POVM decoder;
};

// sum p1 p2 Tr[W {W <= e^{nR1} sigma_x2 + e^{nR2} sigma_x1 + e^{n(R1+R2)} sigma}]
double k_term(const CqMAC& wn, const Distribution& p1, const Distribution& p2,
              const SigmaTriple& st, const RatePair& rates, std::size_t n);

// sigma = sum p1 p2 W, sigma_x1 = sum_x2 p2 W, sigma_x2 = sum_x1 p1 W.
SigmaTriple wp_triple(const Distribution& p1, const Distribution& p2, const CqMAC& wq);

struct ConverseReport {
  std::size_t n = 0;
  double gamma = 0.0;
  RatePair rates;
  double error_probability = 0.0;  // epsilon_n of the code
  double rhs = 0.0;                // B-threshold term minus 3 e^{-n gamma}
  double slack = 0.0;              // error_probability - rhs
  bool precondition_met = false;   // M1 >= e^{n(R1-gamma)}, M2 >= e^{n(R2-gamma)}
  bool inequality_holds = false;   // error_probability >= rhs - kConverseTolerance
  // Intermediate values of the chain, each at most the next:
  //   message_sum <= a_sum <= b_sum <= b_complement
  // with positive-part sums against the code-dependent threshold, against A,
  // against B, and sum p1 p2 Tr[W {W > B}].
  double message_sum = 0.0;
  double a_sum = 0.0;
  double b_sum = 0.0;
  double b_complement = 0.0;
  // Scalar coefficients of A and B on (sigma_x2, sigma_x1, sigma).
  std::vector<double> a_coefficients;
  std::vector<double> b_coefficients;
  std::vector<std::string> notes;
};

// Evaluates the finite-n converse inequality for `code` on the n-fold channel
// `wn`. `st` must average to sigma under the inputs induced by the encoders.
// An unmet rate precondition is recorded in the report, not thrown.
ConverseReport finite_n_converse_check(const CqMAC& wn, const CodeInstance& code,
                                       const SigmaTriple& st, double gamma,
                                       const RatePair& rates);

struct GridAxis {
  double min = 0.0;
  double max = 2.0;
  std::size_t steps = 41;

  double at(std::size_t i) const;
};

// "R1min:R1max:steps,R2min:R2max:steps"; throws InvalidModel when malformed.
std::pair<GridAxis, GridAxis> parse_grid(const std::string& spec);

struct MonotoneViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  int axis = 0;  // 1 or 2: which rate was decreased
  double drop = 0.0;
};

struct RegionGrid {
  GridAxis axis1;
  GridAxis axis2;
  double eps = 0.0;
  // Row-major over (i along axis1, j along axis2).
  std::vector<double> k_values;
  std::vector<bool> member;
  std::vector<MonotoneViolation> violations;

  double k(std::size_t i, std::size_t j) const { return k_values[i * axis2.steps + j]; }
  bool contains(std::size_t i, std::size_t j) const { return member[i * axis2.steps + j]; }
  std::size_t member_count() const;
};

// Membership {k_term <= eps} over the lattice for the n-fold extension of
// `wq` with i.i.d. inputs p1^n, p2^n. With no custom triple the average-state
// triple of the n-fold channel is used; a custom triple must live on the
// n-fold space. Rate-monotonicity failures are collected in `violations`.
RegionGrid region_grid(const CqMAC& wq, std::size_t n, const Distribution& p1,
                       const Distribution& p2, const std::optional<SigmaTriple>& custom,
                       double eps, const GridAxis& axis1, const GridAxis& axis2);

struct KWindow {
  std::vector<double> values;  // k_term at n = 1..n_max
  double upper = 0.0;          // max over the window
  double lower = 0.0;          // min over the window
  std::string label = "finite-window estimate";
};

// k_term(n) for n = 1..n_max with i.i.d. inputs and the average-state triple.
KWindow k_window(const CqMAC& wq, const Distribution& p1, const Distribution& p2,
                 const RatePair& rates, std::size_t n_max);

}  // namespace macbound
