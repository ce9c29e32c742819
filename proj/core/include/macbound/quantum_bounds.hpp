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

// Classical-quantum MACs: error probabilities of POVM decoders and the
// operator versions of the positive-part inequality and its corollaries.
// Also the pretty-good measurement and random POVMs used as adversaries.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "macbound/classical_bounds.hpp"
#include "macbound/decoders.hpp"
#include "macbound/hermitian.hpp"
#include "macbound/model.hpp"
#include "macbound/report.hpp"

namespace macbound {

// W: (x1,x2) -> density operator, stored at pair index x1*n2+x2.
class CqMAC {
 public:
  CqMAC() = default;
  CqMAC(std::size_t n1, std::size_t n2, std::vector<DensityOperator> states);

  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  Eigen::Index dim() const noexcept { return states_.front().dim(); }
  std::size_t pair_index(std::size_t x1, std::size_t x2) const noexcept { return x1 * n2_ + x2; }
  const DensityOperator& state(std::size_t x1, std::size_t x2) const {
    return states_[pair_index(x1, x2)];
  }
  const std::vector<DensityOperator>& states() const noexcept { return states_; }

 private:
  std::size_t n1_ = 0;
  std::size_t n2_ = 0;
  std::vector<DensityOperator> states_;
};

// Measurement with outcomes (d1,d2), flattened d1*D2 + d2. Elements are PSD
// and sum to the identity, both within 1e-10.
class POVM {
 public:
  POVM() = default;
  POVM(std::size_t d1, std::size_t d2, std::vector<HermitianOperator> elements);

  std::size_t d1() const noexcept { return d1_; }
  std::size_t d2() const noexcept { return d2_; }
  Eigen::Index dim() const noexcept { return elements_.front().dim(); }
  const HermitianOperator& element(std::size_t i, std::size_t j) const {
    return elements_[i * d2_ + j];
  }
  const std::vector<HermitianOperator>& elements() const noexcept { return elements_; }

 private:
  std::size_t d1_ = 0;
  std::size_t d2_ = 0;
  std::vector<HermitianOperator> elements_;
};

// (sigma, sigma_x1, sigma_x2) with sigma a density operator, every sigma_x PSD
// and sigma >= sigma_x1, sigma >= sigma_x2 in operator order.
class SigmaFamily {
 public:
  SigmaFamily() = default;
  // Throws PreconditionViolation naming the worst index on order failure.
  SigmaFamily(DensityOperator sigma, std::vector<HermitianOperator> sigma1,
              std::vector<HermitianOperator> sigma2);

  const DensityOperator& sigma() const noexcept { return sigma_; }
  const HermitianOperator& sigma1(std::size_t x1) const { return sigma1_[x1]; }
  const HermitianOperator& sigma2(std::size_t x2) const { return sigma2_[x2]; }
  std::size_t n1() const noexcept { return sigma1_.size(); }
  std::size_t n2() const noexcept { return sigma2_.size(); }

  // a1 sigma_x2 + a2 sigma_x1 + a3 sigma
  HermitianOperator sigma_alpha(const AlphaTriple& a, std::size_t x1, std::size_t x2) const;

 private:
  DensityOperator sigma_;
  std::vector<HermitianOperator> sigma1_;
  std::vector<HermitianOperator> sigma2_;
};

// 1 - sum p(x1,x2) Tr[W_{x1,x2} Y_{x1,x2}]
double pe_q1(const Distribution& p, const CqMAC& wq, const POVM& y);
// 1 - (1/M1M2) sum_{m,x} f1 f2 Tr[W_{x1,x2} Y_{m1,m2}]
double pe_q2(const CqMAC& wq, const EncoderPair& enc, const POVM& y);

// V_{m1,m2} = sum_{x1,x2} f1(x1|m1) f2(x2|m2) W_{x1,x2}
CqMAC lifted_cq_channel(const CqMAC& wq, const EncoderPair& enc);

// sum_{x1,x2} Tr[(p(x1,x2) W_{x1,x2} - sigma_alpha)_+]. For every POVM,
// 1 - Pe - sum(alpha) is at most this value.
double theorem2_positive_part_sum(const Distribution& p, const CqMAC& wq, const SigmaFamily& fam,
                                  const AlphaTriple& alpha);
BoundReport theorem2_bound(const Distribution& p, const CqMAC& wq, const SigmaFamily& fam,
                           const AlphaTriple& alpha);

// Pe >= sum p Tr[W {pW <= sigma_alpha}] - sum(alpha)
BoundReport cor5_bound(const Distribution& p, const CqMAC& wq, const SigmaFamily& fam,
                       const AlphaTriple& alpha);

// Pe >= (1 - sum(alpha)) sum p Tr[W {pW <= W_alpha}], with
// W_alpha = a1 W_{p,x2} + a2 W_{x1,p} + a3 W_p built from the p-weighted states.
BoundReport cor6_bound(const Distribution& p, const CqMAC& wq, const AlphaTriple& alpha);

// sigma = W_p, sigma_x1 = W_{x1,p} = sum_x2 p W, sigma_x2 = W_{p,x2} = sum_x1 p W.
SigmaFamily average_family(const Distribution& p, const CqMAC& wq);

// sigma = (1 - mix) W_p + mix I/dim; sigma_x = c_x * (p-conditional average
// state of x), c_x the largest value in [0,1] (bisection) with sigma >= sigma_x.
SigmaFamily constructive_sigma_family(const Distribution& p, const CqMAC& wq, double mix);

// (sigma, sigma_x1, sigma_x2) for the stochastic-encoder bound, checked for
//   sigma >= (1/M1) sum_x1 f1(x1|m1) sigma_x1   for all m1
//   sigma >= (1/M2) sum_x2 f2(x2|m2) sigma_x2   for all m2.
struct EncoderSigmaFamily {
  DensityOperator sigma;
  std::vector<HermitianOperator> sigma1;
  std::vector<HermitianOperator> sigma2;
};

// sigma = sum p1 p2 W, sigma_x1 = sum_x2 p2 W, sigma_x2 = sum_x1 p1 W.
EncoderSigmaFamily induced_encoder_sigma_family(const CqMAC& wq, const EncoderPair& enc);

// Throws PreconditionViolation on failure. Returns warnings (non-unit traces).
std::vector<std::string> check_encoder_dominance(const EncoderPair& enc,
                                                 const EncoderSigmaFamily& fam);

// sum p1 p2 Tr[(W - sigma~_gamma)_+] with sigma~ = g1 sigma_x2 + g2 sigma_x1 + g3 sigma.
double cor7_positive_part_sum(const CqMAC& wq, const EncoderPair& enc,
                              const EncoderSigmaFamily& fam, const AlphaTriple& gammas);
BoundReport cor7_bound(const CqMAC& wq, const EncoderPair& enc, const EncoderSigmaFamily& fam,
                       const AlphaTriple& gammas);
// Per-message-pair positive parts on the lifted channel, before convexity.
double cor7_message_level_sum(const CqMAC& wq, const EncoderPair& enc,
                              const EncoderSigmaFamily& fam, const AlphaTriple& gammas);

// Square-root measurement S^{-1/2} p W S^{-1/2}, S = sum p W; the kernel of S
// is added to outcome (0,0).
POVM pgm_decoder(const Distribution& p, const CqMAC& wq);
// Same construction for the lifted ensemble (uniform over messages).
POVM pgm_decoder(const CqMAC& wq, const EncoderPair& enc);

// S^{-1/2} G_k S^{-1/2} for random PSD G_k, S = sum G_k.
POVM random_povm(Eigen::Index dim, std::size_t d1, std::size_t d2, Rng& rng);
POVM random_povm(Eigen::Index dim, std::size_t k, std::uint64_t seed);

// W_{x1,x2} = diag(W(.|x1,x2)).
CqMAC diag_embed(const ClassicalMAC& w);
// Y_{x1,x2} = diag(g(x1,x2|.)).
POVM diag_povm(const Decoder& g);
// States of `wq` restricted to codeword pairs.
CqMAC restrict_to_codebooks(const CqMAC& wq, const CodebookPair& cb);

// n-fold memoryless extension W^{(x)n}; strings indexed as in product_extend.
CqMAC product_extend(const CqMAC& wq, std::size_t n, std::size_t cap = kDefaultProductCap);

// Random cq-MAC with states of random rank in 1..dim.
CqMAC random_cq_mac(std::size_t n1, std::size_t n2, Eigen::Index dim, Rng& rng);

}  // namespace macbound
