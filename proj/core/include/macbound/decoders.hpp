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

// Decoders and error probabilities for the three classical settings, plus
// the MAP decoder and exhaustive search used as ground truth for the bounds.

#include <cstddef>
#include <cstdint>

#include <Eigen/Core>

#include "macbound/model.hpp"
#include "macbound/random.hpp"

namespace macbound {

// g(d1,d2|y): row y is a distribution over flattened decisions d1*D2 + d2.
// Decisions are input pairs (Setting 1), message pairs (Setting 2) or
// codeword-index pairs (Setting 3).
class Decoder {
 public:
  Decoder() = default;
  Decoder(std::size_t d1, std::size_t d2, StochasticMatrix g);

  std::size_t d1() const noexcept { return d1_; }
  std::size_t d2() const noexcept { return d2_; }
  std::size_t m() const noexcept { return static_cast<std::size_t>(g_.rows()); }
  double operator()(std::size_t i, std::size_t j, std::size_t y) const {
    return g_(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(i * d2_ + j));
  }
  const Eigen::MatrixXd& matrix() const noexcept { return g_.matrix(); }

 private:
  std::size_t d1_ = 0;
  std::size_t d2_ = 0;
  StochasticMatrix g_;
};

double pe_setting1(const Distribution& p, const ClassicalMAC& w, const Decoder& g);
double pe_setting2(const ClassicalMAC& w, const EncoderPair& enc, const Decoder& g);
double pe_setting3(const ClassicalMAC& w, const CodebookPair& cb, const Decoder& g);

// V(y|m1,m2) = sum_{x1,x2} f1(x1|m1) f2(x2|m2) W(y|x1,x2).
ClassicalMAC lifted_channel(const ClassicalMAC& w, const EncoderPair& enc);

// Deterministic decoder putting all mass on argmax_{x1,x2} p(x1,x2,y), ties
// broken toward the lexicographically smallest pair.
Decoder map_decoder(const JointPMF& joint);

// 1 - sum_y max_{x1,x2} p(x1,x2,y).
double min_error(const JointPMF& joint);

// Minimum of Pe over every deterministic decoder, by enumeration. Only for
// instances with (n1*n2)^m <= cap configurations; throws SizeCapExceeded otherwise.
double exhaustive_min_error(const JointPMF& joint, std::uint64_t cap = 1'000'000);

// Each row drawn from the flat Dirichlet distribution.
Decoder random_decoder(std::size_t d1, std::size_t d2, std::size_t m, Rng& rng);
Decoder random_decoder(std::size_t d1, std::size_t d2, std::size_t m, std::uint64_t seed);

}  // namespace macbound
