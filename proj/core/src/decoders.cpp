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

#include "macbound/decoders.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "macbound/error.hpp"

namespace macbound {

Decoder::Decoder(std::size_t d1, std::size_t d2, StochasticMatrix g)
    : d1_(d1), d2_(d2), g_(std::move(g)) {
  if (static_cast<std::size_t>(g_.cols()) != d1 * d2) {
    throw DimensionMismatch("decoder: expected " + std::to_string(d1 * d2) + " decisions, got " +
                            std::to_string(g_.cols()));
  }
}

double pe_setting1(const Distribution& p, const ClassicalMAC& w, const Decoder& g) {
  if (p.size() != w.n1() * w.n2()) throw DimensionMismatch("pe_setting1: input size");
  if (g.d1() != w.n1() || g.d2() != w.n2() || g.m() != w.m()) {
    throw DimensionMismatch("pe_setting1: decoder shape does not match channel");
  }
  double success = 0.0;
  for (std::size_t x1 = 0; x1 < w.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < w.n2(); ++x2) {
      const double px = p[w.pair_index(x1, x2)];
      if (px == 0.0) continue;
      for (std::size_t y = 0; y < w.m(); ++y) success += px * w(x1, x2, y) * g(x1, x2, y);
    }
  }
  return 1.0 - success;
}

double pe_setting2(const ClassicalMAC& w, const EncoderPair& enc, const Decoder& g) {
  if (enc.n1() != w.n1() || enc.n2() != w.n2()) {
    throw DimensionMismatch("pe_setting2: encoder alphabets do not match channel");
  }
  if (g.d1() != enc.M1() || g.d2() != enc.M2() || g.m() != w.m()) {
    throw DimensionMismatch("pe_setting2: decoder decisions must be M1 x M2");
  }
  double success = 0.0;
  for (std::size_t m1 = 0; m1 < enc.M1(); ++m1) {
    for (std::size_t m2 = 0; m2 < enc.M2(); ++m2) {
      for (std::size_t x1 = 0; x1 < w.n1(); ++x1) {
        for (std::size_t x2 = 0; x2 < w.n2(); ++x2) {
          const double f = enc.f1(x1, m1) * enc.f2(x2, m2);
          if (f == 0.0) continue;
          for (std::size_t y = 0; y < w.m(); ++y) success += f * w(x1, x2, y) * g(m1, m2, y);
        }
      }
    }
  }
  return 1.0 - success / static_cast<double>(enc.M3());
}

double pe_setting3(const ClassicalMAC& w, const CodebookPair& cb, const Decoder& g) {
  cb.check_range(w.n1(), w.n2());
  if (g.d1() != cb.M1() || g.d2() != cb.M2() || g.m() != w.m()) {
    throw DimensionMismatch("pe_setting3: decoder decisions must be c1 x c2");
  }
  double success = 0.0;
  for (std::size_t i = 0; i < cb.M1(); ++i) {
    for (std::size_t j = 0; j < cb.M2(); ++j) {
      for (std::size_t y = 0; y < w.m(); ++y) {
        success += w(cb.first()[i], cb.second()[j], y) * g(i, j, y);
      }
    }
  }
  return 1.0 - success / static_cast<double>(cb.M3());
}

ClassicalMAC lifted_channel(const ClassicalMAC& w, const EncoderPair& enc) {
  if (enc.n1() != w.n1() || enc.n2() != w.n2()) {
    throw DimensionMismatch("lifted_channel: encoder alphabets do not match channel");
  }
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(enc.M3()),
                                            static_cast<Eigen::Index>(w.m()));
  for (std::size_t m1 = 0; m1 < enc.M1(); ++m1) {
    for (std::size_t m2 = 0; m2 < enc.M2(); ++m2) {
      auto row = v.row(static_cast<Eigen::Index>(m1 * enc.M2() + m2));
      for (std::size_t x1 = 0; x1 < w.n1(); ++x1) {
        for (std::size_t x2 = 0; x2 < w.n2(); ++x2) {
          const double f = enc.f1(x1, m1) * enc.f2(x2, m2);
          if (f != 0.0) row += f * w.matrix().row(static_cast<Eigen::Index>(w.pair_index(x1, x2)));
        }
      }
    }
  }
  return ClassicalMAC(enc.M1(), enc.M2(), std::move(v));
}

Decoder map_decoder(const JointPMF& joint) {
  const auto pairs = static_cast<Eigen::Index>(joint.n1() * joint.n2());
  const auto m = static_cast<Eigen::Index>(joint.m());
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(m, pairs);
  for (Eigen::Index y = 0; y < m; ++y) {
    Eigen::Index best = 0;
    for (Eigen::Index k = 1; k < pairs; ++k) {
      if (joint.matrix()(k, y) > joint.matrix()(best, y)) best = k;
    }
    g(y, best) = 1.0;
  }
  return Decoder(joint.n1(), joint.n2(), StochasticMatrix(std::move(g)));
}

double min_error(const JointPMF& joint) {
  return 1.0 - joint.matrix().colwise().maxCoeff().sum();
}

double exhaustive_min_error(const JointPMF& joint, std::uint64_t cap) {
  const std::uint64_t pairs = joint.n1() * joint.n2();
  const std::size_t m = joint.m();
  std::uint64_t configs = 1;
  for (std::size_t y = 0; y < m; ++y) {
    if (configs > cap / pairs) {
      throw SizeCapExceeded("exhaustive decoder search: more than " + std::to_string(cap) +
                            " configurations");
    }
    configs *= pairs;
  }
  // Odometer over decision vectors (d_0, ..., d_{m-1}); each decoder's success
  // probability is summed from scratch.
  std::vector<std::uint64_t> choice(m, 0);
  double best = 0.0;
  for (std::uint64_t c = 0; c < configs; ++c) {
    double success = 0.0;
    for (std::size_t y = 0; y < m; ++y) {
      success += joint.matrix()(static_cast<Eigen::Index>(choice[y]), static_cast<Eigen::Index>(y));
    }
    best = std::max(best, success);
    for (std::size_t y = 0; y < m; ++y) {
      if (++choice[y] < pairs) break;
      choice[y] = 0;
    }
  }
  return 1.0 - best;
}

Decoder random_decoder(std::size_t d1, std::size_t d2, std::size_t m, Rng& rng) {
  return Decoder(d1, d2, StochasticMatrix(random_stochastic_rows(m, d1 * d2, rng)));
}

Decoder random_decoder(std::size_t d1, std::size_t d2, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  return random_decoder(d1, d2, m, rng);
}

}  // namespace macbound
