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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "macbound/decoders.hpp"
#include "macbound/error.hpp"
#include "macbound/random.hpp"

namespace macbound {
namespace {

using testing::adder_mac;
using testing::uniform_pairs;

constexpr double kExact = 1e-12;

JointPMF adder_joint() { return joint_from_setting1(uniform_pairs(), adder_mac()); }

Distribution output_of(const JointPMF& j) {
  const Eigen::VectorXd py = j.output_marginal();
  return Distribution(std::vector<double>(py.data(), py.data() + py.size()));
}

const CodebookPair& full_binary() {
  static const CodebookPair cb({0, 1}, {0, 1});
  return cb;
}

double diagnostic(const BoundReport& r, const std::string& key) {
  for (const auto& [k, v] : r.diagnostics) {
    if (k == key) return v;
  }
  ADD_FAILURE() << "missing diagnostic " << key;
  return 0.0;
}

TEST(AlphaTriple, RejectsNegative) { EXPECT_THROW(AlphaTriple(0, -0.1, 0), InvalidModel); }

TEST(DominatedFamily, ReportsWorstEntry) {
  Eigen::MatrixXd q1 = Eigen::MatrixXd::Zero(2, 2);
  Eigen::MatrixXd q2 = Eigen::MatrixXd::Zero(2, 2);
  q1(1, 0) = 0.3;
  q2(0, 1) = 0.9;
  q2(1, 1) = 1.0;
  try {
    DominatedFamily(Distribution({0.4, 0.6}), q1, q2);
    FAIL() << "expected a dominance failure";
  } catch (const PreconditionViolation& e) {
    EXPECT_EQ(e.where(), "q2(1,1)");
    EXPECT_NEAR(e.amount(), 0.4, 1e-15);
  }
}

TEST(Theorem1, TotalDominanceGivesZeroSum) {
  const auto j = adder_joint();
  const auto fam = DominatedFamily::output_only(output_of(j), 2, 2);
  EXPECT_NEAR(theorem1_positive_part_sum(j, fam, AlphaTriple(0, 0, 1)), 0.0, kExact);
  EXPECT_NEAR(theorem1_bound(j, fam, AlphaTriple(0, 0, 1)).bound, 0.0, kExact);
}

TEST(Theorem1, AdderAnchor) {
  const auto j = adder_joint();
  const auto fam = DominatedFamily::output_only(output_of(j), 2, 2);
  const AlphaTriple a(0, 0, 0.5);
  EXPECT_NEAR(theorem1_positive_part_sum(j, fam, a), 0.25, kExact);
  const auto r = theorem1_bound(j, fam, a);
  EXPECT_NEAR(r.bound, 0.25, kExact);
  EXPECT_NEAR(r.bound, min_error(j), kExact);
  EXPECT_NEAR(r.bound, r.probability_term - r.penalty_term, 1e-15);
  EXPECT_NEAR(r.bound, 1.0 - r.penalty_term - *r.positive_part_sum, 1e-15);
}

TEST(Theorem1, ZeroAlphaSumsToOne) {
  const auto j = adder_joint();
  const auto fam = DominatedFamily::from_marginals(j);
  EXPECT_NEAR(theorem1_positive_part_sum(j, fam, AlphaTriple(0, 0, 0)), 1.0, kExact);
  EXPECT_NEAR(theorem1_bound(j, fam, AlphaTriple(0, 0, 0)).bound, 0.0, kExact);
}

TEST(Cor1, Anchors) {
  const auto j = adder_joint();
  const auto fam = DominatedFamily::output_only(output_of(j), 2, 2);
  const auto full = cor1_bound(j, fam, AlphaTriple(0, 0, 1));
  EXPECT_NEAR(full.probability_term, 1.0, kExact);
  EXPECT_NEAR(full.bound, 0.0, kExact);
  const auto half = cor1_bound(j, fam, AlphaTriple(0, 0, 0.5));
  EXPECT_NEAR(half.probability_term, 0.5, kExact);
  EXPECT_NEAR(half.bound, 0.0, kExact);
  const auto none = cor1_bound(j, fam, AlphaTriple(0, 0, 0));
  EXPECT_NEAR(none.probability_term, 0.0, kExact);
  EXPECT_NEAR(none.bound, 0.0, kExact);
}

TEST(Cor2, AdderAnchorIsTight) {
  const auto r = cor2_bound(adder_joint(), AlphaTriple(0, 0, 0.5));
  EXPECT_NEAR(r.bound, 0.25, kExact);
  EXPECT_NEAR(r.probability_term, 0.5, kExact);
  EXPECT_TRUE(r.flags.empty());
}

TEST(Cor2, UnitSumGivesZero) {
  EXPECT_NEAR(cor2_bound(adder_joint(), AlphaTriple(0, 0, 1)).bound, 0.0, kExact);
  // Y = X2 and X1 independent: p(x1,x2,y) <= p(x2,y) everywhere.
  Eigen::MatrixXd w(4, 2);
  w << 1, 0, 0, 1, 1, 0, 0, 1;
  const auto j = joint_from_setting1(uniform_pairs(), ClassicalMAC(2, 2, w));
  const auto r = cor2_bound(j, AlphaTriple(1, 0, 0));
  EXPECT_NEAR(r.probability_term, 1.0, kExact);
  EXPECT_NEAR(r.bound, 0.0, kExact);
}

TEST(Cor2, FlagsVacuousWeights) {
  const auto r = cor2_bound(adder_joint(), AlphaTriple(1, 0.5, 0));
  ASSERT_EQ(r.flags.size(), 1u);
  EXPECT_LE(r.bound, 0.0);
}

TEST(Han, AdderAnchors) {
  const auto half = han_bound(adder_mac(), full_binary(), 0.5);
  EXPECT_NEAR(half.bound, -1.0, kExact);
  EXPECT_NEAR(diagnostic(half, "pr_L1"), 0.0, kExact);
  EXPECT_NEAR(diagnostic(half, "pr_L2"), 0.0, kExact);
  EXPECT_NEAR(diagnostic(half, "pr_L3"), 0.5, kExact);
  EXPECT_NEAR(han_bound(adder_mac(), full_binary(), 1.0).bound, -2.0, kExact);
  EXPECT_NEAR(han_bound(adder_mac(), full_binary(), 0.1).bound, -0.3, kExact);
  EXPECT_THROW(han_bound(adder_mac(), full_binary(), 0.0), InvalidModel);
}

TEST(YoSpecialized, AdderAnchors) {
  const auto quarter = yo_specialized(adder_mac(), full_binary(), 0.25);
  EXPECT_NEAR(quarter.probability_term, 0.5, kExact);
  EXPECT_NEAR(quarter.bound, -0.25, kExact);
  EXPECT_NEAR(yo_specialized(adder_mac(), full_binary(), 0.5).bound, -0.5, kExact);
  EXPECT_NEAR(yo_specialized(adder_mac(), full_binary(), 0.2).bound, -0.6, kExact);
}

TEST(YagiOohama, OutputOnlyAnchor) {
  const Distribution pi({0, 0, 1});
  const auto r = yagi_oohama_bound(adder_mac(), full_binary(), adder_mac(), pi, 1.0);
  EXPECT_NEAR(r.probability_term, 0.0, kExact);
  EXPECT_NEAR(r.bound, -0.25, kExact);
}

TEST(YagiOohama, SpecializesToYo) {
  const CodebookPair cb({0, 1}, {1, 0});
  const double total = 2 + 2 + 4;
  const Distribution share({2 / total, 2 / total, 4 / total});
  for (double g : {0.1, 0.25, 0.4, 0.7}) {
    EXPECT_NEAR(yagi_oohama_bound(adder_mac(), cb, adder_mac(), share, g * total).bound,
                yo_specialized(adder_mac(), cb, g).bound, kExact);
  }
}

TEST(YagiOohama, PointMassOnOutputTerm) {
  // pi = (0,0,1), gamma' = gamma M3: event {W <= gamma M3 q(y)}, penalty gamma.
  const double g = 0.3;
  const auto r = yagi_oohama_bound(adder_mac(), full_binary(), adder_mac(), Distribution({0, 0, 1}),
                                   g * 4);
  EXPECT_NEAR(r.penalty_term, g, kExact);
}

TEST(Cor3, TrivialWeights) {
  const std::vector<std::size_t> c{0, 1};
  const auto enc = EncoderPair::deterministic(c, 2, c, 2);
  const auto fam = induced_encoder_family(adder_mac(), enc);
  EXPECT_NEAR(cor3_positive_part_sum(adder_mac(), enc, fam, AlphaTriple(0, 0, 0)), 1.0, kExact);
}

TEST(Cor3, AdderAnchor) {
  const std::vector<std::size_t> c{0, 1};
  const auto enc = EncoderPair::deterministic(c, 2, c, 2);
  const auto fam = induced_encoder_family(adder_mac(), enc);
  const AlphaTriple g(0, 0, 2);
  EXPECT_NEAR(cor3_positive_part_sum(adder_mac(), enc, fam, g), 0.25, kExact);
  const auto r = cor3_bound(adder_mac(), enc, fam, g);
  EXPECT_NEAR(r.penalty_term, 0.5, kExact);
  EXPECT_NEAR(r.bound, 0.25, kExact);
}

TEST(Cor3, SingleMessageLevelMatchesTheorem1OnLiftedChannel) {
  Rng rng(21);
  const ClassicalMAC w(2, 3, random_stochastic_rows(6, 3, rng));
  const EncoderPair enc{StochasticMatrix(random_stochastic_rows(1, 2, rng)),
                        StochasticMatrix(random_stochastic_rows(1, 3, rng))};
  Distribution q(flat_dirichlet(3, rng));
  Eigen::MatrixXd q1c(2, 3), q2c(3, 3);
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 2; ++x) q1c(x, y) = q[static_cast<std::size_t>(y)] * uniform01(rng);
    for (int x = 0; x < 3; ++x) q2c(x, y) = q[static_cast<std::size_t>(y)] * uniform01(rng);
  }
  const EncoderFamily fam{q, q1c, q2c};
  const Eigen::MatrixXd mix1 = enc.first().matrix() * q1c;
  const Eigen::MatrixXd mix2 = enc.second().matrix() * q2c;
  const auto lifted = joint_from_setting1(Distribution::uniform(1), lifted_channel(w, enc));
  const DominatedFamily dfam(q, mix1, mix2);
  for (const AlphaTriple g : {AlphaTriple(0.3, 0.2, 0.1), AlphaTriple(1, 0, 0.5)}) {
    EXPECT_NEAR(cor3_message_level_sum(w, enc, fam, g),
                theorem1_positive_part_sum(lifted, dfam, g), kExact);
  }
}

TEST(Cor3, ConvexityStepNeverIncreases) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Rng rng(s);
    const ClassicalMAC w(2, 2, random_stochastic_rows(4, 3, rng));
    const EncoderPair enc{StochasticMatrix(random_stochastic_rows(3, 2, rng)),
                          StochasticMatrix(random_stochastic_rows(2, 2, rng))};
    const auto fam = induced_encoder_family(w, enc);
    const AlphaTriple g(3 * uniform01(rng), 2 * uniform01(rng), 6 * uniform01(rng));
    EXPECT_LE(cor3_message_level_sum(w, enc, fam, g), cor3_positive_part_sum(w, enc, fam, g) + 1e-12);
  }
}

TEST(Cor3, RejectsUndominatedFamily) {
  const std::vector<std::size_t> c{0, 1};
  const auto enc = EncoderPair::deterministic(c, 2, c, 2);
  EncoderFamily fam{Distribution({1, 0, 0}), Eigen::MatrixXd::Constant(2, 3, 1.0),
                    Eigen::MatrixXd::Zero(2, 3)};
  EXPECT_THROW(cor3_bound(adder_mac(), enc, fam, AlphaTriple(1, 1, 1)), PreconditionViolation);
}

TEST(Cor3, FlagsUnnormalizedRows) {
  const std::vector<std::size_t> c{0, 1};
  const auto enc = EncoderPair::deterministic(c, 2, c, 2);
  auto fam = induced_encoder_family(adder_mac(), enc);
  fam.q1c *= 0.5;
  const auto r = cor3_bound(adder_mac(), enc, fam, AlphaTriple(1, 1, 1));
  EXPECT_EQ(r.flags.size(), 1u);
}

TEST(Cor4, InjectiveEncodersMatchYagiOohama) {
  const CodebookPair cb({1, 0}, {0, 1});
  const auto enc = EncoderPair::deterministic(cb.first(), 2, cb.second(), 2);
  const Distribution pi({0.2, 0.3, 0.5});
  for (double g : {0.3, 1.0, 2.5}) {
    EXPECT_NEAR(cor4_bound(adder_mac(), enc, adder_mac(), pi, g).bound,
                yagi_oohama_bound(adder_mac(), cb, adder_mac(), pi, g).bound, kExact);
  }
}

TEST(Cor4, ZeroGamma) {
  const std::vector<std::size_t> c{0, 1};
  const auto enc = EncoderPair::deterministic(c, 2, c, 2);
  const auto r = cor4_bound(adder_mac(), enc, adder_mac(), Distribution::uniform(3), 0.0);
  EXPECT_NEAR(r.probability_term, 0.0, kExact);
  EXPECT_NEAR(r.bound, 0.0, kExact);
}

TEST(Cor4, StochasticEncodersMatchDirectLoop) {
  Eigen::MatrixXd f(2, 2);
  f << 0.9, 0.1, 0.2, 0.8;
  const EncoderPair enc{StochasticMatrix(f), StochasticMatrix(f)};
  const auto w = adder_mac();
  const double gamma = 0.5;
  const double p[2] = {0.55, 0.45};
  // q(y|x1), q(y|x2), q(y) of p1 p2 W with qcond = W, pi uniform.
  double qy[3] = {0, 0, 0}, q1[2][3] = {}, q2[2][3] = {};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int y = 0; y < 3; ++y) {
        const double v = w(a, b, y);
        qy[y] += p[a] * p[b] * v;
        q1[a][y] += p[b] * v;
        q2[b][y] += p[a] * v;
      }
    }
  }
  double prob = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int y = 0; y < 3; ++y) {
        const double t = gamma * (q2[b][y] + q1[a][y] + qy[y]) / 3.0;
        if (w(a, b, y) <= t) prob += p[a] * p[b] * w(a, b, y);
      }
    }
  }
  const double expect = prob - gamma * (1.0 / 2 + 1.0 / 2 + 1.0 / 4) / 3.0;
  EXPECT_NEAR(cor4_bound(w, enc, w, Distribution::uniform(3), gamma).bound, expect, kExact);
}

}  // namespace
}  // namespace macbound
