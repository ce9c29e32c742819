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

#include "macbound/model.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "macbound/error.hpp"

namespace macbound {
namespace {

using testing::adder_mac;
using testing::noiseless_mac;
using testing::uniform_pairs;

TEST(Distribution, RejectsNegativeEntries) {
  EXPECT_THROW(Distribution({1.001, -0.001}), InvalidModel);
}

TEST(Distribution, RejectsBadSum) {
  EXPECT_THROW(Distribution({0.5, 0.4}), InvalidModel);
  EXPECT_THROW(Distribution(std::vector<double>{}), InvalidModel);
}

TEST(Distribution, ClampsRoundingNegatives) {
  const Distribution d({1.0, -1e-16});
  EXPECT_EQ(d[1], 0.0);
}

TEST(Distribution, UniformAndPointMass) {
  const auto u = Distribution::uniform(4);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(u[i], 0.25);
  const auto pm = Distribution::point_mass(3, 2);
  EXPECT_EQ(pm[2], 1.0);
  EXPECT_EQ(pm[0], 0.0);
}

TEST(ClassicalMAC, RejectsNonStochasticRow) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Identity(4, 4);
  w(2, 2) = 0.5;
  EXPECT_THROW(ClassicalMAC(2, 2, w), InvalidModel);
  EXPECT_THROW(ClassicalMAC(2, 3, Eigen::MatrixXd::Identity(4, 4)), DimensionMismatch);
}

TEST(EncoderPair, MessageCounts) {
  Eigen::MatrixXd f1(3, 2);
  f1 << 1, 0, 0, 1, 0.5, 0.5;
  Eigen::MatrixXd f2(2, 2);
  f2 << 1, 0, 0, 1;
  const EncoderPair enc{StochasticMatrix(f1), StochasticMatrix(f2)};
  EXPECT_EQ(enc.M1(), 3u);
  EXPECT_EQ(enc.M2(), 2u);
  EXPECT_EQ(enc.M3(), 6u);
  EXPECT_EQ(enc.f1(1, 2), 0.5);
}

TEST(CodebookPair, RejectsDuplicatesAndEmpty) {
  EXPECT_THROW(CodebookPair({0, 0}, {1}), InvalidModel);
  EXPECT_THROW(CodebookPair({}, {1}), InvalidModel);
  const CodebookPair cb({0, 1}, {2});
  EXPECT_THROW(cb.check_range(2, 2), InvalidModel);
  EXPECT_NO_THROW(cb.check_range(2, 3));
}

TEST(JointFromSetting1, NoiselessUniform) {
  const auto j = joint_from_setting1(uniform_pairs(), noiseless_mac());
  for (std::size_t x1 = 0; x1 < 2; ++x1) {
    for (std::size_t x2 = 0; x2 < 2; ++x2) {
      for (std::size_t y = 0; y < 4; ++y) {
        EXPECT_DOUBLE_EQ(j(x1, x2, y), y == 2 * x1 + x2 ? 0.25 : 0.0);
      }
    }
  }
  for (std::size_t y = 0; y < 4; ++y) EXPECT_DOUBLE_EQ(j.py(y), 0.25);
}

TEST(JointFromSetting1, AdderOutputMarginal) {
  const auto j = joint_from_setting1(uniform_pairs(), adder_mac());
  EXPECT_DOUBLE_EQ(j.py(0), 0.25);
  EXPECT_DOUBLE_EQ(j.py(1), 0.5);
  EXPECT_DOUBLE_EQ(j.py(2), 0.25);
  EXPECT_DOUBLE_EQ(j.px1y(0, 1), 0.25);
  EXPECT_DOUBLE_EQ(j.px2y(1, 2), 0.25);
  EXPECT_DOUBLE_EQ(j.py_given_x1(1, 0), 0.5);
}

TEST(JointFromSetting1, PointMassInput) {
  const auto w = adder_mac();
  const auto j = joint_from_setting1(Distribution::point_mass(4, 0), w);
  EXPECT_DOUBLE_EQ(j(0, 0, 0), 1.0);
  EXPECT_DOUBLE_EQ(j(1, 1, 2), 0.0);
  EXPECT_FALSE(j.defined_given_x1(1));
  EXPECT_THROW(j.py_given_x1(0, 1), UndefinedConditional);
  EXPECT_THROW(j.py_given_x2(0, 1), UndefinedConditional);
}

TEST(JointPMF, RejectsBadSum) {
  EXPECT_THROW(JointPMF(1, 1, Eigen::MatrixXd::Constant(1, 2, 0.4)), InvalidModel);
}

TEST(JointFromSetting2, InjectiveEncodersMatchUniformInput) {
  const std::vector<std::size_t> c{0, 1};
  const auto enc = EncoderPair::deterministic(c, 2, c, 2);
  const auto a = joint_from_setting2(enc, adder_mac());
  const auto b = joint_from_setting1(uniform_pairs(), adder_mac());
  EXPECT_LE((a.matrix() - b.matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(JointFromSetting2, SingleMessageConcentrates) {
  const std::vector<std::size_t> c{0};
  const auto enc = EncoderPair::deterministic(c, 2, c, 2);
  const auto j = joint_from_setting2(enc, noiseless_mac());
  EXPECT_DOUBLE_EQ(j(0, 0, 0), 1.0);
  EXPECT_DOUBLE_EQ(j.px1x2(1, 0), 0.0);
}

TEST(JointFromSetting2, StochasticEncodersMatchTripleSum) {
  Eigen::MatrixXd f1(2, 2), f2(2, 2);
  f1 << 0.9, 0.1, 0.2, 0.8;
  f2 << 0.3, 0.7, 0.6, 0.4;
  const EncoderPair enc{StochasticMatrix(f1), StochasticMatrix(f2)};
  const auto w = adder_mac();
  const auto j = joint_from_setting2(enc, w);
  for (std::size_t x1 = 0; x1 < 2; ++x1) {
    for (std::size_t x2 = 0; x2 < 2; ++x2) {
      for (std::size_t y = 0; y < 3; ++y) {
        double expect = 0.0;
        for (int m1 = 0; m1 < 2; ++m1) {
          for (int m2 = 0; m2 < 2; ++m2) {
            expect += f1(m1, static_cast<Eigen::Index>(x1)) * f2(m2, static_cast<Eigen::Index>(x2)) *
                      w(x1, x2, y) / 4.0;
          }
        }
        EXPECT_NEAR(j(x1, x2, y), expect, 1e-15);
      }
    }
  }
}

TEST(InducedInput, AveragesEncoderRows) {
  Eigen::MatrixXd f1(2, 2);
  f1 << 0.9, 0.1, 0.2, 0.8;
  Eigen::MatrixXd f2(2, 2);
  f2 << 0, 1, 0, 1;
  const auto [p1, p2] = induced_input(EncoderPair{StochasticMatrix(f1), StochasticMatrix(f2)});
  EXPECT_NEAR(p1[0], 0.55, 1e-15);
  EXPECT_NEAR(p1[1], 0.45, 1e-15);
  EXPECT_EQ(p2[1], 1.0);
}

TEST(InducedInput, InjectiveCoverIsUniform) {
  const std::vector<std::size_t> c{2, 0, 1};
  const auto [p1, p2] = induced_input(EncoderPair::deterministic(c, 3, c, 3));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(p1[i], 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(p2[i], 1.0 / 3.0, 1e-15);
  }
}

TEST(Setting3Embed, RestrictsToCodewordRows) {
  const auto w = adder_mac();
  const auto e = setting3_embed(CodebookPair({0, 1}, {1}), w);
  ASSERT_EQ(e.input.size(), 2u);
  EXPECT_DOUBLE_EQ(e.input[0], 0.5);
  EXPECT_EQ(e.channel.n1(), 2u);
  EXPECT_EQ(e.channel.n2(), 1u);
  EXPECT_EQ(e.channel(0, 0, 1), 1.0);  // W(.|0,1)
  EXPECT_EQ(e.channel(1, 0, 2), 1.0);  // W(.|1,1)
}

TEST(Setting3Embed, SingleCodewordsArePointMass) {
  const auto e = setting3_embed(CodebookPair({0}, {0}), adder_mac());
  EXPECT_EQ(e.input.size(), 1u);
  EXPECT_EQ(e.channel(0, 0, 0), 1.0);
}

TEST(ProductExtend, IdentityAtBlocklengthOne) {
  const auto w = adder_mac();
  const auto w1 = product_extend(w, 1);
  EXPECT_EQ((w1.matrix() - w.matrix()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(ProductExtend, NoiselessSquareIsPermutation) {
  const auto w2 = product_extend(noiseless_mac(), 2);
  EXPECT_EQ(w2.n1(), 4u);
  EXPECT_EQ(w2.m(), 16u);
  std::vector<int> hits(16, 0);
  for (Eigen::Index r = 0; r < 16; ++r) {
    Eigen::Index col = 0;
    EXPECT_EQ(w2.matrix().row(r).maxCoeff(&col), 1.0);
    ++hits[static_cast<std::size_t>(col)];
  }
  for (int h : hits) EXPECT_EQ(h, 1);
}

TEST(ProductExtend, AdderStringsAddLetterwise) {
  const auto w2 = product_extend(adder_mac(), 2);
  // x1 = (0,1) -> 1, x2 = (1,1) -> 3, y = (1,2) -> 1*3 + 2 = 5.
  EXPECT_EQ(w2(1, 3, 5), 1.0);
}

TEST(ProductExtend, DistributionIsIid) {
  const auto p2 = product_extend(Distribution({0.25, 0.75}), 2);
  EXPECT_DOUBLE_EQ(p2[1], 0.25 * 0.75);
  EXPECT_DOUBLE_EQ(p2[3], 0.75 * 0.75);
}

TEST(ProductExtend, SizeCap) {
  EXPECT_THROW(product_extend(noiseless_mac(), 6, 1000), SizeCapExceeded);
}

}  // namespace
}  // namespace macbound
