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

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "macbound/error.hpp"

namespace macbound {
namespace {

using testing::adder_mac;
using testing::basis_state;
using testing::orthogonal_qubit_mac;
using testing::uniform_pairs;

constexpr double kExact = 1e-12;

SigmaFamily flat_family(Eigen::Index dim, std::size_t n1, std::size_t n2) {
  const auto s = (1.0 / static_cast<double>(dim)) * HermitianOperator::identity(dim);
  return SigmaFamily(DensityOperator(s), std::vector<HermitianOperator>(n1, s),
                     std::vector<HermitianOperator>(n2, s));
}

double reference_positive_part(const HermitianOperator& a) {
  const Eigen::SelfAdjointEigenSolver<CMatrix> es(a.matrix());
  return es.eigenvalues().cwiseMax(0.0).sum();
}

TEST(CqMAC, RejectsMixedDimensions) {
  EXPECT_THROW(CqMAC(2, 1, {basis_state(2, 0), basis_state(3, 0)}), Error);
  EXPECT_THROW(CqMAC(2, 2, {basis_state(2, 0), basis_state(2, 1)}), Error);
}

TEST(Povm, RejectsIncompleteOrNegativeElements) {
  const auto half = 0.5 * HermitianOperator::identity(2);
  EXPECT_THROW(POVM(1, 1, {half}), InvalidModel);
  EXPECT_THROW(POVM(1, 2, {HermitianOperator::diagonal(Eigen::Vector2d(2, 1)),
                           HermitianOperator::diagonal(Eigen::Vector2d(-1, 0))}),
               Error);
  EXPECT_NO_THROW(POVM(1, 2, {half, half}));
}

TEST(PeQ1, Examples) {
  const auto w = orthogonal_qubit_mac();
  const auto p = Distribution::uniform(2);
  const POVM proj(2, 1, {basis_state(2, 0).op(), basis_state(2, 1).op()});
  EXPECT_NEAR(pe_q1(p, w, proj), 0.0, kExact);
  const auto half = 0.5 * HermitianOperator::identity(2);
  EXPECT_NEAR(pe_q1(p, w, POVM(2, 1, {half, half})), 0.5, kExact);
}

TEST(PeQ1, DiagonalEmbeddingMatchesClassical) {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const ClassicalMAC w(2, 3, random_stochastic_rows(6, 4, rng));
    const Distribution p(flat_dirichlet(6, rng));
    const auto g = random_decoder(2, 3, 4, rng);
    EXPECT_NEAR(pe_q1(p, diag_embed(w), diag_povm(g)),
                pe_setting1(p, w, g), 1e-10);
  }
}

TEST(PeQ2, SingleMessagesWithIdentity) {
  Rng rng(32);
  const auto w = random_cq_mac(2, 2, 2, rng);
  const auto enc = EncoderPair::deterministic(std::vector<std::size_t>{1}, 2,
                                              std::vector<std::size_t>{0}, 2);
  EXPECT_NEAR(pe_q2(w, enc, POVM(1, 1, {HermitianOperator::identity(2)})), 0.0, kExact);
}

TEST(PeQ2, StochasticEncodersMatchDirectSum) {
  Rng rng(33);
  const auto w = random_cq_mac(2, 2, 2, rng);
  const EncoderPair enc{StochasticMatrix(random_stochastic_rows(2, 2, rng)),
                        StochasticMatrix(random_stochastic_rows(3, 2, rng))};
  const auto y = random_povm(2, 2, 3, rng);
  double success = 0.0;
  for (std::size_t m1 = 0; m1 < 2; ++m1) {
    for (std::size_t m2 = 0; m2 < 3; ++m2) {
      for (std::size_t x1 = 0; x1 < 2; ++x1) {
        for (std::size_t x2 = 0; x2 < 2; ++x2) {
          success += enc.f1(x1, m1) * enc.f2(x2, m2) *
                     trace_product(w.state(x1, x2).op(), y.element(m1, m2));
        }
      }
    }
  }
  EXPECT_NEAR(pe_q2(w, enc, y), 1.0 - success / 6.0, kExact);
}

TEST(PeQ2, InjectiveEncodersMatchQ1OnCodebook) {
  Rng rng(34);
  const auto w = random_cq_mac(3, 2, 2, rng);
  const CodebookPair cb({2, 0}, {1, 0});
  const auto enc = EncoderPair::deterministic(cb.first(), 3, cb.second(), 2);
  const auto y = random_povm(2, 2, 2, rng);
  EXPECT_NEAR(pe_q2(w, enc, y), pe_q1(Distribution::uniform(4), restrict_to_codebooks(w, cb), y),
              kExact);
}

TEST(Theorem2, OrthogonalQubitAnchor) {
  const auto w = orthogonal_qubit_mac();
  const auto p = Distribution::uniform(2);
  const auto fam = flat_family(2, 2, 1);
  const AlphaTriple a(0, 0, 0.5);
  EXPECT_NEAR(theorem2_positive_part_sum(p, w, fam, a), 0.5, kExact);
  EXPECT_NEAR(theorem2_bound(p, w, fam, a).bound, 0.0, kExact);
  EXPECT_NEAR(theorem2_positive_part_sum(p, w, fam, AlphaTriple(0, 0, 0)), 1.0, kExact);
}

TEST(Theorem2, DiagonalAdderAnchor) {
  const auto w = diag_embed(adder_mac());
  const auto py = diag_embed(Distribution({0.25, 0.5, 0.25})).op();
  const SigmaFamily fam(DensityOperator(py), {py, py}, {py, py});
  const auto r = theorem2_bound(uniform_pairs(), w, fam, AlphaTriple(0, 0, 0.5));
  EXPECT_NEAR(*r.positive_part_sum, 0.25, kExact);
  EXPECT_NEAR(r.bound, 0.25, kExact);
}

TEST(Cor5, OrthogonalQubitAnchor) {
  const auto r = cor5_bound(Distribution::uniform(2), orthogonal_qubit_mac(), flat_family(2, 2, 1),
                            AlphaTriple(0, 0, 0.5));
  EXPECT_NEAR(r.probability_term, 0.0, kExact);
  EXPECT_NEAR(r.bound, -0.5, kExact);
}

TEST(Cor5, FullPenaltyIsNonPositive) {
  Rng rng(35);
  const auto w = random_cq_mac(2, 2, 3, rng);
  const auto p = Distribution::uniform(4);
  const auto r = cor5_bound(p, w, average_family(p, w), AlphaTriple(0, 0, 1));
  EXPECT_LE(r.probability_term, 1.0 + kExact);
  EXPECT_LE(r.bound, kExact);
}

TEST(Cor6, Anchors) {
  const auto w = diag_embed(adder_mac());
  EXPECT_NEAR(cor6_bound(uniform_pairs(), w, AlphaTriple(0, 0, 0.5)).bound, 0.25, kExact);
  Rng rng(36);
  const auto wq = random_cq_mac(2, 2, 2, rng);
  const auto p = Distribution::uniform(4);
  EXPECT_NEAR(cor6_bound(p, wq, AlphaTriple(0, 0, 1)).bound, 0.0, kExact);
  EXPECT_NEAR(cor6_bound(p, wq, AlphaTriple(0, 0, 0)).bound, 0.0, kExact);
}

TEST(SigmaFamily, OrderViolationNamesEntry) {
  const auto sigma = DensityOperator(HermitianOperator::diagonal(Eigen::Vector2d(1, 0)));
  const auto bad = HermitianOperator::diagonal(Eigen::Vector2d(0, 0.5));
  try {
    SigmaFamily(sigma, {sigma.op(), bad}, {sigma.op()});
    FAIL() << "expected order violation";
  } catch (const PreconditionViolation& e) {
    EXPECT_EQ(e.where(), "sigma_x1[1]");
    EXPECT_NEAR(e.amount(), 0.5, 1e-10);
  }
}

TEST(SigmaFamily, ConstructiveFamilyIsValid) {
  Rng rng(37);
  for (int t = 0; t < 20; ++t) {
    const auto w = random_cq_mac(2, 3, 3, rng);
    const Distribution p(flat_dirichlet(6, rng));
    const auto fam = constructive_sigma_family(p, w, 0.2);
    for (std::size_t x = 0; x < 2; ++x) EXPECT_TRUE(psd_order_holds(fam.sigma().op(), fam.sigma1(x)));
    for (std::size_t x = 0; x < 3; ++x) EXPECT_TRUE(psd_order_holds(fam.sigma().op(), fam.sigma2(x)));
  }
}

TEST(Cor7, ZeroWeightsGiveOne) {
  Rng rng(38);
  const auto w = random_cq_mac(2, 2, 2, rng);
  const EncoderPair enc{StochasticMatrix(random_stochastic_rows(2, 2, rng)),
                        StochasticMatrix(random_stochastic_rows(2, 2, rng))};
  const auto fam = induced_encoder_sigma_family(w, enc);
  EXPECT_NEAR(cor7_positive_part_sum(w, enc, fam, AlphaTriple(0, 0, 0)), 1.0, kExact);
  EXPECT_NEAR(cor7_bound(w, enc, fam, AlphaTriple(0, 0, 0)).bound, 0.0, kExact);
}

TEST(Cor7, QubitStochasticEncodersMatchDirectEigensum) {
  Rng rng(39);
  const auto w = random_cq_mac(2, 2, 2, rng);
  const EncoderPair enc{StochasticMatrix(random_stochastic_rows(2, 2, rng)),
                        StochasticMatrix(random_stochastic_rows(2, 2, rng))};
  const auto fam = induced_encoder_sigma_family(w, enc);
  const auto [p1, p2] = induced_input(enc);
  double expect = 0.0;
  for (std::size_t x1 = 0; x1 < 2; ++x1) {
    for (std::size_t x2 = 0; x2 < 2; ++x2) {
      expect += p1[x1] * p2[x2] * reference_positive_part(w.state(x1, x2).op() - 4.0 * fam.sigma.op());
    }
  }
  EXPECT_NEAR(cor7_positive_part_sum(w, enc, fam, AlphaTriple(0, 0, 4)), expect, 1e-10);
}

TEST(Cor7, DiagonalEmbeddingMatchesCor3) {
  Rng rng(40);
  const ClassicalMAC w(2, 2, random_stochastic_rows(4, 3, rng));
  const CodebookPair cb({1, 0}, {0, 1});
  const auto enc = EncoderPair::deterministic(cb.first(), 2, cb.second(), 2);
  const auto cfam = induced_encoder_family(w, enc);
  const auto qfam = induced_encoder_sigma_family(diag_embed(w), enc);
  const AlphaTriple g(0.7, 1.3, 2.1);
  EXPECT_NEAR(cor7_positive_part_sum(diag_embed(w), enc, qfam, g),
              cor3_positive_part_sum(w, enc, cfam, g), 1e-9);
}

TEST(Cor7, DominanceFailureThrows) {
  const auto w = orthogonal_qubit_mac();
  const auto enc = EncoderPair::deterministic(std::vector<std::size_t>{0, 1}, 2,
                                              std::vector<std::size_t>{0}, 1);
  EncoderSigmaFamily fam{basis_state(2, 0), {HermitianOperator::identity(2), HermitianOperator::identity(2)},
                         {HermitianOperator::zero(2)}};
  EXPECT_THROW(cor7_positive_part_sum(w, enc, fam, AlphaTriple(1, 1, 1)), PreconditionViolation);
}

TEST(Pgm, OrthogonalStatesArePerfect) {
  const auto w = orthogonal_qubit_mac();
  const auto p = Distribution::uniform(2);
  EXPECT_NEAR(pe_q1(p, w, pgm_decoder(p, w)), 0.0, 1e-10);
}

TEST(Pgm, IdenticalStatesAreGuessing) {
  Rng rng(41);
  const auto rho = random_density(3, 3, rng);
  const CqMAC w(2, 2, std::vector<DensityOperator>(4, rho));
  const auto p = Distribution::uniform(4);
  EXPECT_NEAR(pe_q1(p, w, pgm_decoder(p, w)), 0.75, 1e-10);
}

TEST(Pgm, DiagonalEmbeddingNeverBeatsMap) {
  Rng rng(42);
  for (int t = 0; t < 30; ++t) {
    const ClassicalMAC w(2, 2, random_stochastic_rows(4, 3, rng));
    const Distribution p(flat_dirichlet(4, rng));
    const auto wq = diag_embed(w);
    EXPECT_GE(pe_q1(p, wq, pgm_decoder(p, wq)), min_error(joint_from_setting1(p, w)) - 1e-10);
  }
}

TEST(RandomPovm, SingleElementIsIdentity) {
  const auto y = random_povm(3, 1, 5);
  ASSERT_EQ(y.elements().size(), 1u);
  EXPECT_LE((y.elements()[0].matrix() - CMatrix::Identity(3, 3)).norm(), 1e-12);
}

TEST(RandomPovm, CompleteAndReproducible) {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const auto y = random_povm(3, 4, s);
    CMatrix total = CMatrix::Zero(3, 3);
    for (const auto& e : y.elements()) total += e.matrix();
    ASSERT_LE((total - CMatrix::Identity(3, 3)).norm(), 1e-10) << "seed " << s;
  }
  const auto a = random_povm(2, 3, 77);
  const auto b = random_povm(2, 3, 77);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(a.elements()[i].matrix(), b.elements()[i].matrix());
}

TEST(ProductExtend, Cq) {
  const auto w2 = product_extend(orthogonal_qubit_mac(), 2);
  EXPECT_EQ(w2.n1(), 4u);
  EXPECT_EQ(w2.n2(), 1u);
  EXPECT_EQ(w2.dim(), 4);
  EXPECT_NEAR(w2.state(3, 0).matrix()(3, 3).real(), 1.0, kExact);
  EXPECT_THROW(product_extend(orthogonal_qubit_mac(), 20, 1000), SizeCapExceeded);
}

}  // namespace
}  // namespace macbound
