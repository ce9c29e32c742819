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

#include "macbound/hermitian.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "macbound/error.hpp"

namespace macbound {
namespace {

using testing::from_real;

constexpr double kTight = 1e-10;

HermitianOperator pauli_x() {
  Eigen::MatrixXd m(2, 2);
  m << 0, 1, 1, 0;
  return from_real(m);
}

HermitianOperator diag2(double a, double b) { return HermitianOperator::diagonal(Eigen::Vector2d(a, b)); }

double frob(const CMatrix& m) { return m.norm(); }

TEST(HermitianOperator, RejectsNonHermitian) {
  CMatrix m(2, 2);
  m << 1.0, std::complex<double>(0, 1), std::complex<double>(0, 1), 1.0;
  EXPECT_THROW(HermitianOperator{m}, InvalidModel);
  EXPECT_THROW(HermitianOperator{CMatrix(2, 3)}, Error);
}

TEST(HermitianOperator, SymmetrizesRoundingNoise) {
  CMatrix m(2, 2);
  m << 1.0, 0.5, 0.5 + 1e-15, 2.0;
  const HermitianOperator h(m);
  EXPECT_EQ(h.matrix()(0, 1), std::conj(h.matrix()(1, 0)));
}

TEST(DensityOperator, ChecksTraceAndPositivity) {
  EXPECT_THROW(DensityOperator(diag2(0.5, 0.4)), InvalidModel);
  EXPECT_THROW(DensityOperator(diag2(1.5, -0.5)), Error);
  EXPECT_NO_THROW(DensityOperator(diag2(0.25, 0.75)));
}

TEST(HermitianEig, DiagonalInput) {
  const auto e = hermitian_eig(diag2(3, 1));
  EXPECT_NEAR(e.values(0), 3.0, kTight);
  EXPECT_NEAR(e.values(1), 1.0, kTight);
  EXPECT_NEAR(std::abs(e.vectors(0, 0)), 1.0, kTight);
  EXPECT_NEAR(std::abs(e.vectors(1, 1)), 1.0, kTight);
}

TEST(HermitianEig, PauliX) {
  const auto v = hermitian_eigenvalues(pauli_x());
  EXPECT_NEAR(v(0), 1.0, kTight);
  EXPECT_NEAR(v(1), -1.0, kTight);
}

TEST(HermitianEig, RandomReconstructionAndUnitarity) {
  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_hermitian(6, rng);
    const auto e = hermitian_eig(a);
    const CMatrix rec = e.vectors * e.values.cast<std::complex<double>>().asDiagonal() *
                        e.vectors.adjoint();
    EXPECT_LE(frob(rec - a.matrix()), 1e-10 * std::max(1.0, frob(a.matrix())));
    EXPECT_LE(frob(e.vectors.adjoint() * e.vectors - CMatrix::Identity(6, 6)), 1e-10);
    for (Eigen::Index i = 1; i < e.values.size(); ++i) EXPECT_GE(e.values(i - 1), e.values(i));
  }
}

TEST(HermitianEig, AgreesWithReferenceSolver) {
  Rng rng(7);
  for (Eigen::Index dim : {1, 2, 3, 5, 8, 16}) {
    const auto a = random_hermitian(dim, rng);
    const Eigen::SelfAdjointEigenSolver<CMatrix> ref(a.matrix());
    const Eigen::VectorXd expect = ref.eigenvalues().reverse();
    EXPECT_LE((hermitian_eigenvalues(a) - expect).cwiseAbs().maxCoeff(), 1e-10) << "dim " << dim;
  }
}

TEST(ProjectorLeq, Examples) {
  const auto p = projector_leq(diag2(1, -1), HermitianOperator::zero(2));
  EXPECT_LE(frob(p.matrix() - diag2(0, 1).matrix()), kTight);
  EXPECT_EQ(p.rank(), 1);

  const auto same = projector_leq(diag2(0.3, 0.7), diag2(0.3, 0.7));
  EXPECT_LE(frob(same.matrix() - CMatrix::Identity(2, 2)), kTight);
  EXPECT_EQ(same.rank(), 2);

  const auto x = projector_leq(pauli_x(), HermitianOperator::zero(2));
  Eigen::MatrixXd expect(2, 2);
  expect << 0.5, -0.5, -0.5, 0.5;
  EXPECT_LE(frob(x.matrix() - from_real(expect).matrix()), kTight);
}

TEST(ProjectorLeq, ComplementAndIdempotence) {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_hermitian(4, rng);
    const auto b = random_hermitian(4, rng);
    const auto leq = projector_leq(a, b);
    const auto gt = projector_gt(a, b);
    EXPECT_LE(frob(leq.matrix() + gt.matrix() - CMatrix::Identity(4, 4)), kTight);
    EXPECT_LE(frob(leq.matrix() * leq.matrix() - leq.matrix()), kTight);
    EXPECT_EQ(leq.rank() + gt.rank(), 4);
  }
}

TEST(ProjectorLeq, DimensionMismatch) {
  EXPECT_THROW(projector_leq(HermitianOperator::zero(2), HermitianOperator::zero(3)),
               DimensionMismatch);
}

TEST(PositivePartTrace, Examples) {
  EXPECT_NEAR(positive_part_trace(diag2(2, -3)), 2.0, kTight);
  EXPECT_NEAR(positive_part_trace(pauli_x()), 1.0, kTight);
  Rng rng(9);
  const auto psd = random_psd(4, rng);
  EXPECT_NEAR(positive_part_trace(psd), psd.trace(), kTight);
}

TEST(PositivePartTrace, MatchesProjectorForm) {
  Rng rng(10);
  const auto zero = HermitianOperator::zero(5);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_hermitian(5, rng);
    EXPECT_NEAR(positive_part_trace(a), trace_product(a, projector_geq(a, zero).op()), kTight);
    EXPECT_NEAR(positive_part_trace(a), trace_product(a, projector_gt(a, zero).op()), kTight);
  }
}

TEST(PositivePartTrace, MonotoneInOperatorOrder) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_hermitian(4, rng);
    const auto b = a + random_psd(4, rng);
    ASSERT_TRUE(psd_order_holds(b, a));
    EXPECT_LE(positive_part_trace(a), positive_part_trace(b) + kTight);
  }
}

TEST(PositivePartTrace, UnitaryInvariance) {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_hermitian(4, rng);
    const auto u = random_unitary(4, rng);
    EXPECT_NEAR(positive_part_trace(conjugate_by(u, a)), positive_part_trace(a), 1e-9);
  }
}

TEST(RandomUnitary, IsUnitary) {
  Rng rng(13);
  const auto u = random_unitary(5, rng);
  EXPECT_LE(frob(u.adjoint() * u - CMatrix::Identity(5, 5)), kTight);
}

TEST(RandomDensity, HasRequestedRank) {
  Rng rng(14);
  const auto rho = random_density(4, 2, rng);
  const auto v = hermitian_eigenvalues(rho.op());
  EXPECT_NEAR(v.sum(), 1.0, kTight);
  EXPECT_GT(v(1), 1e-8);
  EXPECT_NEAR(v(2), 0.0, 1e-10);
}

TEST(PsdOrder, Examples) {
  const auto i = HermitianOperator::identity(2);
  EXPECT_TRUE(psd_order_holds(i, 0.5 * i));
  EXPECT_FALSE(psd_order_holds(diag2(1, 0), diag2(0, 1)));
  EXPECT_TRUE(psd_order_holds(diag2(0.2, 0.8), diag2(0.2, 0.8)));
  EXPECT_NEAR(min_eigenvalue(diag2(1, 0) - diag2(0, 1)), -1.0, kTight);
}

TEST(DiagEmbed, Examples) {
  EXPECT_LE(frob(diag_embed(Distribution({1, 0})).matrix() - diag2(1, 0).matrix()), 0.0);
  EXPECT_LE(frob(diag_embed(Distribution::uniform(3)).matrix() - CMatrix::Identity(3, 3) / 3.0),
            1e-15);
  EXPECT_LE(frob(diag_embed(Distribution({0.2, 0.8})).matrix() - diag2(0.2, 0.8).matrix()), 0.0);
}

TEST(Kron, DimensionsAndTrace) {
  const auto k = kron(diag2(0.25, 0.75), diag2(0.5, 0.5));
  EXPECT_EQ(k.dim(), 4);
  EXPECT_NEAR(k.trace(), 1.0, kTight);
  EXPECT_NEAR(k.matrix()(3, 3).real(), 0.375, kTight);
}

TEST(InverseSqrt, OnSupport) {
  const auto r = inverse_sqrt_on_support(diag2(4, 0));
  EXPECT_NEAR(r.inv_sqrt.matrix()(0, 0).real(), 0.5, kTight);
  EXPECT_NEAR(std::abs(r.inv_sqrt.matrix()(1, 1)), 0.0, kTight);
  EXPECT_LE(frob(r.support.matrix() - diag2(1, 0).matrix()), kTight);
}

}  // namespace
}  // namespace macbound
