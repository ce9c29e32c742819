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

// Finite-dimensional Hermitian operators: spectral decomposition by cyclic
// Jacobi rotations, spectral projectors {A <= B}, positive-part traces and
// operator-order checks.

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "macbound/model.hpp"
#include "macbound/random.hpp"

namespace macbound {

using CMatrix = Eigen::MatrixXcd;

// Relative Frobenius asymmetry tolerated (and then symmetrized away).
inline constexpr double kHermitianTolerance = 1e-12;
// Eigenvalue floor for positive semidefiniteness.
inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
// Eigenvalues within +-kSignBand * ||A - B|| of zero are classified as <= 0.
inline constexpr double kSignBand = 1e-12;
// Jacobi stops once the off-diagonal Frobenius norm is below this times ||A||_F.
inline constexpr double kJacobiThreshold = 1e-13;

class HermitianOperator {
 public:
  HermitianOperator() = default;
  // Symmetrizes (A + A^dagger)/2; throws InvalidModel if the relative
  // asymmetry exceeds kHermitianTolerance.
  explicit HermitianOperator(const CMatrix& m);

  static HermitianOperator zero(Eigen::Index dim);
  static HermitianOperator identity(Eigen::Index dim);
  static HermitianOperator diagonal(const Eigen::VectorXd& d);
  // |v><v|
  static HermitianOperator outer(const Eigen::VectorXcd& v);

  Eigen::Index dim() const noexcept { return m_.rows(); }
  const CMatrix& matrix() const noexcept { return m_; }
  double trace() const { return m_.trace().real(); }

  HermitianOperator& operator+=(const HermitianOperator& o);
  HermitianOperator& operator-=(const HermitianOperator& o);
  HermitianOperator& operator*=(double s);

  friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) {
    return a += b;
  }
  friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) {
    return a -= b;
  }
  friend HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }

 private:
  struct Unchecked {};
  HermitianOperator(CMatrix m, Unchecked) : m_(std::move(m)) {}
  friend HermitianOperator kron(const HermitianOperator&, const HermitianOperator&);
  friend HermitianOperator conjugate_by(const CMatrix&, const HermitianOperator&);

  CMatrix m_;
};

// a (x) b
HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b);
// U A U^dagger (or X A X^dagger for any square X)
HermitianOperator conjugate_by(const CMatrix& u, const HermitianOperator& a);

// Positive semidefinite, unit trace.
class DensityOperator {
 public:
  DensityOperator() = default;
  explicit DensityOperator(HermitianOperator rho);

  Eigen::Index dim() const noexcept { return rho_.dim(); }
  const HermitianOperator& op() const noexcept { return rho_; }
  const CMatrix& matrix() const noexcept { return rho_.matrix(); }

 private:
  HermitianOperator rho_;
};

struct EigenDecomposition {
  Eigen::VectorXd values;  // descending
  CMatrix vectors;         // orthonormal columns, matching `values`
};

EigenDecomposition hermitian_eig(const HermitianOperator& a);
// Eigenvalues only (descending); skips accumulating the eigenvectors.
Eigen::VectorXd hermitian_eigenvalues(const HermitianOperator& a);

enum class SpectralSide;

// Orthogonal projector built from a spectral decomposition. `band_hits`
// counts eigenvalues that fell inside the zero band during classification.
class Projector {
 public:
  Projector() = default;

  const HermitianOperator& op() const noexcept { return p_; }
  const CMatrix& matrix() const noexcept { return p_.matrix(); }
  Eigen::Index rank() const noexcept { return rank_; }
  int band_hits() const noexcept { return band_hits_; }

 private:
  Projector(HermitianOperator p, Eigen::Index rank, int hits)
      : p_(std::move(p)), rank_(rank), band_hits_(hits) {}
  friend Projector spectral_projector(const EigenDecomposition&, SpectralSide, double);

  HermitianOperator p_;
  Eigen::Index rank_ = 0;
  int band_hits_ = 0;
};

// Which eigenvalues a spectral projector keeps, given a zero band of width `band`.
enum class SpectralSide {
  kNonPositive,  // lambda <= band
  kPositive,     // lambda > band
  kNonNegative,  // lambda >= -band
};

Projector spectral_projector(const EigenDecomposition& eig, SpectralSide side, double band);

// {A <= B}: projector onto the eigenspaces of A - B with eigenvalue <= 0
// (band hits included).
Projector projector_leq(const HermitianOperator& a, const HermitianOperator& b);
// {A > B} = I - {A <= B}.
Projector projector_gt(const HermitianOperator& a, const HermitianOperator& b);
// {A >= B}: eigenvalues of A - B that are >= 0, band hits included.
Projector projector_geq(const HermitianOperator& a, const HermitianOperator& b);

// Tr[A_+] = sum of positive eigenvalues.
double positive_part_trace(const HermitianOperator& a);

double min_eigenvalue(const HermitianOperator& a);

// True iff lambda_min(S - T) >= -tol.
bool psd_order_holds(const HermitianOperator& s, const HermitianOperator& t,
                     double tol = kPsdTolerance);

// Tr[A B] for Hermitian A, B (real part).
double trace_product(const HermitianOperator& a, const HermitianOperator& b);

DensityOperator diag_embed(const Distribution& d);

// S^{-1/2} on the span of eigenvalues above rel_cutoff * lambda_max, zero on
// the complement; `support` is the projector onto that span.
struct InverseSqrt {
  HermitianOperator inv_sqrt;
  HermitianOperator support;
};
InverseSqrt inverse_sqrt_on_support(const HermitianOperator& s, double rel_cutoff = 1e-10);

// Random generators for tests and verification suites.
HermitianOperator random_hermitian(Eigen::Index dim, Rng& rng);
// Haar-distributed unitary (QR of a complex Ginibre matrix with phase fix).
CMatrix random_unitary(Eigen::Index dim, Rng& rng);
// Induced-measure density operator of the given rank (1 <= rank <= dim).
DensityOperator random_density(Eigen::Index dim, Eigen::Index rank, Rng& rng);
// G G^dagger for a complex Ginibre G (unnormalized PSD).
HermitianOperator random_psd(Eigen::Index dim, Rng& rng);

}  // namespace macbound
