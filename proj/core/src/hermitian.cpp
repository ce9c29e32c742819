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

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include <Eigen/QR>

#include "macbound/error.hpp"

namespace macbound {
namespace {

using cd = std::complex<double>;

constexpr int kMaxSweeps = 100;

// Cyclic Jacobi on a Hermitian matrix. On return `a` is diagonal (up to the
// threshold) and, if `v` is non-null, a = v^dagger a_in v.
void jacobi(CMatrix& a, CMatrix* v) {
  const Eigen::Index n = a.rows();
  if (v) *v = CMatrix::Identity(n, n);
  const double norm = a.norm();
  if (norm == 0.0 || n < 2) return;
  const double target = kJacobiThreshold * norm;
  const double negligible = 1e-18 * norm;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index q = 1; q < n; ++q) {
      for (Eigen::Index p = 0; p < q; ++p) off += std::norm(a(p, q));
    }
    if (std::sqrt(2.0 * off) <= target) return;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const cd z = a(p, q);
        const double r = std::abs(z);
        if (r <= negligible) continue;
        const cd e = z / r;
        const cd ec = std::conj(e);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J = [[c, s], [-s conj(e), c conj(e)]] on (p,q); a <- J^dagger a J.
        for (Eigen::Index k = 0; k < n; ++k) {
          const cd akp = a(k, p);
          const cd akq = a(k, q);
          a(k, p) = c * akp - s * ec * akq;
          a(k, q) = s * akp + c * ec * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const cd apk = a(p, k);
          const cd aqk = a(q, k);
          a(p, k) = c * apk - s * e * aqk;
          a(q, k) = s * apk + c * e * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        if (v) {
          for (Eigen::Index k = 0; k < n; ++k) {
            const cd vkp = (*v)(k, p);
            const cd vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - s * ec * vkq;
            (*v)(k, q) = s * vkp + c * ec * vkq;
          }
        }
      }
    }
  }
  throw Error("hermitian_eig: Jacobi iteration did not converge");
}

void require_same_dim(const HermitianOperator& a, const HermitianOperator& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  }
}

double spectral_norm(const Eigen::VectorXd& values) {
  return values.size() == 0 ? 0.0 : values.cwiseAbs().maxCoeff();
}

}  // namespace

HermitianOperator::HermitianOperator(const CMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("hermitian operator: matrix not square");
  if (!m.allFinite()) throw InvalidModel("hermitian operator: non-finite entry");
  const double asym = (m - m.adjoint()).norm();
  if (asym > kHermitianTolerance * m.norm()) {
    throw InvalidModel("hermitian operator: relative asymmetry " +
                       std::to_string(asym / m.norm()) + " exceeds tolerance");
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim) {
  return HermitianOperator(CMatrix::Zero(dim, dim), Unchecked{});
}

HermitianOperator HermitianOperator::identity(Eigen::Index dim) {
  return HermitianOperator(CMatrix::Identity(dim, dim), Unchecked{});
}

HermitianOperator HermitianOperator::diagonal(const Eigen::VectorXd& d) {
  return HermitianOperator(d.cast<cd>().asDiagonal(), Unchecked{});
}

HermitianOperator HermitianOperator::outer(const Eigen::VectorXcd& v) {
  CMatrix m = v * v.adjoint();
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, i) = m(i, i).real();
  return HermitianOperator(std::move(m), Unchecked{});
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& o) {
  if (dim() != o.dim()) throw DimensionMismatch("hermitian +: dimension mismatch");
  m_ += o.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& o) {
  if (dim() != o.dim()) throw DimensionMismatch("hermitian -: dimension mismatch");
  m_ -= o.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double s) {
  m_ *= s;
  return *this;
}

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b) {
  const Eigen::Index da = a.dim();
  const Eigen::Index db = b.dim();
  CMatrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) out.block(i * db, j * db, db, db) = a.m_(i, j) * b.m_;
  }
  return HermitianOperator(std::move(out), HermitianOperator::Unchecked{});
}

HermitianOperator conjugate_by(const CMatrix& u, const HermitianOperator& a) {
  CMatrix m = u * a.m_ * u.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  return HermitianOperator(std::move(m), HermitianOperator::Unchecked{});
}

DensityOperator::DensityOperator(HermitianOperator rho) : rho_(std::move(rho)) {
  const double tr = rho_.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw InvalidModel("density operator: trace " + std::to_string(tr) + " is not 1");
  }
  const double lmin = min_eigenvalue(rho_);
  if (lmin < -kPsdTolerance) {
    throw InvalidModel("density operator: not positive semidefinite (min eigenvalue " +
                       std::to_string(lmin) + ")");
  }
}

EigenDecomposition hermitian_eig(const HermitianOperator& a) {
  CMatrix work = a.matrix();
  CMatrix v;
  jacobi(work, &v);
  const Eigen::Index n = work.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return work(i, i).real() > work(j, j).real();
  });
  EigenDecomposition out{Eigen::VectorXd(n), CMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.values(k) = work(src, src).real();
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const HermitianOperator& a) {
  CMatrix work = a.matrix();
  jacobi(work, nullptr);
  Eigen::VectorXd values = work.diagonal().real();
  std::sort(values.data(), values.data() + values.size(), std::greater<>());
  return values;
}

Projector spectral_projector(const EigenDecomposition& eig, SpectralSide side, double band) {
  const Eigen::Index n = eig.values.size();
  CMatrix p = CMatrix::Zero(n, n);
  Eigen::Index rank = 0;
  int hits = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = eig.values(i);
    if (std::abs(lambda) <= band) ++hits;
    bool keep = false;
    switch (side) {
      case SpectralSide::kNonPositive: keep = lambda <= band; break;
      case SpectralSide::kPositive: keep = lambda > band; break;
      case SpectralSide::kNonNegative: keep = lambda >= -band; break;
    }
    if (keep) {
      p += eig.vectors.col(i) * eig.vectors.col(i).adjoint();
      ++rank;
    }
  }
  p = 0.5 * (p + p.adjoint()).eval();
  return Projector(HermitianOperator(p), rank, hits);
}

namespace {

Projector difference_projector(const HermitianOperator& a, const HermitianOperator& b,
                               SpectralSide side, const char* what) {
  require_same_dim(a, b, what);
  const auto eig = hermitian_eig(a - b);
  return spectral_projector(eig, side, kSignBand * spectral_norm(eig.values));
}

}  // namespace

Projector projector_leq(const HermitianOperator& a, const HermitianOperator& b) {
  return difference_projector(a, b, SpectralSide::kNonPositive, "projector_leq");
}

Projector projector_gt(const HermitianOperator& a, const HermitianOperator& b) {
  return difference_projector(a, b, SpectralSide::kPositive, "projector_gt");
}

Projector projector_geq(const HermitianOperator& a, const HermitianOperator& b) {
  return difference_projector(a, b, SpectralSide::kNonNegative, "projector_geq");
}

double positive_part_trace(const HermitianOperator& a) {
  const auto values = hermitian_eigenvalues(a);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) sum += std::max(values(i), 0.0);
  return sum;
}

double min_eigenvalue(const HermitianOperator& a) {
  const auto values = hermitian_eigenvalues(a);
  return values.size() == 0 ? 0.0 : values(values.size() - 1);
}

bool psd_order_holds(const HermitianOperator& s, const HermitianOperator& t, double tol) {
  require_same_dim(s, t, "psd_order_holds");
  return min_eigenvalue(s - t) >= -tol;
}

double trace_product(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a, b, "trace_product");
  // Tr[AB] = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B
  return (a.matrix().array() * b.matrix().array().conjugate()).sum().real();
}

DensityOperator diag_embed(const Distribution& d) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) v(static_cast<Eigen::Index>(i)) = d[i];
  return DensityOperator(HermitianOperator::diagonal(v));
}

InverseSqrt inverse_sqrt_on_support(const HermitianOperator& s, double rel_cutoff) {
  const auto eig = hermitian_eig(s);
  const Eigen::Index n = s.dim();
  const double lmax = n == 0 ? 0.0 : eig.values(0);
  CMatrix inv = CMatrix::Zero(n, n);
  CMatrix sup = CMatrix::Zero(n, n);
  if (lmax > 0.0) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (eig.values(i) <= rel_cutoff * lmax) continue;
      const CMatrix proj = eig.vectors.col(i) * eig.vectors.col(i).adjoint();
      inv += proj / std::sqrt(eig.values(i));
      sup += proj;
    }
  }
  return {HermitianOperator(0.5 * (inv + inv.adjoint())),
          HermitianOperator(0.5 * (sup + sup.adjoint()))};
}

namespace {

CMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  CMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = standard_normal(rng);
      const double im = standard_normal(rng);
      g(i, j) = cd(re, im);
    }
  }
  return g;
}

}  // namespace

HermitianOperator random_hermitian(Eigen::Index dim, Rng& rng) {
  const CMatrix g = ginibre(dim, dim, rng);
  return HermitianOperator(CMatrix(0.5 * (g + g.adjoint())));
}

CMatrix random_unitary(Eigen::Index dim, Rng& rng) {
  const CMatrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

DensityOperator random_density(Eigen::Index dim, Eigen::Index rank, Rng& rng) {
  if (rank < 1 || rank > dim) throw InvalidModel("random_density: rank out of range");
  const CMatrix g = ginibre(dim, rank, rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityOperator(HermitianOperator(CMatrix(0.5 * (rho + rho.adjoint()))));
}

HermitianOperator random_psd(Eigen::Index dim, Rng& rng) {
  const CMatrix g = ginibre(dim, dim, rng);
  const CMatrix m = g * g.adjoint();
  return HermitianOperator(CMatrix(0.5 * (m + m.adjoint())));
}

}  // namespace macbound
