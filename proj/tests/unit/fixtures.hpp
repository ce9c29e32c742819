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

// Small channels shared by the unit tests.

#include <Eigen/Core>

#include "macbound/decoders.hpp"
#include "macbound/hermitian.hpp"
#include "macbound/model.hpp"
#include "macbound/quantum_bounds.hpp"

namespace macbound::testing {

// W(y|x1,x2) = 1{y = x1 + x2}, y in {0,1,2}.
inline ClassicalMAC adder_mac() {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(4, 3);
  w(0, 0) = 1.0;
  w(1, 1) = 1.0;
  w(2, 1) = 1.0;
  w(3, 2) = 1.0;
  return ClassicalMAC(2, 2, w);
}

// Four outputs, y = 2*x1 + x2.
inline ClassicalMAC noiseless_mac() { return ClassicalMAC(2, 2, Eigen::MatrixXd::Identity(4, 4)); }

// Output independent of the inputs.
inline ClassicalMAC constant_mac(const Eigen::RowVectorXd& row) {
  return ClassicalMAC(2, 2, row.replicate(4, 1));
}

inline Distribution uniform_pairs() { return Distribution::uniform(4); }

// Decoder placing decision `d[y]` (flattened pair) with certainty at output y.
inline Decoder deterministic_decoder(std::size_t d1, std::size_t d2,
                                     const std::vector<std::size_t>& d) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d.size()),
                                            static_cast<Eigen::Index>(d1 * d2));
  for (std::size_t y = 0; y < d.size(); ++y) {
    g(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(d[y])) = 1.0;
  }
  return Decoder(d1, d2, StochasticMatrix(g));
}

inline DensityOperator basis_state(Eigen::Index dim, Eigen::Index k) {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(dim);
  d(k) = 1.0;
  return DensityOperator(HermitianOperator::diagonal(d));
}

// X1 = {0,1}, X2 singleton, W_x = |x><x| on a qubit.
inline CqMAC orthogonal_qubit_mac() {
  return CqMAC(2, 1, {basis_state(2, 0), basis_state(2, 1)});
}

inline HermitianOperator from_real(const Eigen::MatrixXd& m) {
  return HermitianOperator(m.cast<std::complex<double>>());
}

}  // namespace macbound::testing
