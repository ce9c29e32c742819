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

#include "macbound/random.hpp"

#include <cmath>

namespace macbound {

// Top 53 bits of the engine output; portable across standard libraries,
// unlike std::uniform_real_distribution.
double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double standard_normal(Rng& rng) {
  const double u1 = 1.0 - uniform01(rng);  // (0,1]
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<double> flat_dirichlet(std::size_t k, Rng& rng) {
  std::vector<double> v(k);
  double sum = 0.0;
  for (auto& x : v) {
    x = -std::log1p(-uniform01(rng));
    sum += x;
  }
  if (sum <= 0.0) {
    // all draws were zero (probability ~2^-53k)
    for (auto& x : v) x = 1.0 / static_cast<double>(k);
    return v;
  }
  for (auto& x : v) x /= sum;
  return v;
}

Eigen::MatrixXd random_stochastic_rows(std::size_t rows, std::size_t cols, Rng& rng) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const auto v = flat_dirichlet(cols, rng);
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v[c];
    }
  }
  return m;
}

Eigen::MatrixXd random_deterministic_rows(std::size_t rows, std::size_t cols, Rng& rng) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows),
                                            static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const auto c = static_cast<Eigen::Index>(rng() % cols);
    m(static_cast<Eigen::Index>(r), c) = 1.0;
  }
  return m;
}

}  // namespace macbound
