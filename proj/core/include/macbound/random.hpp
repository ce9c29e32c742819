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

// Seeded generators for random instances. Every randomized routine takes an
// explicit engine or seed, so results are reproducible.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

namespace macbound {

using Rng = std::mt19937_64;

// Independent stream for item `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Uniform on [0,1).
double uniform01(Rng& rng);

// Standard normal via Box-Muller.
double standard_normal(Rng& rng);

// Sample from the flat Dirichlet distribution on k outcomes.
std::vector<double> flat_dirichlet(std::size_t k, Rng& rng);

// rows x cols matrix whose rows are flat Dirichlet samples.
Eigen::MatrixXd random_stochastic_rows(std::size_t rows, std::size_t cols, Rng& rng);

// rows x cols matrix whose rows are point masses at uniformly chosen columns.
Eigen::MatrixXd random_deterministic_rows(std::size_t rows, std::size_t cols, Rng& rng);

}  // namespace macbound
