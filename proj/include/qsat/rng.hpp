// Copyright 2026 The qsat Authors
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

#include <cstdint>
#include <random>

#include "qsat/densesim.hpp"

namespace qsat {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer over (master, index). Streams for different indices are
/// decorrelated and do not depend on the order in which they are created.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

inline Rng make_rng(std::uint64_t master, std::uint64_t index) { return Rng(derive_seed(master, index)); }

Complex standard_complex_gaussian(Rng &rng);

/// Uniformly distributed unit vector in C^dim (normalized complex Gaussian).
Vector random_unit_vector(Eigen::Index dim, Rng &rng);

double uniform01(Rng &rng);

/// ρ = G G† / tr(G G†) with G a 2^n × rank complex Ginibre matrix; rank 0 means full rank.
DensityMatrix random_density_matrix(int n, Rng &rng, int rank = 0);

}  // namespace qsat
