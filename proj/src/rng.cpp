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

#include "qsat/rng.hpp"

#include <algorithm>

namespace qsat {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Complex standard_complex_gaussian(Rng &rng) {
    // Unit variance for the complex number: each part has variance ½.
    std::normal_distribution<double> normal(0.0, 0.70710678118654752440);
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

Vector random_unit_vector(Eigen::Index dim, Rng &rng) {
    Vector v(dim);
    for (Eigen::Index k = 0; k < dim; ++k) v(k) = standard_complex_gaussian(rng);
    return v / v.norm();
}

double uniform01(Rng &rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

DensityMatrix random_density_matrix(int n, Rng &rng, int rank) {
    const auto d = static_cast<Eigen::Index>(dimension(n));
    const Eigen::Index cols = rank > 0 ? std::min<Eigen::Index>(rank, d) : d;
    Matrix g(d, cols);
    for (Eigen::Index c = 0; c < cols; ++c)
        for (Eigen::Index r = 0; r < d; ++r) g(r, c) = standard_complex_gaussian(rng);
    Matrix rho = g * g.adjoint();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    return DensityMatrix(n, std::move(rho));
}

}  // namespace qsat
