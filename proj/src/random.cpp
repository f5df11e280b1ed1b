// Copyright 2026 The sdcap Authors
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

#include "sdcap/random.hpp"

#include <cmath>
#include <numbers>

namespace sdcap {

ComplexMatrix ginibre(int rows, int cols, Rng& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix g(rows, cols);
    // Column-major fill order is part of the determinism contract.
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r) {
            double re = normal(rng);
            double im = normal(rng);
            g(r, c) = Complex(re, im);
        }
    }
    return g;
}

ComplexMatrix haar_unitary(int dim, Rng& rng) {
    Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(dim, dim, rng));
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        Complex d = r(j, j);
        double mag = std::abs(d);
        if (mag > 0.0) {
            q.col(j) *= d / mag;
        }
    }
    return q;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

RealVector uniform_angles(int count, Rng& rng) {
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
    RealVector out(count);
    for (int i = 0; i < count; ++i) {
        out(i) = uniform(rng);
    }
    return out;
}

}  // namespace sdcap
