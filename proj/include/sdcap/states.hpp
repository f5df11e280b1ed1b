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

#pragma once

#include <cstdint>

#include "sdcap/matrix.hpp"

namespace sdcap {

/// Tolerances on the density-matrix invariants.
inline constexpr double kStateTolerance = 1e-10;

/// Largest total dimension power() will build.
inline constexpr int kDefaultDimensionCap = 4096;

/// Density matrix on H_A (x) H_B with its factor dimensions.
///
/// Construction checks dimensions, Hermiticity and unit trace. Positivity
/// costs an eigensolve and is checked by validate() or lazily by the
/// entropy routines, which clip eigenvalues in [-1e-10, 0) to zero.
class BipartiteState {
public:
    BipartiteState(int dA, int dB, ComplexMatrix rho);

    int dA() const { return dA_; }
    int dB() const { return dB_; }
    int dim() const { return dA_ * dB_; }
    const ComplexMatrix& rho() const { return rho_; }

    ComplexMatrix reduced(Side keep) const;

    /// Full invariant check including the minimum eigenvalue; throws InvariantViolation.
    void validate() const;

private:
    int dA_;
    int dB_;
    ComplexMatrix rho_;
};

/// Projector onto (|01> - |10>)/sqrt(2).
BipartiteState singlet();

/// Projector onto sum_i |ii>/sqrt(d).
BipartiteState max_entangled(int d);

/// p * singlet + (1 - p) * I/4.
BipartiteState werner_like(double p);

/// I / (dA dB).
BipartiteState maximally_mixed(int dA, int dB);

BipartiteState product(const ComplexMatrix& rhoA, const ComplexMatrix& rhoB);

/// 3x3 state built from the complement of the Tiles unextendible product
/// basis. PPT and entangled.
BipartiteState tiles_bound_entangled();

/// Hilbert-Schmidt random state: G G^dagger / tr, G a square Ginibre matrix.
BipartiteState random_state(int dA, int dB, std::uint64_t seed);

/// Random state of rank at most `rank` (G has `rank` columns). rank = dA dB
/// reproduces random_state.
BipartiteState random_state_of_rank(int dA, int dB, int rank, std::uint64_t seed);

/// Haar-random pure state.
BipartiteState random_pure_state(int dA, int dB, std::uint64_t seed);

/// rho^(x)n with all A factors grouped before all B factors, so the result
/// is again a two-party state with dimensions (dA^n, dB^n).
BipartiteState power(const BipartiteState& state, int n, int dimension_cap = kDefaultDimensionCap);

}  // namespace sdcap
