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

#include <vector>

#include "sdcap/matrix.hpp"
#include "sdcap/states.hpp"

namespace sdcap {

/// Eigenvalues in [-kClipTolerance, 0) count as zero; anything more
/// negative is an invariant violation.
inline constexpr double kClipTolerance = 1e-10;

/// Below this sender entropy a per-qubit rate is undefined.
inline constexpr double kSenderEntropyFloor = 1e-9;

/// Shannon entropy in bits of a spectrum, with 0 log 0 = 0 and clipping.
double shannon_entropy(const RealVector& spectrum);

/// von Neumann entropy -tr(m log2 m) in bits.
double entropy(const ComplexMatrix& m);

/// The three entropies every information quantity is built from.
struct EntropyProfile {
    double joint;   // S(rho)
    double alice;   // S(rho_A)
    double bob;     // S(rho_B)

    double conditional_gap() const { return bob - joint; }  // S(rho_B) - S(rho), may be negative
    double coherent_info() const;
    double mutual_info() const { return alice + bob - joint; }
};

EntropyProfile entropies(const BipartiteState& s);

/// I^B = max{S(rho_B) - S(rho), 0}.
double coherent_info(const BipartiteState& s);

/// I_M = S(rho_A) + S(rho_B) - S(rho).
double mutual_info(const BipartiteState& s);

/// I_sd = I_M / S(rho_A). Throws DegenerateSenderEntropy when S(rho_A) <= 1e-9.
double i_sd(const BipartiteState& s);
double i_sd(const EntropyProfile& e);

/// Finite list of (probability, state) pairs on a common H_A (x) H_B.
class Ensemble {
public:
    struct Item {
        double p;
        BipartiteState state;
    };

    /// Throws DimensionError for mixed dimensions and InvariantViolation
    /// for negative probabilities or a sum away from 1 by more than 1e-10.
    explicit Ensemble(std::vector<Item> items);

    const std::vector<Item>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    ComplexMatrix average() const;

private:
    std::vector<Item> items_;
};

/// Holevo information S(sum p_i rho_i) - sum p_i S(rho_i).
double holevo(const Ensemble& e);

}  // namespace sdcap
