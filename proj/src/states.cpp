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

#include "sdcap/states.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sdcap/errors.hpp"
#include "sdcap/random.hpp"

namespace sdcap {

BipartiteState::BipartiteState(int dA, int dB, ComplexMatrix rho) : dA_(dA), dB_(dB), rho_(std::move(rho)) {
    if (dA_ < 1 || dB_ < 1 || rho_.rows() != rho_.cols() ||
        rho_.rows() != static_cast<Eigen::Index>(dA_) * dB_) {
        throw DimensionError("BipartiteState: matrix of dimension " + std::to_string(rho_.rows()) +
                             " does not match " + std::to_string(dA_) + "x" + std::to_string(dB_));
    }
    double asym = hermitian_asymmetry(rho_);
    if (!(asym <= kStateTolerance)) {
        throw NotHermitianError("BipartiteState: asymmetry " + std::to_string(asym));
    }
    Complex tr = rho_.trace();
    if (!(std::abs(tr - Complex(1.0, 0.0)) <= kStateTolerance)) {
        throw InvariantViolation("BipartiteState: trace " + std::to_string(tr.real()) + " is not 1");
    }
}

ComplexMatrix BipartiteState::reduced(Side keep) const { return partial_trace(rho_, dA_, dB_, keep); }

void BipartiteState::validate() const {
    double lowest = hermitian_eigenvalues(rho_)(0);
    if (lowest < -kStateTolerance) {
        throw InvariantViolation("BipartiteState: negative eigenvalue " + std::to_string(lowest));
    }
}

BipartiteState singlet() {
    ComplexVector psi = ComplexVector::Zero(4);
    psi(1) = 1.0 / std::sqrt(2.0);
    psi(2) = -1.0 / std::sqrt(2.0);
    return BipartiteState(2, 2, projector(psi));
}

BipartiteState max_entangled(int d) {
    if (d < 1) {
        throw DomainError("max_entangled: d must be positive");
    }
    ComplexVector psi = ComplexVector::Zero(d * d);
    for (int i = 0; i < d; ++i) {
        psi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
    }
    return BipartiteState(d, d, projector(psi));
}

BipartiteState werner_like(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("werner_like: p must lie in [0, 1]");
    }
    return BipartiteState(2, 2, p * singlet().rho() + (1.0 - p) * identity(4) / 4.0);
}

BipartiteState maximally_mixed(int dA, int dB) {
    if (dA < 1 || dB < 1) {
        throw DomainError("maximally_mixed: dimensions must be positive");
    }
    return BipartiteState(dA, dB, identity(dA * dB) / static_cast<double>(dA * dB));
}

BipartiteState product(const ComplexMatrix& rhoA, const ComplexMatrix& rhoB) {
    return BipartiteState(static_cast<int>(rhoA.rows()), static_cast<int>(rhoB.rows()), tensor(rhoA, rhoB));
}

BipartiteState tiles_bound_entangled() {
    auto ket = [](int i) {
        ComplexVector v = ComplexVector::Zero(3);
        v(i) = 1.0;
        return v;
    };
    auto kron = [](const ComplexVector& a, const ComplexVector& b) {
        ComplexVector v(9);
        for (int i = 0; i < 3; ++i) {
            v.segment(3 * i, 3) = a(i) * b;
        }
        return v;
    };
    const double r2 = 1.0 / std::sqrt(2.0);
    ComplexVector k01 = (ket(0) - ket(1)) * r2;
    ComplexVector k12 = (ket(1) - ket(2)) * r2;
    ComplexVector all = (ket(0) + ket(1) + ket(2)) / std::sqrt(3.0);

    ComplexMatrix upb = ComplexMatrix::Zero(9, 9);
    upb += projector(kron(ket(0), k01));
    upb += projector(kron(k01, ket(2)));
    upb += projector(kron(ket(2), k12));
    upb += projector(kron(k12, ket(0)));
    upb += projector(kron(all, all));
    return BipartiteState(3, 3, (identity(9) - upb) / 4.0);
}

BipartiteState random_state_of_rank(int dA, int dB, int rank, std::uint64_t seed) {
    if (dA < 1 || dB < 1 || rank < 1) {
        throw DomainError("random_state: dimensions and rank must be positive");
    }
    Rng rng(seed);
    ComplexMatrix g = ginibre(dA * dB, rank, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = (rho + rho.adjoint()) * 0.5;
    return BipartiteState(dA, dB, std::move(rho));
}

BipartiteState random_state(int dA, int dB, std::uint64_t seed) {
    return random_state_of_rank(dA, dB, dA * dB, seed);
}

BipartiteState random_pure_state(int dA, int dB, std::uint64_t seed) {
    return random_state_of_rank(dA, dB, 1, seed);
}

BipartiteState power(const BipartiteState& state, int n, int dimension_cap) {
    if (n < 1) {
        throw DomainError("power: n must be at least 1");
    }
    double total = std::pow(static_cast<double>(state.dim()), n);
    if (total > dimension_cap) {
        throw DimensionError("power: dimension " + std::to_string(static_cast<long long>(total)) +
                             " exceeds cap " + std::to_string(dimension_cap));
    }
    if (n == 1) {
        return state;
    }
    ComplexMatrix rho = state.rho();
    std::vector<int> dims{state.dA(), state.dB()};
    for (int k = 1; k < n; ++k) {
        rho = tensor(rho, state.rho());
        dims.push_back(state.dA());
        dims.push_back(state.dB());
    }
    // (A1 B1 A2 B2 ...) -> (A1 A2 ... B1 B2 ...)
    std::vector<int> order;
    for (int k = 0; k < n; ++k) order.push_back(2 * k);
    for (int k = 0; k < n; ++k) order.push_back(2 * k + 1);
    int dA = 1, dB = 1;
    for (int k = 0; k < n; ++k) {
        dA *= state.dA();
        dB *= state.dB();
    }
    return BipartiteState(dA, dB, permute_factors(rho, dims, order));
}

}  // namespace sdcap
