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

#include "sdcap/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "sdcap/errors.hpp"

namespace sdcap {

double shannon_entropy(const RealVector& spectrum) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
        double lambda = spectrum(i);
        if (lambda < -kClipTolerance || std::isnan(lambda)) {
            throw InvariantViolation("entropy: eigenvalue " + std::to_string(lambda) + " is negative");
        }
        if (lambda > 0.0) {
            s -= lambda * std::log2(lambda);
        }
    }
    return s;
}

double entropy(const ComplexMatrix& m) { return shannon_entropy(hermitian_eigenvalues(m)); }

double EntropyProfile::coherent_info() const { return std::max(conditional_gap(), 0.0); }

EntropyProfile entropies(const BipartiteState& s) {
    return {entropy(s.rho()), entropy(s.reduced(Side::A)), entropy(s.reduced(Side::B))};
}

double coherent_info(const BipartiteState& s) {
    return std::max(entropy(s.reduced(Side::B)) - entropy(s.rho()), 0.0);
}

double mutual_info(const BipartiteState& s) { return entropies(s).mutual_info(); }

double i_sd(const EntropyProfile& e) {
    if (e.alice <= kSenderEntropyFloor) {
        throw DegenerateSenderEntropy("i_sd: sender entropy " + std::to_string(e.alice) + " is zero");
    }
    return e.mutual_info() / e.alice;
}

double i_sd(const BipartiteState& s) { return i_sd(entropies(s)); }

Ensemble::Ensemble(std::vector<Item> items) : items_(std::move(items)) {
    if (items_.empty()) {
        throw DomainError("Ensemble: no members");
    }
    double total = 0.0;
    for (const Item& it : items_) {
        if (it.state.dA() != items_.front().state.dA() || it.state.dB() != items_.front().state.dB()) {
            throw DimensionError("Ensemble: members act on different spaces");
        }
        if (!(it.p >= 0.0)) {
            throw InvariantViolation("Ensemble: negative probability");
        }
        total += it.p;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw InvariantViolation("Ensemble: probabilities sum to " + std::to_string(total));
    }
}

ComplexMatrix Ensemble::average() const {
    ComplexMatrix avg = ComplexMatrix::Zero(items_.front().state.dim(), items_.front().state.dim());
    for (const Item& it : items_) {
        avg += it.p * it.state.rho();
    }
    return avg;
}

double holevo(const Ensemble& e) {
    double mixed = 0.0;
    for (const auto& it : e.items()) {
        if (it.p > 0.0) {
            mixed += it.p * entropy(it.state.rho());
        }
    }
    return entropy(e.average()) - mixed;
}

}  // namespace sdcap
