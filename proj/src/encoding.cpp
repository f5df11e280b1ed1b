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

#include "sdcap/encoding.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <utility>

#include "sdcap/errors.hpp"
#include "sdcap/random.hpp"

namespace sdcap {

ScramblingSet weyl_set(int d) {
    if (d < 2) {
        throw DomainError("weyl_set: d must be at least 2");
    }
    ComplexMatrix shift = ComplexMatrix::Zero(d, d);
    ComplexMatrix clock = ComplexMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        shift((k + 1) % d, k) = 1.0;
        clock(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
    }
    ScramblingSet set{d, {}};
    set.unitaries.reserve(static_cast<std::size_t>(d) * d);
    ComplexMatrix xa = identity(d);
    for (int a = 0; a < d; ++a) {
        ComplexMatrix u = xa;
        for (int b = 0; b < d; ++b) {
            set.unitaries.push_back(u);
            u = u * clock;
        }
        xa = shift * xa;
    }
    return set;
}

std::vector<ComplexMatrix> gell_mann_basis(int d) {
    std::vector<ComplexMatrix> basis;
    const Complex i(0.0, 1.0);
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            ComplexMatrix sym = ComplexMatrix::Zero(d, d);
            sym(j, k) = 1.0;
            sym(k, j) = 1.0;
            basis.push_back(sym);
            ComplexMatrix anti = ComplexMatrix::Zero(d, d);
            anti(j, k) = -i;
            anti(k, j) = i;
            basis.push_back(anti);
        }
    }
    for (int l = 1; l < d; ++l) {
        ComplexMatrix diag = ComplexMatrix::Zero(d, d);
        const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int j = 0; j < l; ++j) {
            diag(j, j) = scale;
        }
        diag(l, l) = -scale * l;
        basis.push_back(diag);
    }
    return basis;
}

double scrambling_residual(const ScramblingSet& set, const std::vector<ComplexMatrix>& traceless) {
    double worst = 0.0;
    for (const auto& m : traceless) {
        ComplexMatrix sum = ComplexMatrix::Zero(set.d, set.d);
        for (const auto& u : set.unitaries) {
            sum.noalias() += u * m * u.adjoint();
        }
        worst = std::max(worst, sum.cwiseAbs().maxCoeff());
    }
    return worst;
}

Ensemble encode_ensemble(const BipartiteState& s, const KrausChannel& ch, const ScramblingSet& set) {
    if (ch.dOut() != set.d || ch.dIn() != s.dA()) {
        throw DimensionError("encode_ensemble: channel " + std::to_string(ch.dIn()) + "->" +
                             std::to_string(ch.dOut()) + " does not connect a " + std::to_string(s.dA()) +
                             "-dimensional share to a " + std::to_string(set.d) + "-dimensional channel");
    }
    const BipartiteState eta = apply_A(ch, s);
    const double p = 1.0 / static_cast<double>(set.unitaries.size());
    const ComplexMatrix idB = identity(s.dB());
    std::vector<Ensemble::Item> items;
    items.reserve(set.unitaries.size());
    for (const auto& u : set.unitaries) {
        ComplexMatrix lifted = tensor(u, idB);
        ComplexMatrix member = lifted * eta.rho() * lifted.adjoint();
        member = (member + member.adjoint()) * 0.5;
        items.push_back({p, BipartiteState(eta.dA(), eta.dB(), std::move(member))});
    }
    return Ensemble(std::move(items));
}

AchievabilityCheck verify_achievability(const BipartiteState& s, const KrausChannel& ch) {
    const int d = ch.dOut();
    const ScramblingSet set = weyl_set(d);
    const EntropyProfile eta = entropies(apply_A(ch, s));
    const double log_d = std::log2(static_cast<double>(d));

    AchievabilityCheck out;
    out.map_holevo = holevo(encode_ensemble(s, ch, set));
    out.map_bound = log_d + eta.conditional_gap();
    out.rhs = log_d + eta.coherent_info();
    out.used_map = eta.conditional_gap() >= 0.0;
    out.lhs = out.used_map ? out.map_holevo : holevo(encode_ensemble(s, replace_channel(s.dA(), d), set));
    out.gap = out.lhs - out.rhs;
    return out;
}

double rate_per_qubit(const BipartiteState& s_after) {
    const EntropyProfile e = entropies(s_after);
    if (e.alice <= kSenderEntropyFloor) {
        throw DegenerateSenderEntropy("rate_per_qubit: sender entropy is zero");
    }
    return 1.0 + e.coherent_info() / e.alice;
}

VerifyPreset parse_verify_preset(const std::string& name) {
    if (name == "pure") return VerifyPreset::pure;
    if (name == "random-2x2") return VerifyPreset::random_2x2;
    if (name == "random-channel") return VerifyPreset::random_channel;
    throw DomainError("unknown verify preset '" + name + "'");
}

std::string to_string(VerifyPreset preset) {
    switch (preset) {
        case VerifyPreset::pure: return "pure";
        case VerifyPreset::random_2x2: return "random-2x2";
        case VerifyPreset::random_channel: return "random-channel";
    }
    return "?";
}

VerifyReport verify_corpus(VerifyPreset preset, int pairs, std::uint64_t seed, Execution exec) {
    if (pairs < 1) {
        throw DomainError("verify_corpus: need at least one pair");
    }
    VerifyReport report;
    report.preset = preset;
    report.seed = seed;
    report.records.resize(static_cast<std::size_t>(pairs));

    for_each_index(report.records.size(), exec, [&](std::size_t i) {
        const std::uint64_t task = task_seed(seed, i);
        const int variant = static_cast<int>(i % 4);
        KrausChannel ch = identity_channel(2);
        std::optional<BipartiteState> s;
        switch (preset) {
            case VerifyPreset::pure:
                s = random_pure_state(2, 2, task);
                ch = from_params(ChannelParams::random(2, 2, 1 + variant, derive_seed(task, 1)));
                break;
            case VerifyPreset::random_2x2:
                s = random_state_of_rank(2, 2, 1 + variant, task);
                break;
            case VerifyPreset::random_channel:
                s = random_state_of_rank(2, 2, 1 + variant, task);
                ch = from_params(ChannelParams::random(2, 2, 1 + (3 - variant), derive_seed(task, 1)));
                break;
        }
        report.records[i] = {task, verify_achievability(*s, ch)};
    });

    for (const auto& r : report.records) {
        report.max_gap = std::max(report.max_gap, std::abs(r.check.gap));
        report.max_map_gap = std::max(report.max_map_gap, std::abs(r.check.map_holevo - r.check.map_bound));
        report.map_used += r.check.used_map ? 1 : 0;
    }
    return report;
}

}  // namespace sdcap
