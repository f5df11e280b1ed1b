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
#include <string>
#include <vector>

#include "sdcap/channels.hpp"
#include "sdcap/matrix.hpp"
#include "sdcap/measures.hpp"
#include "sdcap/parallel.hpp"
#include "sdcap/states.hpp"

namespace sdcap {

/// d^2 unitaries whose uniform conjugation sends every traceless matrix to 0.
struct ScramblingSet {
    int d = 0;
    std::vector<ComplexMatrix> unitaries;
};

/// Shift-and-clock operators X^a Z^b, X|k> = |k+1 mod d>, Z|k> = w^k |k>.
/// Index of X^a Z^b is a * d + b. Throws DomainError for d < 2.
ScramblingSet weyl_set(int d);

/// d^2 - 1 generalized Gell-Mann matrices: symmetric, antisymmetric, diagonal.
std::vector<ComplexMatrix> gell_mann_basis(int d);

/// max over the test matrices M of max|sum_i U_i M U_i^dagger|.
double scrambling_residual(const ScramblingSet& set, const std::vector<ComplexMatrix>& traceless);

/// {(d^-2, (U_i Lambda (x) id)(rho))}. Requires ch.dOut == set.d and ch.dIn == s.dA.
Ensemble encode_ensemble(const BipartiteState& s, const KrausChannel& ch, const ScramblingSet& set);

/// Equality check between the Holevo information of the constructed
/// encoding and the one-shot capacity expression log2 d + I^B((Lambda (x) id) rho).
///
/// The ensemble uses Lambda when S(rho_B) >= S(eta); otherwise it uses the
/// classical-signalling map (discard, prepare |0>), which is what attains
/// the clamp in I^B. Both raw quantities are also reported.
struct AchievabilityCheck {
    double lhs = 0.0;  // holevo of the achieving ensemble
    double rhs = 0.0;  // log2 d + I^B(eta)
    double gap = 0.0;  // lhs - rhs
    bool used_map = true;
    double map_holevo = 0.0;  // holevo(encode_ensemble(s, ch)), for every input
    double map_bound = 0.0;   // log2 d + S(rho_B) - S(eta), equal to map_holevo
};

AchievabilityCheck verify_achievability(const BipartiteState& s, const KrausChannel& ch);

/// 1 + I^B / S(rho_A): rate per transmitted qubit once Alice's share is
/// compressed to S(rho_A) qubits. Throws DegenerateSenderEntropy.
double rate_per_qubit(const BipartiteState& s_after);

/// Seeded (state, channel) corpora for the achievability check.
enum class VerifyPreset {
    pure,            // Haar pure 2x2 states, random 2->2 channels
    random_2x2,      // random 2x2 states of every rank, identity channel
    random_channel,  // Hilbert-Schmidt 2x2 states, random 2->2 channels
};

VerifyPreset parse_verify_preset(const std::string& name);
std::string to_string(VerifyPreset preset);

struct VerifyRecord {
    std::uint64_t seed = 0;
    AchievabilityCheck check;
};

struct VerifyReport {
    VerifyPreset preset = VerifyPreset::random_channel;
    std::uint64_t seed = 0;
    std::vector<VerifyRecord> records;
    double max_gap = 0.0;      // max |gap|
    double max_map_gap = 0.0;  // max |map_holevo - map_bound|
    int map_used = 0;          // records where I^B(eta) > 0 selected Lambda itself
};

/// Pair i uses seed task_seed(seed, i) for the state and the channel.
VerifyReport verify_corpus(VerifyPreset preset, int pairs, std::uint64_t seed, Execution exec = Execution::parallel);

}  // namespace sdcap
