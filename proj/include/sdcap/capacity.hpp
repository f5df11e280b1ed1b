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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdcap/channels.hpp"
#include "sdcap/measures.hpp"
#include "sdcap/parallel.hpp"
#include "sdcap/states.hpp"

namespace sdcap {

/// Which capacity expression is maximized over Alice's map.
///   cd:  log2 d + I^B((Lambda (x) id)(rho^(x)n)), bits per use of a d-dimensional channel
///   csd: I_M / S(eta_A) of the post-map state, bits per transmitted qubit
enum class Objective { cd, csd };

Objective parse_objective(const std::string& name);
std::string to_string(Objective objective);

struct OptBudget {
    int restarts = 32;
    int iterations = 2000;
    double tolerance = 1e-9;
    double initial_step = 0.4;
};

/// log2(dOut) + I^B(apply_A(from_params(p), s_n)).
double objective_cd(const BipartiteState& s_n, const ChannelParams& p);

/// i_sd(apply_A(from_params(p), s_n)), or 1.0 when the post-map sender
/// entropy is at most 1e-9. Not clamped; see CapacityReport::best_value.
double objective_csd(const BipartiteState& s_n, const ChannelParams& p);

double evaluate(Objective objective, const BipartiteState& s_n, const ChannelParams& p);

/// Search surrogate with the same maximizers as the reported objective.
/// For cd the clamp in I^B is dropped so the landscape has slope where
/// S(rho_B) < S(eta).
double search_value(Objective objective, const BipartiteState& s_n, const ChannelParams& p);

/// Entropies of eta = (Lambda (x) id)(rho) for many maps on one state.
///
/// rho = L L^dagger is factored once; with Y the rows of (V (x) I_B) L
/// regrouped by environment index, eta = Y Y^dagger, so S(eta) comes from
/// the smaller of Y Y^dagger and Y^dagger Y. eta_A = Lambda(rho_A) and
/// S(rho_B) is fixed. Agrees with entropies(apply_A(from_params(p), s)).
class PostMapEvaluator {
public:
    explicit PostMapEvaluator(const BipartiteState& s);

    EntropyProfile operator()(const ChannelParams& p) const;

    const BipartiteState& state() const { return state_; }

private:
    BipartiteState state_;
    ComplexMatrix factor_;  // dA dB x rank
    ComplexMatrix alice_;   // rho_A
    double bob_entropy_ = 0.0;
};

struct OutputSummary {
    int dOut = 0;
    int envDim = 0;
    double best_value = 0.0;
    int best_restart = 0;
};

struct CapacityReport {
    Objective objective = Objective::csd;
    int n = 1;
    std::optional<int> requested_dOut;  // empty: searched over 1 .. dA^n
    double best_value = 0.0;  // cd: objective_cd at the witness; csd: max(objective_csd, 1)
    double raw_value = 0.0;   // objective at the witness, unclamped
    ChannelParams best_params;
    int best_restart = 0;
    int restarts = 0;
    int iterations = 0;
    long long evaluations = 0;
    std::vector<std::pair<int, double>> history;  // best-so-far of best_value
    std::vector<OutputSummary> outputs;
    std::uint64_t seed = 0;
};

/// Multi-start Nelder-Mead over Stinespring coordinates of Alice's map on
/// rho^(x)n. Restart 0 of every output dimension starts at zero angles,
/// which is the identity map when dOut = dA^n; the rest start at
/// uniformly random angles seeded with task_seed(seed, task). Tasks are
/// independent and merged in index order, ties going to the lower index.
///
/// envDim defaults to dIn * dOut. Only the searched n is covered; the
/// result is a lower bound on the supremum over n and over maps.
CapacityReport optimize(const BipartiteState& s, Objective objective, int n, std::optional<int> dOut,
                        const OptBudget& budget, std::uint64_t seed, Execution exec = Execution::parallel,
                        std::optional<int> envDim = std::nullopt);

/// optimize for n = 1 .. max_n with seeds derive_seed(seed, n); one report per n.
std::vector<CapacityReport> optimize_over_n(const BipartiteState& s, Objective objective, int max_n,
                                            std::optional<int> dOut, const OptBudget& budget, std::uint64_t seed,
                                            Execution exec = Execution::parallel,
                                            std::optional<int> envDim = std::nullopt);

/// Appending a mixed local system A' to Alice's side lowers I^B by S(rho_A')
/// once the composite is still positive, and discarding A' recovers it.
struct BennettResult {
    double before = 0.0;          // I^B(rho_A' (x) base), Alice = A'A''
    double after = 0.0;           // I^B(base)
    double sender_entropy = 0.0;  // S(rho_A')
    BipartiteState composite;
};

BennettResult bennett_example(const ComplexMatrix& rhoAprime, const BipartiteState& base);

/// Largest coherent information Alice can reach with local maps of a fixed
/// shape, starting from the zero-angle map and random restarts.
struct GainSearch {
    double before = 0.0;      // I^B(s)
    double best_after = 0.0;  // max(best S(rho_B) - S(eta), 0)
    double best_raw = 0.0;    // best S(rho_B) - S(eta) found
    double gain = 0.0;        // best_after - before
    ChannelParams best_params;
};

GainSearch max_coherent_gain(const BipartiteState& s, int dOut, int envDim, const OptBudget& budget,
                             std::uint64_t seed);

struct StudyRecord {
    std::uint64_t seed = 0;  // with rank, replays both the state and the restarts
    int rank = 4;
    double before = 0.0;
    double best_after = 0.0;
    double gain = 0.0;
};

struct StudyReport {
    int trials = 0;
    std::uint64_t seed = 0;
    OptBudget budget;
    double gain_tolerance = 1e-6;
    std::vector<StudyRecord> records;
    int gain_count = 0;  // records with gain > gain_tolerance
    double max_gain = 0.0;
    int entangled_trials = 0;  // records with I^B(rho) > 0
};

/// Default budget of the two-qubit study: 8 restarts of 1500 iterations.
OptBudget default_study_budget();

/// Trial i draws a Hilbert-Schmidt two-qubit state of rank 1 + (i mod 4)
/// from task_seed(seed, i) and searches qubit maps with two Kraus operators.
StudyRecord study_trial(std::uint64_t trial_seed, int rank, const OptBudget& budget);

StudyReport sampling_study(int trials, const OptBudget& budget, std::uint64_t seed,
                           Execution exec = Execution::parallel, double gain_tolerance = 1e-6);

}  // namespace sdcap
