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

#include "sdcap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sdcap/errors.hpp"
#include "sdcap/measures.hpp"
#include "sdcap/nelder_mead.hpp"
#include "sdcap/random.hpp"

namespace sdcap {

Objective parse_objective(const std::string& name) {
    if (name == "cd") return Objective::cd;
    if (name == "csd") return Objective::csd;
    throw DomainError("unknown objective '" + name + "' (expected cd or csd)");
}

std::string to_string(Objective objective) { return objective == Objective::cd ? "cd" : "csd"; }

namespace {

EntropyProfile post_map(const BipartiteState& s_n, const ChannelParams& p) {
    return entropies(apply_A(from_params(p), s_n));
}

double floor_of(Objective objective, int dOut) {
    return objective == Objective::cd ? std::log2(static_cast<double>(dOut)) : 1.0;
}

NelderMeadOptions nm_options(const OptBudget& budget) {
    return {budget.iterations, budget.tolerance, budget.initial_step};
}

double search_value(Objective objective, int dOut, const EntropyProfile& e) {
    if (objective == Objective::csd) {
        return e.alice <= kSenderEntropyFloor ? 1.0 : i_sd(e);
    }
    return std::log2(static_cast<double>(dOut)) + e.conditional_gap();
}

}  // namespace

PostMapEvaluator::PostMapEvaluator(const BipartiteState& s)
    : state_(s), alice_(s.reduced(Side::A)), bob_entropy_(entropy(s.reduced(Side::B))) {
    const EigenSystem eig = hermitian_eigen(s.rho());
    int rank = 0;
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        if (eig.values(i) > 0.0) ++rank;
    }
    factor_.resize(s.dim(), rank);
    int col = 0;
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        if (eig.values(i) > 0.0) {
            factor_.col(col++) = eig.vectors.col(i) * std::sqrt(eig.values(i));
        }
    }
}

EntropyProfile PostMapEvaluator::operator()(const ChannelParams& p) const {
    if (p.dIn != state_.dA()) {
        throw DimensionError("PostMapEvaluator: map input does not match Alice's dimension");
    }
    const ComplexMatrix v = isometry_from_params(p);
    const int dB = state_.dB();
    const int r = static_cast<int>(factor_.cols());
    const int env = p.envDim;

    ComplexMatrix y = ComplexMatrix::Zero(p.dOut * dB, env * r);
    for (int o = 0; o < p.dOut; ++o) {
        for (int e = 0; e < env; ++e) {
            auto block = y.block(o * dB, e * r, dB, r);
            for (int a = 0; a < p.dIn; ++a) {
                const Complex w = v(o * env + e, a);
                if (w != Complex(0.0, 0.0)) {
                    block.noalias() += w * factor_.middleRows(a * dB, dB);
                }
            }
        }
    }
    const ComplexMatrix gram = y.rows() <= y.cols() ? ComplexMatrix(y * y.adjoint()) : ComplexMatrix(y.adjoint() * y);

    const ComplexMatrix stretched = v * alice_ * v.adjoint();
    ComplexMatrix eta_a = ComplexMatrix::Zero(p.dOut, p.dOut);
    for (int o = 0; o < p.dOut; ++o) {
        for (int q = 0; q < p.dOut; ++q) {
            for (int e = 0; e < env; ++e) {
                eta_a(o, q) += stretched(o * env + e, q * env + e);
            }
        }
    }
    return {entropy(gram), entropy(eta_a), bob_entropy_};
}

double objective_cd(const BipartiteState& s_n, const ChannelParams& p) {
    return std::log2(static_cast<double>(p.dOut)) + post_map(s_n, p).coherent_info();
}

double objective_csd(const BipartiteState& s_n, const ChannelParams& p) {
    const EntropyProfile e = post_map(s_n, p);
    if (e.alice <= kSenderEntropyFloor) {
        return 1.0;
    }
    return i_sd(e);
}

double evaluate(Objective objective, const BipartiteState& s_n, const ChannelParams& p) {
    return objective == Objective::cd ? objective_cd(s_n, p) : objective_csd(s_n, p);
}

double search_value(Objective objective, const BipartiteState& s_n, const ChannelParams& p) {
    if (objective == Objective::csd) {
        return objective_csd(s_n, p);
    }
    return std::log2(static_cast<double>(p.dOut)) + post_map(s_n, p).conditional_gap();
}

CapacityReport optimize(const BipartiteState& s, Objective objective, int n, std::optional<int> dOut,
                        const OptBudget& budget, std::uint64_t seed, Execution exec, std::optional<int> envDim) {
    if (budget.restarts < 1 || budget.iterations < 0) {
        throw DomainError("optimize: budget needs at least one restart");
    }
    const BipartiteState s_n = power(s, n);
    const PostMapEvaluator evaluator(s_n);
    const int dIn = s_n.dA();

    std::vector<int> outputs;
    if (dOut) {
        if (*dOut < 1) {
            throw DomainError("optimize: output dimension must be positive");
        }
        outputs.push_back(*dOut);
    } else if (objective == Objective::cd) {
        outputs.push_back(dIn);
    } else {
        for (int d = 1; d <= dIn; ++d) outputs.push_back(d);
    }

    struct Task {
        int output = 0;  // index into outputs
        int restart = 0;
        ChannelParams start;
        NelderMeadResult result;
    };
    std::vector<Task> tasks;
    for (std::size_t o = 0; o < outputs.size(); ++o) {
        const int d = outputs[o];
        const int env = envDim ? *envDim : dIn * d;
        ChannelParams::arity(dIn, d, env);  // throws on impossible shapes
        // A one-dimensional output carries no sender entropy; every map is the same.
        const int count = d == 1 ? 1 : budget.restarts;
        for (int r = 0; r < count; ++r) {
            const std::uint64_t task = task_seed(seed, tasks.size());
            ChannelParams start = r == 0 ? ChannelParams::zeros(dIn, d, env) : ChannelParams::random(dIn, d, env, task);
            tasks.push_back({static_cast<int>(o), r, std::move(start), {}});
        }
    }

    for_each_index(tasks.size(), exec, [&](std::size_t t) {
        Task& task = tasks[t];
        ChannelParams probe = task.start;
        auto f = [&](const RealVector& x) {
            probe.angles = x;
            return search_value(objective, probe.dOut, evaluator(probe));
        };
        NelderMeadOptions opts = nm_options(budget);
        if (outputs[task.output] == 1) {
            opts.max_iterations = 0;
        }
        task.result = nelder_mead_maximize(f, task.start.angles, opts);
    });

    CapacityReport report;
    report.objective = objective;
    report.n = n;
    report.requested_dOut = dOut;
    report.seed = seed;
    report.restarts = static_cast<int>(tasks.size());

    std::size_t best = 0;
    double history_best = -INFINITY;
    int offset = 0;
    report.outputs.resize(outputs.size());
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        const Task& task = tasks[t];
        const double floor = floor_of(objective, outputs[task.output]);
        for (const auto& [it, v] : task.result.history) {
            const double reported = std::max(v, floor);
            if (reported > history_best) {
                history_best = reported;
                report.history.emplace_back(offset + it, reported);
            }
        }
        offset += task.result.iterations + 1;
        report.iterations += task.result.iterations;
        report.evaluations += task.result.evaluations;

        OutputSummary& summary = report.outputs[task.output];
        if (task.restart == 0 || task.result.value > summary.best_value) {
            summary = {outputs[task.output], task.start.envDim, task.result.value, task.restart};
        }
        if (task.result.value > tasks[best].result.value) {
            best = t;
        }
    }
    for (auto& summary : report.outputs) {
        summary.best_value = std::max(summary.best_value, floor_of(objective, summary.dOut));
    }

    report.best_params = tasks[best].start;
    report.best_params.angles = tasks[best].result.best;
    report.best_restart = tasks[best].restart;
    report.raw_value = evaluate(objective, s_n, report.best_params);
    report.best_value = objective == Objective::csd ? std::max(report.raw_value, 1.0) : report.raw_value;
    return report;
}

std::vector<CapacityReport> optimize_over_n(const BipartiteState& s, Objective objective, int max_n,
                                            std::optional<int> dOut, const OptBudget& budget, std::uint64_t seed,
                                            Execution exec, std::optional<int> envDim) {
    if (max_n < 1) {
        throw DomainError("optimize_over_n: max_n must be at least 1");
    }
    std::vector<CapacityReport> reports;
    for (int n = 1; n <= max_n; ++n) {
        reports.push_back(optimize(s, objective, n, dOut, budget, derive_seed(seed, n), exec, envDim));
    }
    return reports;
}

BennettResult bennett_example(const ComplexMatrix& rhoAprime, const BipartiteState& base) {
    const int dAp = static_cast<int>(rhoAprime.rows());
    BipartiteState composite(dAp * base.dA(), base.dB(), tensor(rhoAprime, base.rho()));
    return {coherent_info(composite), coherent_info(base), entropy(rhoAprime), std::move(composite)};
}

GainSearch max_coherent_gain(const BipartiteState& s, int dOut, int envDim, const OptBudget& budget,
                             std::uint64_t seed) {
    GainSearch out;
    out.before = coherent_info(s);
    out.best_raw = -INFINITY;
    const PostMapEvaluator evaluator(s);
    ChannelParams probe = ChannelParams::zeros(s.dA(), dOut, envDim);
    auto f = [&](const RealVector& x) {
        probe.angles = x;
        return evaluator(probe).conditional_gap();
    };
    for (int r = 0; r < budget.restarts; ++r) {
        ChannelParams start = r == 0 ? ChannelParams::zeros(s.dA(), dOut, envDim)
                                     : ChannelParams::random(s.dA(), dOut, envDim, derive_seed(seed, r));
        NelderMeadResult res = nelder_mead_maximize(f, start.angles, nm_options(budget));
        if (res.value > out.best_raw) {
            out.best_raw = res.value;
            out.best_params = start;
            out.best_params.angles = res.best;
        }
    }
    out.best_after = std::max(out.best_raw, 0.0);
    out.gain = out.best_after - out.before;
    return out;
}

OptBudget default_study_budget() {
    OptBudget b;
    b.restarts = 8;
    b.iterations = 1500;
    return b;
}

StudyRecord study_trial(std::uint64_t trial_seed, int rank, const OptBudget& budget) {
    const BipartiteState s = random_state_of_rank(2, 2, rank, trial_seed);
    const GainSearch g = max_coherent_gain(s, 2, 2, budget, derive_seed(trial_seed, 0));
    return {trial_seed, rank, g.before, g.best_after, g.gain};
}

StudyReport sampling_study(int trials, const OptBudget& budget, std::uint64_t seed, Execution exec,
                           double gain_tolerance) {
    if (trials < 0) {
        throw DomainError("sampling_study: negative trial count");
    }
    StudyReport report;
    report.trials = trials;
    report.seed = seed;
    report.budget = budget;
    report.gain_tolerance = gain_tolerance;
    report.records.resize(static_cast<std::size_t>(trials));
    for_each_index(report.records.size(), exec, [&](std::size_t i) {
        report.records[i] = study_trial(task_seed(seed, i), 1 + static_cast<int>(i % 4), budget);
    });
    for (const auto& r : report.records) {
        if (r.gain > gain_tolerance) ++report.gain_count;
        if (r.before > 0.0) ++report.entangled_trials;
        report.max_gain = std::max(report.max_gain, r.gain);
    }
    return report;
}

}  // namespace sdcap
