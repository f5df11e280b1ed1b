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

#include "sdcap/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "sdcap/capacity.hpp"
#include "sdcap/criteria.hpp"
#include "sdcap/encoding.hpp"
#include "sdcap/errors.hpp"
#include "sdcap/io.hpp"
#include "sdcap/measures.hpp"
#include "sdcap/states.hpp"

namespace sdcap::cli {

namespace {

using nlohmann::json;

struct StateOptions {
    std::string name = "singlet";
    std::string file;
    int d = 0;
    int dA = 2;
    int dB = 2;
    double p = 0.9;
    int rank = 0;
};

struct RunConfig {
    StateOptions state;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "json";
    std::string exec = "parallel";
    int threads = 0;

    std::string objective = "csd";
    int n = 1;
    int max_n = 0;
    int dOut = 0;
    int env = 0;
    OptBudget budget;

    std::string preset = "all";
    int pairs = 200;
    double gap_tolerance = 1e-7;

    int trials = 1000;
    OptBudget study_budget = default_study_budget();
    double gain_tolerance = 1e-6;

    std::vector<double> aprime{0.9, 0.1};
};

void add_state_options(CLI::App* cmd, StateOptions& s) {
    cmd->add_option("--state", s.name,
                    "Named state: singlet, maxent (--d), werner (--p), mixed (--d total or --da/--db), tiles, "
                    "random (--da/--db/--rank/--seed), or file:PATH")
        ->capture_default_str();
    cmd->add_option("--state-file", s.file, "State JSON file {\"dA\",\"dB\",\"rho\"}");
    cmd->add_option("--d", s.d, "Local dimension for maxent; total dimension for mixed");
    cmd->add_option("--da", s.dA, "Alice dimension for random/mixed")->capture_default_str();
    cmd->add_option("--db", s.dB, "Bob dimension for random/mixed")->capture_default_str();
    cmd->add_option("--p", s.p, "Singlet weight for werner")->capture_default_str();
    cmd->add_option("--rank", s.rank, "Rank for random (0 = full)");
}

void add_common(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--seed", c.seed, "Base seed of every stochastic step")->capture_default_str();
    cmd->add_option("--out", c.out, "Output path (sample: base path for .csv and .json)");
    cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    cmd->add_option("--exec", c.exec, "serial or parallel")
        ->check(CLI::IsMember({"serial", "parallel"}))
        ->capture_default_str();
    cmd->add_option("--threads", c.threads, "OpenMP threads (0 = runtime default)");
}

void add_budget(CLI::App* cmd, OptBudget& b) {
    cmd->add_option("--restarts", b.restarts, "Optimizer restarts per output dimension")->capture_default_str();
    cmd->add_option("--iters", b.iterations, "Nelder-Mead iterations per restart")->capture_default_str();
    cmd->add_option("--tol", b.tolerance, "Simplex convergence tolerance")->capture_default_str();
    cmd->add_option("--step", b.initial_step, "Initial simplex edge in radians")->capture_default_str();
}

BipartiteState build_state(const RunConfig& c) {
    const StateOptions& s = c.state;
    if (!s.file.empty()) {
        return read_state_file(s.file);
    }
    if (s.name.rfind("file:", 0) == 0) {
        return read_state_file(s.name.substr(5));
    }
    if (s.name == "singlet") return singlet();
    if (s.name == "maxent") return max_entangled(s.d > 0 ? s.d : 2);
    if (s.name == "werner") return werner_like(s.p);
    if (s.name == "tiles") return tiles_bound_entangled();
    if (s.name == "mixed") {
        if (s.d > 0) {
            const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(s.d))));
            if (root * root != s.d) {
                throw DomainError("mixed: --d " + std::to_string(s.d) + " is not a square; use --da/--db");
            }
            return maximally_mixed(root, root);
        }
        return maximally_mixed(s.dA, s.dB);
    }
    if (s.name == "random") {
        return random_state_of_rank(s.dA, s.dB, s.rank > 0 ? s.rank : s.dA * s.dB, c.seed);
    }
    throw DomainError("unknown state '" + s.name + "'");
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
        throw FormatError("cannot write " + c.out);
    }
    f << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw FormatError("cannot write " + path);
    }
    f << text;
}

int cmd_measure(const RunConfig& c, std::ostream& out) {
    const BipartiteState s = build_state(c);
    s.validate();
    const EntropyProfile e = entropies(s);
    const ReductionResult red = reduction_criterion(s);
    json j;
    j["dA"] = s.dA();
    j["dB"] = s.dB();
    j["S"] = e.joint;
    j["S_A"] = e.alice;
    j["S_B"] = e.bob;
    j["I_B"] = e.coherent_info();
    j["I_M"] = e.mutual_info();
    j["I_sd"] = e.alice > kSenderEntropyFloor ? json(i_sd(e)) : json(nullptr);
    j["isPPT"] = is_ppt(s);
    j["reductionA"] = red.holdsA;
    j["reductionB"] = red.holdsB;
    emit(c, j.dump(2) + "\n", out);
    return kOk;
}

int cmd_capacity(const RunConfig& c, std::ostream& out) {
    const BipartiteState s = build_state(c);
    s.validate();
    const Objective objective = parse_objective(c.objective);
    const Execution exec = parse_execution(c.exec);
    std::optional<int> dOut = c.dOut > 0 ? std::optional<int>(c.dOut) : std::nullopt;
    std::optional<int> env = c.env > 0 ? std::optional<int>(c.env) : std::nullopt;

    if (c.max_n > 0) {
        const std::vector<CapacityReport> reports = optimize_over_n(s, objective, c.max_n, dOut, c.budget, c.seed, exec, env);
        std::size_t best = 0;
        for (std::size_t i = 1; i < reports.size(); ++i) {
            if (reports[i].best_value > reports[best].best_value) best = i;
        }
        if (c.format == "csv") {
            std::string text = "n,bestValue\n";
            for (const auto& r : reports) text += std::to_string(r.n) + "," + format_double(r.best_value) + "\n";
            emit(c, text, out);
        } else {
            json j;
            j["objective"] = c.objective;
            j["bestN"] = reports[best].n;
            j["bestValue"] = reports[best].best_value;
            j["perN"] = json::array();
            for (const auto& r : reports) j["perN"].push_back(to_json(r));
            emit(c, j.dump(2) + "\n", out);
        }
        return kOk;
    }

    const CapacityReport report = optimize(s, objective, c.n, dOut, c.budget, c.seed, exec, env);
    emit(c, c.format == "csv" ? history_csv(report) : to_json(report).dump(2) + "\n", out);
    return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    std::vector<VerifyPreset> presets;
    if (c.preset == "all") {
        presets = {VerifyPreset::pure, VerifyPreset::random_2x2, VerifyPreset::random_channel};
    } else {
        presets = {parse_verify_preset(c.preset)};
    }
    const Execution exec = parse_execution(c.exec);
    double max_gap = 0.0;
    json j;
    j["gapTolerance"] = c.gap_tolerance;
    j["presets"] = json::array();
    std::string csv;
    for (auto preset : presets) {
        VerifyReport r = verify_corpus(preset, c.pairs, c.seed, exec);
        max_gap = std::max(max_gap, r.max_gap);
        j["presets"].push_back(to_json(r, false));
        std::string body = verify_csv(r);
        if (csv.empty()) {
            csv = "preset," + body.substr(0, body.find('\n') + 1);
        }
        std::istringstream lines(body.substr(body.find('\n') + 1));
        for (std::string line; std::getline(lines, line);) {
            csv += to_string(preset) + "," + line + "\n";
        }
    }
    j["maxGap"] = max_gap;
    const bool ok = max_gap <= c.gap_tolerance;
    j["pass"] = ok;
    emit(c, c.format == "csv" ? csv : j.dump(2) + "\n", out);
    if (!ok) {
        err << "verify: max gap " << max_gap << " exceeds " << c.gap_tolerance << "\n";
        return kVerificationFailed;
    }
    return kOk;
}

int cmd_sample(const RunConfig& c, std::ostream& out) {
    const StudyReport r =
        sampling_study(c.trials, c.study_budget, c.seed, parse_execution(c.exec), c.gain_tolerance);
    const std::string summary = to_json(r, false).dump(2) + "\n";
    const std::string csv = study_csv(r);
    if (!c.out.empty()) {
        write_file(c.out + ".csv", csv);
        write_file(c.out + ".json", summary);
        return kOk;
    }
    out << (c.format == "csv" ? csv : summary);
    return kOk;
}

int cmd_bennett(const RunConfig& c, std::ostream& out) {
    ComplexMatrix rhoAp = ComplexMatrix::Zero(static_cast<Eigen::Index>(c.aprime.size()),
                                              static_cast<Eigen::Index>(c.aprime.size()));
    double total = 0.0;
    for (std::size_t i = 0; i < c.aprime.size(); ++i) {
        if (c.aprime[i] < 0.0) {
            throw DomainError("bennett: --aprime entries must be non-negative");
        }
        rhoAp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = c.aprime[i];
        total += c.aprime[i];
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw DomainError("bennett: --aprime must sum to 1");
    }
    const BipartiteState base = build_state(c);
    base.validate();
    const BennettResult r = bennett_example(rhoAp, base);
    json j;
    j["before"] = r.before;
    j["after"] = r.after;
    j["gain"] = r.after - r.before;
    j["senderEntropy"] = r.sender_entropy;
    j["compositeDA"] = r.composite.dA();
    j["compositeDB"] = r.composite.dB();
    emit(c, j.dump(2) + "\n", out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Capacity of a noiseless quantum channel assisted by noisy entanglement", "sdcap"};
    app.require_subcommand(1);

    auto* measure = app.add_subcommand("measure", "Entropies, I^B, I_M, I_sd and entanglement criteria of a state");
    add_state_options(measure, c.state);
    add_common(measure, c);

    auto* capacity = app.add_subcommand("capacity", "Optimize the capacity over Alice's local maps");
    add_state_options(capacity, c.state);
    add_common(capacity, c);
    add_budget(capacity, c.budget);
    capacity->add_option("--objective", c.objective, "cd or csd")
        ->check(CLI::IsMember({"cd", "csd"}))
        ->capture_default_str();
    capacity->add_option("--n", c.n, "Number of copies of the state")->capture_default_str();
    capacity->add_option("--nmax", c.max_n, "Sweep n = 1..nmax instead of a single n");
    capacity->add_option("--dout", c.dOut, "Output dimension of Alice's map (0 = search; cd defaults to dA^n)");
    capacity->add_option("--env", c.env, "Environment dimension of the Stinespring isometry (0 = dIn*dOut)");

    auto* verify = app.add_subcommand("verify", "Check Holevo(encoding) = log2 d + I^B over a seeded corpus");
    add_common(verify, c);
    verify->add_option("--preset", c.preset, "pure, random-2x2, random-channel or all")
        ->check(CLI::IsMember({"pure", "random-2x2", "random-channel", "all"}))
        ->capture_default_str();
    verify->add_option("--pairs", c.pairs, "Pairs per preset")->capture_default_str();
    verify->add_option("--gap-tol", c.gap_tolerance, "Largest accepted |gap|")->capture_default_str();

    auto* sample = app.add_subcommand("sample", "Random two-qubit states vs extremal local qubit maps");
    add_common(sample, c);
    add_budget(sample, c.study_budget);
    sample->add_option("--trials", c.trials, "Number of sampled states")->capture_default_str();
    sample->add_option("--gain-tol", c.gain_tolerance, "Gain counted as an increase above this")
        ->capture_default_str();

    auto* bennett = app.add_subcommand("bennett", "Discarding a mixed local system raises I^B");
    add_state_options(bennett, c.state);
    add_common(bennett, c);
    bennett->add_option("--aprime", c.aprime, "Diagonal of rho_A'")->delimiter(',')->capture_default_str();

    std::vector<const char*> argv{"sdcap"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    if (c.threads > 0) {
        omp_set_num_threads(c.threads);
    }
    try {
        if (*measure) return cmd_measure(c, out);
        if (*capacity) return cmd_capacity(c, out);
        if (*verify) return cmd_verify(c, out, err);
        if (*sample) return cmd_sample(c, out);
        if (*bennett) return cmd_bennett(c, out);
    } catch (const FormatError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const DimensionError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        err << "numeric error: " << e.what() << "\n";
        return kNumericError;
    }
    return kInputError;
}

}  // namespace sdcap::cli
