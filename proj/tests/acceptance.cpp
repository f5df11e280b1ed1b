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

// Runs each acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exit status is non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "oracles.hpp"
#include "sdcap/capacity.hpp"
#include "sdcap/cli.hpp"
#include "sdcap/criteria.hpp"
#include "sdcap/encoding.hpp"
#include "sdcap/measures.hpp"

using namespace sdcap;
using nlohmann::json;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void check(bool ok, const std::string& what) {
        if (!ok) pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what + (ok ? "" : " [failed]");
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct CliRun {
    int code;
    std::string out;
    double seconds;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const auto t0 = std::chrono::steady_clock::now();
    const int code = cli::run(args, out, err);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (code != 0) std::fprintf(stderr, "%s", err.str().c_str());
    return {code, out.str(), s};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Verdict pure_state_capacity() {
    Verdict v;
    for (const auto& [label, args] : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"singlet", {"capacity", "--state", "singlet", "--objective", "csd"}},
             {"maxent d=3", {"capacity", "--state", "maxent", "--d", "3", "--objective", "csd"}}}) {
        CliRun r = cli(args);
        const double best = r.code == 0 ? json::parse(r.out)["bestValue"].get<double>() : NAN;
        v.check(r.code == 0 && std::abs(best - 2.0) <= 1e-4, label + " bestValue " + num(best));
        v.check(r.seconds < 10.0, label + " " + num(r.seconds) + " s");
    }
    return v;
}

Verdict achievability() {
    Verdict v;
    CliRun r = cli({"verify", "--pairs", "200"});
    v.check(r.code == 0, "exit " + std::to_string(r.code));
    if (r.code == 0 || r.code == 4) {
        json j = json::parse(r.out);
        int pairs = 0;
        for (const auto& p : j["presets"]) pairs += p["pairs"].get<int>();
        v.check(pairs >= 200, std::to_string(pairs) + " pairs");
        v.check(j["maxGap"].get<double>() <= 1e-7, "max gap " + num(j["maxGap"].get<double>()));
    }
    v.check(r.seconds < 60.0, num(r.seconds) + " s");
    return v;
}

Verdict bell_baseline() {
    Verdict v;
    const double chi = holevo(encode_ensemble(singlet(), identity_channel(2), weyl_set(2)));
    v.check(std::abs(chi - 2.0) <= 1e-9, "holevo " + num(chi) + ", |chi - 2| = " + num(std::abs(chi - 2.0)));
    return v;
}

Verdict bound_entanglement() {
    Verdict v;
    CliRun r = cli({"capacity", "--state", "tiles", "--objective", "csd"});
    const double best = r.code == 0 ? json::parse(r.out)["bestValue"].get<double>() : NAN;
    v.check(r.code == 0 && best <= 1.0 + 1e-4, "bestValue " + num(best));
    v.check(r.seconds < 120.0, num(r.seconds) + " s");
    return v;
}

Verdict reduction_implies_zero_coherent_info() {
    Verdict v;
    for (int d : {2, 3}) {
        ReductionSurvey s = reduction_survey(d, d, 10000, 2026, Execution::parallel);
        v.check(s.max_coherent_info_when_holdsB <= 1e-9,
                std::to_string(d) + "x" + std::to_string(d) + ": " + std::to_string(s.holdsB) + "/" +
                    std::to_string(s.states) + " satisfy reduction, max I^B " + num(s.max_coherent_info_when_holdsB));
    }
    return v;
}

Verdict scrambling() {
    Verdict v;
    for (int d = 2; d <= 5; ++d) {
        const double res = scrambling_residual(weyl_set(d), gell_mann_basis(d));
        v.check(res <= 1e-8 * d * d, "d=" + std::to_string(d) + " residual " + num(res));
    }
    return v;
}

Verdict bennett() {
    Verdict v;
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = 0.9;
    a(1, 1) = 0.1;
    BennettResult b = bennett_example(a, singlet());
    const double h = oracle::binary_entropy(0.9);
    v.check(std::abs((b.after - b.before) - h) <= 1e-6,
            "gain " + num(b.after - b.before) + " vs H(0.9) " + num(h));
    return v;
}

Verdict sampling() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    StudyReport r = sampling_study(1000, default_study_budget(), 1, Execution::parallel, 1e-6);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.check(r.gain_count == 0, "gainCount " + std::to_string(r.gain_count) + ", max gain " + num(r.max_gain) +
                                   ", entangled trials " + std::to_string(r.entangled_trials));
    v.check(s < 1800.0, num(s) + " s");

    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = 0.9;
    a(1, 1) = 0.1;
    const BennettResult b = bennett_example(a, singlet());
    const GainSearch g = max_coherent_gain(b.composite, 2, 2, default_study_budget(), 1);
    v.check(g.gain > 1e-6, "positive control gain " + num(g.gain));
    return v;
}

Verdict determinism() {
    Verdict v;
    const auto dir = std::filesystem::temp_directory_path() / "sdcap_acceptance";
    std::filesystem::create_directories(dir);
    const std::vector<std::pair<std::string, std::vector<std::string>>> runs{
        {"measure", {"measure", "--state", "random", "--da", "3", "--db", "2", "--seed", "5"}},
        {"capacity", {"capacity", "--state", "werner", "--p", "0.8", "--restarts", "8", "--iters", "500", "--seed", "3"}},
        {"verify", {"verify", "--pairs", "50", "--seed", "4"}},
        {"sample", {"sample", "--trials", "16", "--restarts", "2", "--iters", "300", "--seed", "6"}},
        {"bennett", {"bennett", "--aprime", "0.7,0.2,0.1"}},
    };
    for (const auto& [name, base] : runs) {
        std::vector<std::string> contents;
        for (const char* exec : {"parallel", "parallel", "serial"}) {
            const std::string path = (dir / (name + "_" + std::to_string(contents.size()))).string();
            std::vector<std::string> args = base;
            args.insert(args.end(), {"--exec", exec, "--out", path});
            if (cli(args).code != 0) {
                v.check(false, name + " run failed");
                break;
            }
            contents.push_back(name == "sample" ? slurp(path + ".csv") + slurp(path + ".json") : slurp(path));
        }
        if (contents.size() == 3) {
            v.check(!contents[0].empty() && contents[0] == contents[1] && contents[0] == contents[2],
                    name + " identical across reruns and workers");
        }
    }
    std::filesystem::remove_all(dir);
    return v;
}

Verdict werner_oracle() {
    Verdict v;
    double worst = 0.0;
    for (double p : {0.0, 0.25, 0.5, 0.75, 0.9, 1.0}) {
        const auto w = oracle::werner_measures(p);
        const BipartiteState s = werner_like(p);
        const EntropyProfile e = entropies(s);
        worst = std::max({worst, std::abs(e.joint - w.S), std::abs(coherent_info(s) - w.IB),
                          std::abs(mutual_info(s) - w.IM), std::abs(i_sd(s) - w.Isd)});
    }
    v.check(worst <= 1e-9, "max deviation " + num(worst));
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"pure-state capacity", pure_state_capacity},
        {"achievability equality", achievability},
        {"superdense coding baseline", bell_baseline},
        {"bound entanglement is useless", bound_entanglement},
        {"reduction implies zero coherent information", reduction_implies_zero_coherent_info},
        {"scrambling property", scrambling},
        {"discarding a mixed local system", bennett},
        {"sampling study", sampling},
        {"determinism", determinism},
        {"measure stack oracle", werner_oracle},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.check(false, std::string("threw: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2zu %s: %s (%s; %.1f s)\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first,
                    v.detail.c_str(), s);
        std::fflush(stdout);
        failures += v.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
