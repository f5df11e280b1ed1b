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

// Serial reference vs OpenMP kernels. Both paths produce identical results;
// these benchmarks only compare wall time.

#include <benchmark/benchmark.h>

#include "sdcap/capacity.hpp"
#include "sdcap/criteria.hpp"
#include "sdcap/encoding.hpp"

namespace {

sdcap::Execution mode(const benchmark::State& state) {
    return state.range(0) ? sdcap::Execution::parallel : sdcap::Execution::serial;
}

void BM_SamplingStudy(benchmark::State& state) {
    sdcap::OptBudget budget = sdcap::default_study_budget();
    budget.restarts = 2;
    budget.iterations = 300;
    for (auto _ : state) {
        auto r = sdcap::sampling_study(16, budget, 7, mode(state));
        benchmark::DoNotOptimize(r.max_gain);
    }
}
BENCHMARK(BM_SamplingStudy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyCorpus(benchmark::State& state) {
    for (auto _ : state) {
        auto r = sdcap::verify_corpus(sdcap::VerifyPreset::random_channel, 200, 1, mode(state));
        benchmark::DoNotOptimize(r.max_gap);
    }
}
BENCHMARK(BM_VerifyCorpus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ReductionSurvey(benchmark::State& state) {
    for (auto _ : state) {
        auto r = sdcap::reduction_survey(3, 3, 500, 1, mode(state));
        benchmark::DoNotOptimize(r.holdsB);
    }
}
BENCHMARK(BM_ReductionSurvey)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OptimizeRestarts(benchmark::State& state) {
    sdcap::OptBudget budget;
    budget.restarts = 8;
    budget.iterations = 300;
    const auto s = sdcap::werner_like(0.9);
    for (auto _ : state) {
        auto r = sdcap::optimize(s, sdcap::Objective::csd, 1, std::nullopt, budget, 3, mode(state));
        benchmark::DoNotOptimize(r.best_value);
    }
}
BENCHMARK(BM_OptimizeRestarts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
