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

#include "sdcap/criteria.hpp"

#include <algorithm>
#include <vector>

#include "sdcap/measures.hpp"
#include "sdcap/random.hpp"

namespace sdcap {

bool is_ppt_side(const BipartiteState& s, Side side) {
    return hermitian_eigenvalues(partial_transpose(s.rho(), s.dA(), s.dB(), side))(0) >= -kPsdTolerance;
}

bool is_ppt(const BipartiteState& s) { return is_ppt_side(s, Side::B); }

ReductionResult reduction_criterion(const BipartiteState& s) {
    ReductionResult r;
    r.minA = hermitian_eigenvalues(tensor(s.reduced(Side::A), identity(s.dB())) - s.rho())(0);
    r.minB = hermitian_eigenvalues(tensor(identity(s.dA()), s.reduced(Side::B)) - s.rho())(0);
    r.holdsA = r.minA >= -kPsdTolerance;
    r.holdsB = r.minB >= -kPsdTolerance;
    return r;
}

ReductionSurvey reduction_survey(int dA, int dB, int count, std::uint64_t seed, Execution exec) {
    struct Sample {
        bool holdsB;
        double coherent;
    };
    std::vector<Sample> samples(static_cast<std::size_t>(count));
    for_each_index(samples.size(), exec, [&](std::size_t i) {
        BipartiteState s = random_state_of_rank(dA, dB, 1 + static_cast<int>(i % (dA * dB)), task_seed(seed, i));
        samples[i] = {reduction_criterion(s).holdsB, coherent_info(s)};
    });
    ReductionSurvey out;
    out.states = count;
    for (const auto& x : samples) {
        if (x.holdsB) {
            ++out.holdsB;
            out.max_coherent_info_when_holdsB = std::max(out.max_coherent_info_when_holdsB, x.coherent);
        }
    }
    return out;
}

}  // namespace sdcap
