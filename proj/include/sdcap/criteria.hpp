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

#include "sdcap/parallel.hpp"
#include "sdcap/states.hpp"

namespace sdcap {

inline constexpr double kPsdTolerance = 1e-9;

/// min eigenvalue of rho^{T_B} >= -1e-9.
bool is_ppt(const BipartiteState& s);

/// Same test transposing Alice's factor instead; the spectra coincide.
bool is_ppt_side(const BipartiteState& s, Side side);

struct ReductionResult {
    bool holdsA = false;  // rho_A (x) I - rho >= 0
    bool holdsB = false;  // I (x) rho_B - rho >= 0
    double minA = 0.0;    // smallest eigenvalue of rho_A (x) I - rho
    double minB = 0.0;
};

ReductionResult reduction_criterion(const BipartiteState& s);

/// Over `count` Hilbert-Schmidt random states, how many satisfy the B-side
/// reduction criterion and the largest coherent information among them.
struct ReductionSurvey {
    int states = 0;
    int holdsB = 0;
    double max_coherent_info_when_holdsB = 0.0;
};

ReductionSurvey reduction_survey(int dA, int dB, int count, std::uint64_t seed,
                                 Execution exec = Execution::parallel);

}  // namespace sdcap
