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

#include <functional>
#include <utility>
#include <vector>

#include "sdcap/matrix.hpp"

namespace sdcap {

struct NelderMeadOptions {
    int max_iterations = 2000;
    double tolerance = 1e-9;    // stop once max - min over the simplex is below this
    double initial_step = 0.4;  // edge length of the starting simplex
    double x_tolerance = 1e-6;  // and every vertex lies within this of the best (max norm)
};

struct NelderMeadResult {
    RealVector best;
    double value = 0.0;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
    std::vector<std::pair<int, double>> history;  // (iteration, best so far) at each improvement
};

/// Maximizes f with the dimension-adaptive Nelder-Mead coefficients of
/// Gao and Han (2012). The start point is a simplex vertex, so the result
/// is never worse than f(start).
NelderMeadResult nelder_mead_maximize(const std::function<double(const RealVector&)>& f, const RealVector& start,
                                      const NelderMeadOptions& options);

}  // namespace sdcap
