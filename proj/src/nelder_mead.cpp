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

#include "sdcap/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sdcap {

NelderMeadResult nelder_mead_maximize(const std::function<double(const RealVector&)>& f, const RealVector& start,
                                      const NelderMeadOptions& options) {
    const int n = static_cast<int>(start.size());
    NelderMeadResult result;
    // Internally minimize g = -f.
    auto g = [&](const RealVector& x) {
        ++result.evaluations;
        double v = f(x);
        return std::isnan(v) ? INFINITY : -v;
    };

    result.best = start;
    result.value = -g(start);
    result.history.emplace_back(0, result.value);
    if (n == 0) {
        result.converged = true;
        return result;
    }

    // Dimension-adaptive coefficients; they degenerate at n = 1, where the
    // classic (1, 2, 1/2, 1/2) set is used instead.
    const double alpha = 1.0;
    const double beta = n >= 2 ? 1.0 + 2.0 / n : 2.0;
    const double gamma = n >= 2 ? 0.75 - 1.0 / (2.0 * n) : 0.5;
    const double delta = n >= 2 ? 1.0 - 1.0 / n : 0.5;

    std::vector<RealVector> pts(n + 1, start);
    std::vector<double> vals(n + 1);
    vals[0] = -result.value;
    for (int i = 0; i < n; ++i) {
        pts[i + 1](i) += options.initial_step;
        vals[i + 1] = g(pts[i + 1]);
    }
    std::vector<int> order(n + 1);

    auto record = [&](int it) {
        int b = static_cast<int>(std::min_element(vals.begin(), vals.end()) - vals.begin());
        if (-vals[b] > result.value) {
            result.value = -vals[b];
            result.best = pts[b];
            result.history.emplace_back(it, result.value);
        }
    };
    record(0);

    // Running sum of all vertices; the centroid excludes the worst one.
    RealVector total = RealVector::Zero(n);
    for (const auto& x : pts) total += x;
    auto replace = [&](int i, const RealVector& x, double v) {
        total += x - pts[i];
        pts[i] = x;
        vals[i] = v;
    };

    RealVector centroid(n), xr(n), xe(n), xc(n);
    for (int it = 1; it <= options.max_iterations; ++it) {
        std::iota(order.begin(), order.end(), 0);
        // Stable sort keeps ties in vertex order for determinism.
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
        const int lo = order[0], hi = order[n], second = order[n - 1];
        if (vals[hi] - vals[lo] <= options.tolerance) {
            double spread = 0.0;
            for (const auto& x : pts) spread = std::max(spread, (x - pts[lo]).cwiseAbs().maxCoeff());
            if (spread <= options.x_tolerance) {
                result.converged = true;
                break;
            }
        }
        result.iterations = it;

        centroid = (total - pts[hi]) / n;

        xr = centroid + alpha * (centroid - pts[hi]);
        const double fr = g(xr);
        if (fr < vals[lo]) {
            xe = centroid + beta * (xr - centroid);
            const double fe = g(xe);
            if (fe < fr) {
                replace(hi, xe, fe);
            } else {
                replace(hi, xr, fr);
            }
        } else if (fr < vals[second]) {
            replace(hi, xr, fr);
        } else {
            bool outside = fr < vals[hi];
            xc = outside ? RealVector(centroid + gamma * (xr - centroid))
                         : RealVector(centroid + gamma * (pts[hi] - centroid));
            const double fc = g(xc);
            if (fc <= (outside ? fr : vals[hi])) {
                replace(hi, xc, fc);
            } else {
                for (int i = 0; i <= n; ++i) {
                    if (i == lo) continue;
                    pts[i] = pts[lo] + delta * (pts[i] - pts[lo]);
                    vals[i] = g(pts[i]);
                }
                total.setZero();
                for (const auto& x : pts) total += x;
            }
        }
        record(it);
    }
    return result;
}

}  // namespace sdcap
