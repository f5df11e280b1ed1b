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

#include <cstddef>
#include <exception>
#include <string>
#include <vector>

#include <omp.h>

namespace sdcap {

/// Serial is the reference path; parallel must reproduce it bit for bit.
enum class Execution { serial, parallel };

Execution parse_execution(const std::string& name);

/// Runs body(i) for i in [0, count). Each index must write only to its own
/// output slot. The first exception by index order is rethrown after the
/// loop, so failures report the same way on both paths.
template <class Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
    std::vector<std::exception_ptr> errors(count);
    const long long n = static_cast<long long>(count);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < n; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    } else {
        for (long long i = 0; i < n; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace sdcap
