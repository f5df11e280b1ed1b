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
#include <random>

#include "sdcap/matrix.hpp"

namespace sdcap {

/// Every stochastic routine takes an explicit seed and owns its generator.
using Rng = std::mt19937_64;

/// rows x cols matrix of i.i.d. standard complex Gaussians (E|g|^2 = 1).
ComplexMatrix ginibre(int rows, int cols, Rng& rng);

/// Haar-distributed unitary via QR of a Ginibre matrix with phase fix.
ComplexMatrix haar_unitary(int dim, Rng& rng);

/// Uniform angle vector in [0, 2 pi).
RealVector uniform_angles(int count, Rng& rng);

/// Seed of the i-th task derived from a base seed. Shared by every
/// parallel kernel so serial and parallel runs see identical streams.
inline std::uint64_t task_seed(std::uint64_t base, std::uint64_t index) { return base + index; }

/// Decorrelated child seed for a sub-stream (restart, channel draw) of a task.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace sdcap
