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

#include <stdexcept>
#include <string>

namespace sdcap {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit together (partial traces, channels, ensembles, caps).
struct DimensionError : Error {
    using Error::Error;
};

/// A matrix that must be Hermitian is asymmetric beyond tolerance.
struct NotHermitianError : Error {
    using Error::Error;
};

/// A numeric invariant (trace, positivity, completeness) is violated.
struct InvariantViolation : Error {
    using Error::Error;
};

/// Sender-side entropy is zero, so a per-qubit rate is undefined.
struct DegenerateSenderEntropy : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

}  // namespace sdcap
