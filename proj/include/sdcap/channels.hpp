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
#include <vector>

#include "sdcap/matrix.hpp"
#include "sdcap/states.hpp"

namespace sdcap {

inline constexpr double kCompletenessTolerance = 1e-9;
inline constexpr double kKrausPruneNorm = 1e-12;

/// Trace-preserving completely positive map rho -> sum_k K_k rho K_k^dagger
/// with Kraus operators of shape dOut x dIn.
class KrausChannel {
public:
    /// Prunes operators with Frobenius norm below 1e-12, then checks
    /// sum K^dagger K = I within 1e-9 and 1 <= |kraus| <= dIn dOut.
    KrausChannel(int dIn, int dOut, std::vector<ComplexMatrix> kraus);

    int dIn() const { return dIn_; }
    int dOut() const { return dOut_; }
    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

    /// max |sum K^dagger K - I|
    double completeness_error() const;

private:
    int dIn_;
    int dOut_;
    std::vector<ComplexMatrix> kraus_;
};

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& m);

/// (Lambda (x) id_B)(rho); Bob's marginal is untouched.
BipartiteState apply_A(const KrausChannel& ch, const BipartiteState& s);

/// Channel of `first` followed by `second`. Reduced to a minimal Kraus
/// family through the Choi matrix when the product family is too large.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

KrausChannel identity_channel(int d);
KrausChannel unitary_channel(const ComplexMatrix& u);
/// dOut = 1: rho -> [[tr rho]].
KrausChannel trace_out_channel(int dIn);
/// Discards the input and prepares |0><0| on a dOut-dimensional output.
KrausChannel replace_channel(int dIn, int dOut);
/// Computational-basis dephasing, K_i = |i><i|.
KrausChannel dephasing_channel(int d);
/// Qubit depolarizing map with Kraus weights (1 - 3p/4, p/4, p/4, p/4).
KrausChannel depolarizing_qubit(double p);
/// Maps C^first (x) C^second to C^second by tracing out the first factor.
KrausChannel discard_first_factor(int first, int second);

/// Unconstrained real coordinates for a channel in Stinespring form.
///
/// The isometry V: C^dIn -> C^dOut (x) C^envDim is a product of two-level
/// rotations applied to a phased embedding of the input. Rotation (c, r)
/// mixes basis rows c < r of the working frame and has angles (theta, phi);
/// rotations for column c are stored contiguously for r = c+1 .. N-1, with
/// N = dOut envDim, followed by one input phase per column. Any real vector
/// of the right length yields a valid channel.
///
/// At all-zero angles input |c> goes to |c mod dOut> (x) |c / dOut>_env, so
/// zeros give the identity when dOut == dIn and a trace over the leading
/// factor when dIn = m dOut.
struct ChannelParams {
    int dIn = 1;
    int dOut = 1;
    int envDim = 1;
    RealVector angles;

    static int arity(int dIn, int dOut, int envDim);
    /// Index of theta for rotation (column c, row r); phi is the next slot.
    static int rotation_index(int dIn, int dOut, int envDim, int c, int r);
    /// Index of the input phase on column c.
    static int phase_index(int dIn, int dOut, int envDim, int c);

    static ChannelParams zeros(int dIn, int dOut, int envDim);
    static ChannelParams random(int dIn, int dOut, int envDim, std::uint64_t seed);
};

/// The isometry V as a (dOut envDim) x dIn matrix, rows indexed o * envDim + e.
ComplexMatrix isometry_from_params(const ChannelParams& p);

/// K_e = (I_dOut (x) <e|) V.
KrausChannel from_params(const ChannelParams& p);

/// Random point in the qubit-to-qubit family with at most two Kraus
/// operators, which contains every extremal qubit channel.
ChannelParams extremal_qubit_params(std::uint64_t seed);

}  // namespace sdcap
