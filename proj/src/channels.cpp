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

#include "sdcap/channels.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sdcap/errors.hpp"
#include "sdcap/random.hpp"

namespace sdcap {

KrausChannel::KrausChannel(int dIn, int dOut, std::vector<ComplexMatrix> kraus) : dIn_(dIn), dOut_(dOut) {
    if (dIn < 1 || dOut < 1) {
        throw DimensionError("KrausChannel: dimensions must be positive");
    }
    for (auto& k : kraus) {
        if (k.rows() != dOut || k.cols() != dIn) {
            throw DimensionError("KrausChannel: Kraus operator has shape " + std::to_string(k.rows()) + "x" +
                                 std::to_string(k.cols()) + ", expected " + std::to_string(dOut) + "x" +
                                 std::to_string(dIn));
        }
        if (k.norm() >= kKrausPruneNorm) {
            kraus_.push_back(std::move(k));
        }
    }
    if (kraus_.empty() || kraus_.size() > static_cast<std::size_t>(dIn) * dOut) {
        throw InvariantViolation("KrausChannel: " + std::to_string(kraus_.size()) + " Kraus operators for a " +
                                 std::to_string(dIn) + "->" + std::to_string(dOut) + " map");
    }
    double err = completeness_error();
    if (!(err <= kCompletenessTolerance)) {
        throw InvariantViolation("KrausChannel: not trace preserving, completeness error " + std::to_string(err));
    }
}

double KrausChannel::completeness_error() const {
    ComplexMatrix sum = ComplexMatrix::Zero(dIn_, dIn_);
    for (const auto& k : kraus_) {
        sum.noalias() += k.adjoint() * k;
    }
    return max_abs_diff(sum, identity(dIn_));
}

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& m) {
    if (m.rows() != ch.dIn() || m.cols() != ch.dIn()) {
        throw DimensionError("apply: operator dimension " + std::to_string(m.rows()) + " != channel input " +
                             std::to_string(ch.dIn()));
    }
    ComplexMatrix out = ComplexMatrix::Zero(ch.dOut(), ch.dOut());
    for (const auto& k : ch.kraus()) {
        out.noalias() += k * m * k.adjoint();
    }
    return out;
}

BipartiteState apply_A(const KrausChannel& ch, const BipartiteState& s) {
    if (s.dA() != ch.dIn()) {
        throw DimensionError("apply_A: channel input " + std::to_string(ch.dIn()) + " != Alice dimension " +
                             std::to_string(s.dA()));
    }
    const int dB = s.dB();
    const int dimOut = ch.dOut() * dB;
    ComplexMatrix out = ComplexMatrix::Zero(dimOut, dimOut);
    ComplexMatrix lifted(dimOut, s.dim());
    ComplexMatrix half(dimOut, s.dim());
    for (const auto& k : ch.kraus()) {
        lifted = tensor(k, identity(dB));
        half.noalias() = lifted * s.rho();
        out.noalias() += half * lifted.adjoint();
    }
    out = (out + out.adjoint()) * 0.5;
    return BipartiteState(ch.dOut(), dB, std::move(out));
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
    if (second.dIn() != first.dOut()) {
        throw DimensionError("compose: output of the first channel does not feed the second");
    }
    std::vector<ComplexMatrix> kraus;
    for (const auto& k2 : second.kraus()) {
        for (const auto& k1 : first.kraus()) {
            kraus.push_back(k2 * k1);
        }
    }
    const int dIn = first.dIn();
    const int dOut = second.dOut();
    if (kraus.size() <= static_cast<std::size_t>(dIn) * dOut) {
        return KrausChannel(dIn, dOut, std::move(kraus));
    }
    // Minimal family from the Choi matrix sum_k vec(K) vec(K)^dagger.
    const int n = dIn * dOut;
    ComplexMatrix choi = ComplexMatrix::Zero(n, n);
    for (const auto& k : kraus) {
        Eigen::Map<const ComplexVector> v(k.data(), n);
        choi.noalias() += v * v.adjoint();
    }
    EigenSystem eig = hermitian_eigen(choi);
    std::vector<ComplexMatrix> minimal;
    for (int i = n - 1; i >= 0; --i) {
        double lambda = eig.values(i);
        if (lambda <= 1e-15) {
            break;
        }
        ComplexVector v = eig.vectors.col(i) * std::sqrt(lambda);
        minimal.push_back(Eigen::Map<const ComplexMatrix>(v.data(), dOut, dIn));
    }
    return KrausChannel(dIn, dOut, std::move(minimal));
}

KrausChannel identity_channel(int d) { return KrausChannel(d, d, {identity(d)}); }

KrausChannel unitary_channel(const ComplexMatrix& u) {
    if (u.rows() != u.cols()) {
        throw DimensionError("unitary_channel: matrix is not square");
    }
    const int d = static_cast<int>(u.rows());
    if (max_abs_diff(u.adjoint() * u, identity(d)) > 1e-9) {
        throw InvariantViolation("unitary_channel: matrix is not unitary");
    }
    return KrausChannel(d, d, {u});
}

KrausChannel trace_out_channel(int dIn) {
    std::vector<ComplexMatrix> kraus;
    for (int i = 0; i < dIn; ++i) {
        ComplexMatrix k = ComplexMatrix::Zero(1, dIn);
        k(0, i) = 1.0;
        kraus.push_back(k);
    }
    return KrausChannel(dIn, 1, std::move(kraus));
}

KrausChannel replace_channel(int dIn, int dOut) {
    std::vector<ComplexMatrix> kraus;
    for (int i = 0; i < dIn; ++i) {
        ComplexMatrix k = ComplexMatrix::Zero(dOut, dIn);
        k(0, i) = 1.0;
        kraus.push_back(k);
    }
    return KrausChannel(dIn, dOut, std::move(kraus));
}

KrausChannel dephasing_channel(int d) {
    std::vector<ComplexMatrix> kraus;
    for (int i = 0; i < d; ++i) {
        ComplexMatrix k = ComplexMatrix::Zero(d, d);
        k(i, i) = 1.0;
        kraus.push_back(k);
    }
    return KrausChannel(d, d, std::move(kraus));
}

KrausChannel depolarizing_qubit(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("depolarizing_qubit: p must lie in [0, 1]");
    }
    const Complex i(0.0, 1.0);
    ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, -i, i, 0;
    z << 1, 0, 0, -1;
    const double w0 = std::sqrt(1.0 - 0.75 * p);
    const double w = std::sqrt(0.25 * p);
    return KrausChannel(2, 2, {w0 * identity(2), w * x, w * y, w * z});
}

KrausChannel discard_first_factor(int first, int second) {
    std::vector<ComplexMatrix> kraus;
    for (int j = 0; j < first; ++j) {
        ComplexMatrix bra = ComplexMatrix::Zero(1, first);
        bra(0, j) = 1.0;
        kraus.push_back(tensor(bra, identity(second)));
    }
    return KrausChannel(first * second, second, std::move(kraus));
}

int ChannelParams::arity(int dIn, int dOut, int envDim) {
    const int n = dOut * envDim;
    if (dIn < 1 || dOut < 1 || envDim < 1 || dIn > n) {
        throw DimensionError("ChannelParams: an isometry from " + std::to_string(dIn) + " into " +
                             std::to_string(n) + " dimensions does not exist");
    }
    return 2 * dIn * n - dIn * dIn;
}

int ChannelParams::rotation_index(int dIn, int dOut, int envDim, int c, int r) {
    const int n = dOut * envDim;
    if (c < 0 || c >= dIn || r <= c || r >= n) {
        throw DomainError("ChannelParams: no rotation (" + std::to_string(c) + ", " + std::to_string(r) + ")");
    }
    int pair = 0;
    for (int col = 0; col < c; ++col) {
        pair += n - 1 - col;
    }
    pair += r - c - 1;
    return 2 * pair;
}

int ChannelParams::phase_index(int dIn, int dOut, int envDim, int c) {
    return arity(dIn, dOut, envDim) - dIn + c;
}

ChannelParams ChannelParams::zeros(int dIn, int dOut, int envDim) {
    return {dIn, dOut, envDim, RealVector::Zero(arity(dIn, dOut, envDim))};
}

ChannelParams ChannelParams::random(int dIn, int dOut, int envDim, std::uint64_t seed) {
    Rng rng(seed);
    return {dIn, dOut, envDim, uniform_angles(arity(dIn, dOut, envDim), rng)};
}

ComplexMatrix isometry_from_params(const ChannelParams& p) {
    const int k = p.dIn;
    const int n = p.dOut * p.envDim;
    if (p.angles.size() != ChannelParams::arity(p.dIn, p.dOut, p.envDim)) {
        throw DimensionError("from_params: expected " + std::to_string(ChannelParams::arity(p.dIn, p.dOut, p.envDim)) +
                             " angles, got " + std::to_string(p.angles.size()));
    }
    const int phases = p.angles.size() - k;

    // Working frame: row a of w is physical row frame[a].
    ComplexMatrix w = ComplexMatrix::Zero(n, k);
    for (int c = 0; c < k; ++c) {
        w(c, c) = std::polar(1.0, p.angles(phases + c));
    }
    // Rotations for column c only touch rows >= c; applying the last column
    // first makes the product reach every isometry.
    int idx = phases;
    for (int c = k - 1; c >= 0; --c) {
        for (int r = n - 1; r > c; --r) {
            idx -= 2;
            const double theta = p.angles(idx);
            const double phi = p.angles(idx + 1);
            const double cs = std::cos(theta);
            const double sn = std::sin(theta);
            const Complex down(sn * std::cos(phi), sn * std::sin(phi));
            const Complex up = -std::conj(down);
            for (int col = 0; col < k; ++col) {
                const Complex a = w(c, col);
                const Complex b = w(r, col);
                w(c, col) = cs * a + up * b;
                w(r, col) = down * a + cs * b;
            }
        }
    }

    std::vector<int> frame;
    std::vector<char> used(n, 0);
    for (int c = 0; c < k; ++c) {
        int row = (c % p.dOut) * p.envDim + c / p.dOut;
        frame.push_back(row);
        used[row] = 1;
    }
    for (int row = 0; row < n; ++row) {
        if (!used[row]) {
            frame.push_back(row);
        }
    }
    ComplexMatrix v(n, k);
    for (int a = 0; a < n; ++a) {
        v.row(frame[a]) = w.row(a);
    }
    return v;
}

KrausChannel from_params(const ChannelParams& p) {
    ComplexMatrix v = isometry_from_params(p);
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(p.envDim);
    for (int e = 0; e < p.envDim; ++e) {
        ComplexMatrix k(p.dOut, p.dIn);
        for (int o = 0; o < p.dOut; ++o) {
            k.row(o) = v.row(o * p.envDim + e);
        }
        kraus.push_back(std::move(k));
    }
    return KrausChannel(p.dIn, p.dOut, std::move(kraus));
}

ChannelParams extremal_qubit_params(std::uint64_t seed) { return ChannelParams::random(2, 2, 2, seed); }

}  // namespace sdcap
