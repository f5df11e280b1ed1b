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
#include <numbers>

#include "gtest/gtest.h"

#include "sdcap/errors.hpp"
#include "sdcap/measures.hpp"
#include "sdcap/random.hpp"

using namespace sdcap;

namespace {

ComplexMatrix pauli(int k) {
    const Complex i(0.0, 1.0);
    ComplexMatrix m(2, 2);
    switch (k) {
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, -i, i, 0; break;
        case 3: m << 1, 0, 0, -1; break;
        default: m = identity(2);
    }
    return m;
}

}  // namespace

TEST(channels, apply_identity_and_trace_out) {
    ComplexMatrix m = random_state(3, 1, 1).rho();
    EXPECT_LE(max_abs_diff(sdcap::apply(identity_channel(3), m), m), 1e-15);
    ComplexMatrix t = sdcap::apply(trace_out_channel(3), m);
    ASSERT_EQ(t.rows(), 1);
    EXPECT_NEAR(std::abs(t(0, 0) - m.trace()), 0.0, 1e-15);
    EXPECT_THROW(sdcap::apply(identity_channel(2), m), DimensionError);
}

TEST(channels, full_depolarizing_matches_pauli_twirl) {
    ComplexMatrix in = pauli(3) / 2.0 + identity(2) / 2.0;
    // Hand-expanded twirl (rho + X rho X + Y rho Y + Z rho Z) / 4.
    ComplexMatrix twirl = ComplexMatrix::Zero(2, 2);
    for (int k = 0; k < 4; ++k) twirl += pauli(k) * in * pauli(k).adjoint() / 4.0;
    ComplexMatrix out = sdcap::apply(depolarizing_qubit(1.0), in);
    EXPECT_LE(max_abs_diff(out, twirl), 1e-15);
    EXPECT_LE(max_abs_diff(out, identity(2) / 2.0), 1e-15);
}

TEST(channels, apply_A_examples) {
    BipartiteState s = singlet();
    EXPECT_LE(max_abs_diff(apply_A(identity_channel(2), s).rho(), s.rho()), 1e-15);

    BipartiteState r = random_state(3, 2, 4);
    BipartiteState traced = apply_A(trace_out_channel(3), r);
    EXPECT_EQ(traced.dA(), 1);
    EXPECT_NEAR(entropy(traced.reduced(Side::B)), entropy(r.reduced(Side::B)), 1e-12);

    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(1, 1) = 0.5;  // |01><01|
    expected(2, 2) = 0.5;  // |10><10|
    EXPECT_LE(max_abs_diff(apply_A(dephasing_channel(2), s).rho(), expected), 1e-15);
    EXPECT_THROW(apply_A(identity_channel(3), s), DimensionError);
}

TEST(channels, zero_params_are_valid_and_identity_like) {
    for (auto [dIn, dOut, env] : {std::tuple{2, 2, 1}, {2, 2, 4}, {3, 2, 6}, {4, 2, 2}, {2, 3, 2}}) {
        KrausChannel ch = from_params(ChannelParams::zeros(dIn, dOut, env));
        EXPECT_LE(ch.completeness_error(), 1e-10);
    }
    BipartiteState s = random_state(2, 2, 3);
    EXPECT_LE(max_abs_diff(apply_A(from_params(ChannelParams::zeros(2, 2, 1)), s).rho(), s.rho()), 1e-15);
    EXPECT_LE(max_abs_diff(apply_A(from_params(ChannelParams::zeros(2, 2, 4)), s).rho(), s.rho()), 1e-15);
    // dIn = 4 = 2 x 2 with dOut = 2: zero angles trace out the leading factor.
    BipartiteState big = random_state(4, 2, 5);
    BipartiteState viaParams = apply_A(from_params(ChannelParams::zeros(4, 2, 2)), big);
    BipartiteState viaKraus = apply_A(discard_first_factor(2, 2), big);
    EXPECT_LE(max_abs_diff(viaParams.rho(), viaKraus.rho()), 1e-15);
}

TEST(channels, rotation_reaches_dephasing) {
    ChannelParams p = ChannelParams::zeros(2, 2, 2);
    // Column 1 starts on row (o=1, e=0); rotating it onto (o=1, e=1) splits the environment.
    p.angles(ChannelParams::rotation_index(2, 2, 2, 1, 3)) = std::numbers::pi / 2.0;
    ComplexMatrix v = isometry_from_params(p);
    EXPECT_NEAR(std::abs(v(0, 0)), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(v(3, 1)), 1.0, 1e-15);
    EXPECT_LE(max_abs_diff(apply_A(from_params(p), singlet()).rho(), apply_A(dephasing_channel(2), singlet()).rho()),
              1e-15);
}

TEST(channels, random_params_preserve_trace_and_positivity) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        KrausChannel ch = from_params(ChannelParams::random(4, 2, 4, seed));
        EXPECT_LE(ch.completeness_error(), 1e-10);
        ComplexMatrix m = random_state(4, 1, seed + 500).rho();
        ComplexMatrix out = sdcap::apply(ch, m);
        EXPECT_NEAR(out.trace().real(), 1.0, 1e-9);
        EXPECT_GE(hermitian_eigenvalues(out)(0), -1e-9);
    }
}

TEST(channels, isometry_has_orthonormal_columns) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ChannelParams p = ChannelParams::random(3, 2, 3, seed);
        ComplexMatrix v = isometry_from_params(p);
        EXPECT_LE(max_abs_diff(v.adjoint() * v, identity(3)), 1e-12);
    }
}

TEST(channels, arity_and_bad_shapes) {
    EXPECT_EQ(ChannelParams::arity(2, 2, 2), 12);
    EXPECT_EQ(ChannelParams::arity(3, 3, 9), 2 * 3 * 27 - 9);
    EXPECT_THROW(ChannelParams::arity(4, 1, 2), DimensionError);
    ChannelParams p = ChannelParams::zeros(2, 2, 2);
    p.angles.resize(5);
    EXPECT_THROW(from_params(p), DimensionError);
}

TEST(channels, unitary_channels_are_complete) {
    Rng rng(3);
    ComplexMatrix x(2, 2);
    x << 0, 1, 1, 0;
    for (const ComplexMatrix& u : {identity(2), x, haar_unitary(2, rng), haar_unitary(5, rng)}) {
        EXPECT_LE(unitary_channel(u).completeness_error(), 1e-10);
    }
    EXPECT_THROW(unitary_channel(2.0 * identity(2)), InvariantViolation);
}

TEST(channels, extremal_qubit_params) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        ChannelParams p = extremal_qubit_params(seed);
        EXPECT_EQ(p.envDim, 2);
        KrausChannel ch = from_params(p);
        EXPECT_LE(ch.kraus().size(), 2u);
        EXPECT_LE(ch.completeness_error(), 1e-9);
    }
    // Zero angles give a single surviving Kraus operator: the identity.
    KrausChannel unitary = from_params(ChannelParams::zeros(2, 2, 2));
    EXPECT_EQ(unitary.kraus().size(), 1u);
}

TEST(channels, constructor_checks) {
    EXPECT_THROW(KrausChannel(2, 2, {identity(3)}), DimensionError);
    EXPECT_THROW(KrausChannel(2, 2, {0.5 * identity(2)}), InvariantViolation);
    std::vector<ComplexMatrix> many(5, identity(2) / std::sqrt(5.0));
    EXPECT_THROW(KrausChannel(2, 2, many), InvariantViolation);
}

TEST(channels, apply_A_never_touches_bob) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        BipartiteState s = random_state(2, 3, seed);
        KrausChannel ch = from_params(ChannelParams::random(2, 3, 2, seed + 7));
        EXPECT_LE(max_abs_diff(apply_A(ch, s).reduced(Side::B), s.reduced(Side::B)), 1e-10);
    }
}

TEST(channels, composition_matches_sequential_application) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        KrausChannel first = from_params(ChannelParams::random(3, 2, 6, seed));
        KrausChannel second = from_params(ChannelParams::random(2, 2, 4, seed + 99));
        KrausChannel both = compose(second, first);
        EXPECT_LE(both.kraus().size(), 6u);
        ComplexMatrix m = random_state(3, 1, seed + 1234).rho();
        EXPECT_LE(max_abs_diff(sdcap::apply(second, sdcap::apply(first, m)), sdcap::apply(both, m)), 1e-9);
    }
}
