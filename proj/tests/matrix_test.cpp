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

#include "sdcap/matrix.hpp"

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "sdcap/errors.hpp"
#include "sdcap/random.hpp"
#include "sdcap/states.hpp"

using namespace sdcap;

namespace {

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ComplexMatrix diag(std::initializer_list<double> v) {
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<int>(v.size()), static_cast<int>(v.size()));
    int i = 0;
    for (double x : v) {
        m(i, i) = x;
        ++i;
    }
    return m;
}

ComplexMatrix random_hermitian(int d, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix g = ginibre(d, d, rng);
    return (g + g.adjoint()) * 0.5;
}

}  // namespace

TEST(matrix, tensor_identity) { EXPECT_EQ(tensor(identity(2), identity(2)), identity(4)); }

TEST(matrix, tensor_diagonal_projectors) {
    EXPECT_EQ(tensor(diag({1, 0}), diag({0, 1})), diag({0, 1, 0, 0}));
}

TEST(matrix, tensor_pauli_x_z_hand_expanded) {
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 2) = 1.0;
    expected(1, 3) = -1.0;
    expected(2, 0) = 1.0;
    expected(3, 1) = -1.0;
    EXPECT_EQ(tensor(pauli_x(), pauli_z()), expected);
}

TEST(matrix, tensor_matches_loop_oracle_and_is_associative) {
    ComplexMatrix a(2, 2), b(3, 3), c(2, 2);
    a << 1, 2, 3, 4;
    b << 1, -1, 2, 0, 5, 1, 3, 2, -2;
    c << 0, 1, 7, -3;
    EXPECT_EQ(tensor(a, b), oracle::kron_loops(a, b));
    EXPECT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
}

TEST(matrix, partial_trace_of_singlet_is_maximally_mixed) {
    ComplexMatrix rho = singlet().rho();
    EXPECT_LE(max_abs_diff(partial_trace(rho, 2, 2, Side::A), identity(2) / 2.0), 1e-15);
    EXPECT_LE(max_abs_diff(partial_trace(rho, 2, 2, Side::B), identity(2) / 2.0), 1e-15);
}

TEST(matrix, partial_trace_of_product) {
    ComplexMatrix ra = random_state(2, 1, 3).rho();
    ComplexMatrix rb = random_state(3, 1, 4).rho();
    EXPECT_LE(max_abs_diff(partial_trace(tensor(ra, rb), 2, 3, Side::A), ra), 1e-12);
    EXPECT_LE(max_abs_diff(partial_trace(tensor(ra, rb), 2, 3, Side::B), rb), 1e-12);
}

TEST(matrix, partial_trace_matches_index_summation_oracle) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ComplexMatrix rho = random_state(2, 2, seed).rho();
        EXPECT_LE(max_abs_diff(partial_trace(rho, 2, 2, Side::A), oracle::partial_trace_loops(rho, 2, 2, true)), 1e-12);
        EXPECT_LE(max_abs_diff(partial_trace(rho, 2, 2, Side::B), oracle::partial_trace_loops(rho, 2, 2, false)), 1e-12);
        ComplexMatrix r23 = random_state(2, 3, seed).rho();
        EXPECT_LE(max_abs_diff(partial_trace(r23, 2, 3, Side::B), oracle::partial_trace_loops(r23, 2, 3, false)), 1e-12);
        EXPECT_NEAR(partial_trace(r23, 2, 3, Side::A).trace().real(), 1.0, 1e-12);
    }
}

TEST(matrix, partial_trace_dimension_mismatch) {
    EXPECT_THROW(partial_trace(identity(4), 2, 3, Side::A), DimensionError);
    EXPECT_THROW(partial_transpose(identity(6), 4, 2, Side::B), DimensionError);
}

TEST(matrix, partial_transpose_of_product) {
    ComplexMatrix ra = random_state(2, 1, 8).rho();
    ComplexMatrix rb = random_state(2, 1, 9).rho();
    EXPECT_LE(max_abs_diff(partial_transpose(tensor(ra, rb), 2, 2, Side::B), tensor(ra, rb.transpose())), 1e-15);
    EXPECT_LE(max_abs_diff(partial_transpose(tensor(ra, rb), 2, 2, Side::A), tensor(ra.transpose(), rb)), 1e-15);
}

TEST(matrix, partial_transpose_of_singlet_has_eigenvalue_minus_half) {
    ComplexMatrix pt = partial_transpose(singlet().rho(), 2, 2, Side::B);
    std::vector<double> ev = oracle::jacobi_eigenvalues(pt);
    EXPECT_NEAR(ev.front(), -0.5, 1e-12);
    EXPECT_NEAR(hermitian_eigenvalues(pt)(0), -0.5, 1e-12);
}

TEST(matrix, partial_transpose_is_an_involution_and_keeps_trace) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        ComplexMatrix rho = random_state(3, 2, seed).rho();
        for (Side side : {Side::A, Side::B}) {
            ComplexMatrix once = partial_transpose(rho, 3, 2, side);
            EXPECT_EQ(partial_transpose(once, 3, 2, side), rho);
            EXPECT_NEAR(std::abs(once.trace() - rho.trace()), 0.0, 1e-14);
            EXPECT_LE(hermitian_asymmetry(once), 1e-15);
        }
    }
}

TEST(matrix, eigen_of_identity_and_pauli) {
    RealVector ones = hermitian_eigen(identity(3)).values;
    for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(ones(i), 1.0);
    RealVector x = hermitian_eigen(pauli_x()).values;
    EXPECT_NEAR(x(0), -1.0, 1e-15);
    EXPECT_NEAR(x(1), 1.0, 1e-15);
}

TEST(matrix, eigen_reconstructs_random_hermitian) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        ComplexMatrix m = random_hermitian(8, seed);
        EigenSystem e = hermitian_eigen(m);
        ComplexMatrix rebuilt = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
        EXPECT_LE(max_abs_diff(rebuilt, m), 1e-9);
        EXPECT_LE(max_abs_diff(m * e.vectors, e.vectors * e.values.cast<Complex>().asDiagonal()), 1e-9);
        EXPECT_LE(max_abs_diff(e.vectors.adjoint() * e.vectors, identity(8)), 1e-9);
        for (int i = 1; i < 8; ++i) EXPECT_LE(e.values(i - 1), e.values(i));
        std::vector<double> jac = oracle::jacobi_eigenvalues(m);
        for (int i = 0; i < 8; ++i) EXPECT_NEAR(e.values(i), jac[i], 1e-9);
    }
}

TEST(matrix, eigen_rejects_non_hermitian_and_tolerates_roundoff) {
    ComplexMatrix m = pauli_x();
    m(0, 1) += 1e-6;
    EXPECT_THROW(hermitian_eigen(m), NotHermitianError);
    ComplexMatrix n = pauli_x();
    n(0, 1) += 1e-12;
    EXPECT_NO_THROW(hermitian_eigen(n));
}

TEST(matrix, density_matrix_spectrum_sums_to_one) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        EXPECT_NEAR(hermitian_eigenvalues(random_state(3, 3, seed).rho()).sum(), 1.0, 1e-10);
    }
}

TEST(matrix, permute_factors_swaps_tensor_order) {
    ComplexMatrix a = random_state(2, 1, 1).rho();
    ComplexMatrix b = random_state(3, 1, 2).rho();
    EXPECT_LE(max_abs_diff(permute_factors(tensor(a, b), {2, 3}, {1, 0}), tensor(b, a)), 1e-15);
    EXPECT_THROW(permute_factors(tensor(a, b), {2, 3}, {0, 0}), DimensionError);
}
