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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace sdcap {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Which tensor factor of H_A (x) H_B an operation refers to.
enum class Side { A, B };

/// Asymmetry tolerance above which hermitian_eigen refuses its input.
inline constexpr double kHermitianTolerance = 1e-10;

struct EigenSystem {
    RealVector values;      // ascending
    ComplexMatrix vectors;  // columns are eigenvectors
};

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced operator on the kept factor of an operator on C^dA (x) C^dB.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dA, int dB, Side keep);

/// Transposes the indices of one tensor factor.
ComplexMatrix partial_transpose(const ComplexMatrix& m, int dA, int dB, Side side);

/// Largest entrywise deviation |M - M^dagger|.
double hermitian_asymmetry(const ComplexMatrix& m);

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized to
/// (M + M^dagger) / 2 first; asymmetry above kHermitianTolerance throws
/// NotHermitianError.
EigenSystem hermitian_eigen(const ComplexMatrix& m);

/// Eigenvalues only, ascending. Same contract as hermitian_eigen.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

ComplexMatrix identity(int dim);

/// |v><v|
ComplexMatrix projector(const ComplexVector& v);

/// Largest |entry| of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Permutes the tensor factors of an operator on C^{dims[0]} (x) ... (x) C^{dims[k-1]}.
/// Factor `order[j]` of the input becomes factor j of the output.
ComplexMatrix permute_factors(const ComplexMatrix& m, const std::vector<int>& dims,
                              const std::vector<int>& order);

}  // namespace sdcap
