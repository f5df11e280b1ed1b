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

#include <algorithm>
#include <cmath>
#include <string>

#include "sdcap/errors.hpp"

namespace sdcap {

namespace {

void check_bipartite(const ComplexMatrix& m, int dA, int dB, const char* what) {
    if (dA < 1 || dB < 1 || m.rows() != m.cols() || m.rows() != static_cast<Eigen::Index>(dA) * dB) {
        throw DimensionError(std::string(what) + ": operator of dimension " + std::to_string(m.rows()) +
                             " does not factor as " + std::to_string(dA) + "x" + std::to_string(dB));
    }
}

ComplexMatrix symmetrized(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("hermitian_eigen: matrix is not square");
    }
    double asym = hermitian_asymmetry(m);
    if (!(asym <= kHermitianTolerance)) {
        throw NotHermitianError("hermitian_eigen: asymmetry " + std::to_string(asym) + " exceeds tolerance");
    }
    return (m + m.adjoint()) * 0.5;
}

}  // namespace

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
    ComplexMatrix out(ra * rb, ca * cb);
    for (Eigen::Index i = 0; i < ra; ++i) {
        for (Eigen::Index j = 0; j < ca; ++j) {
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dA, int dB, Side keep) {
    check_bipartite(m, dA, dB, "partial_trace");
    if (keep == Side::A) {
        ComplexMatrix out(dA, dA);
        for (int a = 0; a < dA; ++a) {
            for (int ap = 0; ap < dA; ++ap) {
                out(a, ap) = m.block(a * dB, ap * dB, dB, dB).trace();
            }
        }
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(dB, dB);
    for (int a = 0; a < dA; ++a) {
        out += m.block(a * dB, a * dB, dB, dB);
    }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int dA, int dB, Side side) {
    check_bipartite(m, dA, dB, "partial_transpose");
    ComplexMatrix out(m.rows(), m.cols());
    for (int a = 0; a < dA; ++a) {
        for (int ap = 0; ap < dA; ++ap) {
            if (side == Side::B) {
                out.block(a * dB, ap * dB, dB, dB) = m.block(a * dB, ap * dB, dB, dB).transpose();
            } else {
                out.block(a * dB, ap * dB, dB, dB) = m.block(ap * dB, a * dB, dB, dB);
            }
        }
    }
    return out;
}

double hermitian_asymmetry(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

EigenSystem hermitian_eigen(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(symmetrized(m));
    if (solver.info() != Eigen::Success) {
        throw InvariantViolation("hermitian_eigen: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(symmetrized(m), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw InvariantViolation("hermitian_eigenvalues: eigensolver did not converge");
    }
    return solver.eigenvalues();
}

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

ComplexMatrix permute_factors(const ComplexMatrix& m, const std::vector<int>& dims,
                              const std::vector<int>& order) {
    const std::size_t k = dims.size();
    if (order.size() != k) {
        throw DimensionError("permute_factors: order and dims differ in length");
    }
    std::vector<int> seen(k, 0);
    Eigen::Index total = 1;
    for (std::size_t j = 0; j < k; ++j) {
        if (order[j] < 0 || static_cast<std::size_t>(order[j]) >= k || seen[order[j]]++) {
            throw DimensionError("permute_factors: order is not a permutation");
        }
        total *= dims[j];
    }
    if (m.rows() != total || m.cols() != total) {
        throw DimensionError("permute_factors: operator dimension does not match factors");
    }

    // Row-major strides of the input factors.
    std::vector<Eigen::Index> in_stride(k, 1);
    for (std::size_t j = k; j-- > 1;) {
        in_stride[j - 1] = in_stride[j] * dims[j];
    }
    std::vector<Eigen::Index> source(static_cast<std::size_t>(total));
    std::vector<int> digit(k, 0);  // output multi-index, odometer order
    for (Eigen::Index out = 0; out < total; ++out) {
        Eigen::Index in = 0;
        for (std::size_t j = 0; j < k; ++j) {
            in += digit[j] * in_stride[order[j]];
        }
        source[static_cast<std::size_t>(out)] = in;
        for (std::size_t j = k; j-- > 0;) {
            if (++digit[j] < dims[order[j]]) {
                break;
            }
            digit[j] = 0;
        }
    }

    ComplexMatrix out(total, total);
    for (Eigen::Index c = 0; c < total; ++c) {
        for (Eigen::Index r = 0; r < total; ++r) {
            out(r, c) = m(source[r], source[c]);
        }
    }
    return out;
}

}  // namespace sdcap
