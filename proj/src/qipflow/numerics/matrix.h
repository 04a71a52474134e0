// Copyright 2026 The qipflow Authors
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

#ifndef QIPFLOW_NUMERICS_MATRIX_H
#define QIPFLOW_NUMERICS_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qipflow {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Sized for the 2x2 / 4x4 operators used
/// throughout the library; no attempt is made at blocking or vectorization.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(size_t rows, size_t cols);
    ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(size_t n);
    static ComplexMatrix zeros(size_t rows, size_t cols);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |v><v|
    static ComplexMatrix outer(std::span<const Complex> v);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    Complex &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    std::span<const Complex> entries() const {
        return data_;
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;
    /// max_ij |m_ij|
    double max_norm() const;
    double frobenius_norm() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
std::vector<Complex> operator*(const ComplexMatrix &m, std::span<const Complex> v);

/// max-norm of m - m^dagger.
double hermiticity_defect(const ComplexMatrix &m);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

/// Eigensystem of a Hermitian matrix. `vectors` holds the orthonormal
/// eigenvectors as columns, matched to `values` (nondecreasing).
struct HermitianEigenResult {
    std::vector<double> values;
    ComplexMatrix vectors;

    std::vector<Complex> vector(size_t k) const;
};

/// Cyclic complex Jacobi diagonalization. Throws InvalidInput for non-square
/// input or when ||M - M^dagger||_max > 1e-10.
HermitianEigenResult hermitian_eig(const ComplexMatrix &m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix &m);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Partial trace of a bipartite operator with subsystem dimensions
/// (dim_first, dim_second). `keep` is 0 for the first factor, 1 for the second.
ComplexMatrix partial_trace(const ComplexMatrix &m, size_t keep, size_t dim_first = 2, size_t dim_second = 2);

/// V diag(f(e)) V^dagger for a Hermitian matrix.
template <typename F>
ComplexMatrix hermitian_function(const HermitianEigenResult &eig, F &&f) {
    const size_t n = eig.values.size();
    ComplexMatrix out(n, n);
    for (size_t k = 0; k < n; k++) {
        double fk = f(eig.values[k]);
        if (fk == 0) {
            continue;
        }
        for (size_t r = 0; r < n; r++) {
            Complex vr = eig.vectors(r, k) * fk;
            for (size_t c = 0; c < n; c++) {
                out(r, c) += vr * std::conj(eig.vectors(c, k));
            }
        }
    }
    return out;
}

}  // namespace qipflow

#endif
