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

#include "qipflow/states/density_matrix.h"

#include <cmath>
#include <functional>
#include <numeric>

#include "qipflow/errors.h"

namespace qipflow {

namespace {

std::vector<size_t> default_dims(size_t n) {
    if (n == 4) {
        return {2, 2};
    }
    return {n};
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<size_t> subsystem_dims)
    : matrix_(std::move(matrix)), dims_(std::move(subsystem_dims)) {
    if (!matrix_.is_square() || matrix_.rows() == 0) {
        throw InvalidInput("DensityMatrix: matrix must be square and nonempty");
    }
    size_t product = std::accumulate(dims_.begin(), dims_.end(), size_t{1}, std::multiplies<>());
    if (dims_.empty() || product != matrix_.rows()) {
        throw InvalidInput("DensityMatrix: subsystem dimensions do not multiply to the matrix dimension");
    }
    if (hermiticity_defect(matrix_) > kTolerance) {
        throw InvalidInput("DensityMatrix: not Hermitian within 1e-10");
    }
    double tr = matrix_.trace().real();
    if (std::abs(tr - 1) > kTolerance) {
        throw InvalidInput("DensityMatrix: trace " + std::to_string(tr) + " differs from 1");
    }
    double smallest = hermitian_eig(matrix_).values.front();
    if (smallest < -kTolerance) {
        throw InvalidInput("DensityMatrix: not positive semidefinite (smallest eigenvalue " +
                           std::to_string(smallest) + ")");
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : DensityMatrix(matrix, default_dims(matrix.rows())) {
}

DensityMatrix DensityMatrix::from_pure(std::span<const Complex> ket, std::vector<size_t> subsystem_dims) {
    double norm = 0;
    for (const auto &z : ket) {
        norm += std::norm(z);
    }
    if (std::abs(norm - 1) > kTolerance) {
        throw InvalidInput("DensityMatrix::from_pure: ket is not normalized");
    }
    return DensityMatrix(ComplexMatrix::outer(ket), std::move(subsystem_dims));
}

double DensityMatrix::purity() const {
    return (matrix_ * matrix_).trace().real();
}

void require_two_qubit(const DensityMatrix &rho, const char *op) {
    if (!rho.is_two_qubit()) {
        throw InvalidInput(std::string(op) + ": expected a two-qubit state with dims (2, 2)");
    }
}

DensityMatrix bell_phi() {
    std::vector<Complex> ket{M_SQRT1_2, 0, 0, M_SQRT1_2};
    return DensityMatrix::from_pure(ket, {2, 2});
}

DensityMatrix werner(double r) {
    if (!(r >= 0 && r <= 1)) {
        throw InvalidInput("werner: r must lie in [0, 1]");
    }
    ComplexMatrix m = ComplexMatrix::identity(4);
    m += r * kron(pauli::x(), pauli::x());
    m -= r * kron(pauli::y(), pauli::y());
    m += r * kron(pauli::z(), pauli::z());
    m *= 0.25;
    return DensityMatrix(std::move(m), {2, 2});
}

DensityMatrix maximally_mixed(size_t qubits) {
    size_t n = size_t{1} << qubits;
    ComplexMatrix m = ComplexMatrix::identity(n);
    m *= 1.0 / static_cast<double>(n);
    return DensityMatrix(std::move(m), std::vector<size_t>(qubits, 2));
}

DensityMatrix schmidt_state(double theta) {
    std::vector<Complex> ket{std::cos(theta), 0, 0, std::sin(theta)};
    return DensityMatrix::from_pure(ket, {2, 2});
}

DensityMatrix qubit_from_bloch(double x, double y, double z) {
    if (x * x + y * y + z * z > 1 + 1e-12) {
        throw InvalidInput("qubit_from_bloch: Bloch vector longer than 1");
    }
    ComplexMatrix m = ComplexMatrix::identity(2);
    m += x * pauli::x();
    m += y * pauli::y();
    m += z * pauli::z();
    m *= 0.5;
    return DensityMatrix(std::move(m), {2});
}

}  // namespace qipflow
