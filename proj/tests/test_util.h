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

#ifndef QIPFLOW_TESTS_TEST_UTIL_H
#define QIPFLOW_TESTS_TEST_UTIL_H

#include <cmath>
#include <random>
#include <vector>

#include "qipflow/numerics/matrix.h"

namespace qipflow::testing {

inline std::mt19937_64 &rng() {
    static std::mt19937_64 engine(20140817);
    return engine;
}

inline ComplexMatrix random_gaussian_matrix(size_t rows, size_t cols) {
    std::normal_distribution<double> normal;
    ComplexMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m(r, c) = Complex(normal(rng()), normal(rng()));
        }
    }
    return m;
}

inline ComplexMatrix random_hermitian(size_t n) {
    ComplexMatrix g = random_gaussian_matrix(n, n);
    ComplexMatrix h = g + g.adjoint();
    h *= 0.5;
    return h;
}

/// Haar-ish unitary from Gram-Schmidt on a Ginibre matrix.
inline ComplexMatrix random_unitary(size_t n) {
    ComplexMatrix g = random_gaussian_matrix(n, n);
    for (size_t c = 0; c < n; c++) {
        for (size_t prev = 0; prev < c; prev++) {
            Complex overlap = 0;
            for (size_t r = 0; r < n; r++) {
                overlap += std::conj(g(r, prev)) * g(r, c);
            }
            for (size_t r = 0; r < n; r++) {
                g(r, c) -= overlap * g(r, prev);
            }
        }
        double norm = 0;
        for (size_t r = 0; r < n; r++) {
            norm += std::norm(g(r, c));
        }
        norm = std::sqrt(norm);
        for (size_t r = 0; r < n; r++) {
            g(r, c) /= norm;
        }
    }
    return g;
}

/// Normalized G G^dagger for Gaussian G: full-rank random density matrix.
inline ComplexMatrix random_density_matrix(size_t n) {
    ComplexMatrix g = random_gaussian_matrix(n, n);
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    return rho;
}

inline std::vector<Complex> random_pure_vector(size_t n) {
    ComplexMatrix g = random_gaussian_matrix(n, 1);
    double norm = g.frobenius_norm();
    std::vector<Complex> v(n);
    for (size_t k = 0; k < n; k++) {
        v[k] = g(k, 0) / norm;
    }
    return v;
}

}  // namespace qipflow::testing

#endif
