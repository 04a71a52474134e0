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

#ifndef QIPFLOW_QIP_QIP_H
#define QIPFLOW_QIP_QIP_H

#include <array>
#include <string_view>
#include <vector>

#include "qipflow/states/density_matrix.h"

namespace qipflow {

/// Pairs of eigenvalues with e_m + e_n at or below this floor are dropped
/// from the Fisher-information and W-matrix sums.
constexpr double kSpectralCutoff = 1e-12;

/// H_b = r . sigma acting on the ancilla, |r| = 1.
class LocalHamiltonian {
   public:
    explicit LocalHamiltonian(std::array<double, 3> bloch);
    /// Normalizes an arbitrary nonzero direction.
    static LocalHamiltonian along(double x, double y, double z);

    const std::array<double, 3> &bloch() const {
        return bloch_;
    }
    /// 2x2 matrix r . sigma.
    ComplexMatrix matrix() const;

   private:
    std::array<double, 3> bloch_;
};

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Real symmetric 3x3 matrix whose largest eigenvalue fixes the QIP.
struct WMatrix {
    Matrix3 entries{};

    /// Ascending eigenvalues.
    std::array<double, 3> eigenvalues() const;
    double max_eigenvalue() const;
};

enum class QipConvention {
    /// Q = 1 - lambda_max
    kLinear,
    /// Q = sqrt(1 - lambda_max)
    kSqrt,
};

std::string_view convention_name(QipConvention c);
QipConvention parse_convention(std::string_view name);

/// Quantum Fisher information of rho_ab for the generator I_a (x) H_b.
double fisher_information(const DensityMatrix &rho_ab, const LocalHamiltonian &h);

WMatrix w_matrix(const DensityMatrix &rho_ab);

/// I - W, assembled from the Fisher weights (e_m - e_n)^2 / (e_m + e_n) so
/// that small values of 1 - lambda_max do not suffer cancellation. The
/// minimum of F/4 over directions is its smallest eigenvalue.
WMatrix fisher_complement_matrix(const DensityMatrix &rho_ab);

/// 1 - lambda_max(W).
double qip(const DensityMatrix &rho_ab);
/// sqrt(1 - lambda_max(W)).
double qip_sqrt(const DensityMatrix &rho_ab);
double qip(const DensityMatrix &rho_ab, QipConvention convention);

/// Quasi-uniform deterministic directions on the unit sphere.
std::vector<std::array<double, 3>> fibonacci_sphere(size_t n);

/// min over `n_dirs` Fibonacci-sphere directions of F/4. An upper bound on
/// qip() that converges to it as n_dirs grows. Requires n_dirs >= 100.
double qip_bruteforce(const DensityMatrix &rho_ab, size_t n_dirs);

}  // namespace qipflow

#endif
