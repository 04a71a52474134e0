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

#include "qipflow/qip/qip.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qipflow/errors.h"

namespace qipflow {

namespace {

/// Spectral data of rho_ab together with the ancilla Pauli operators
/// expressed in its eigenbasis: paulis[i](m, n) = <phi_m| I (x) sigma_i |phi_n>.
struct SpectralFrame {
    std::vector<double> values;
    std::array<ComplexMatrix, 3> paulis;

    explicit SpectralFrame(const DensityMatrix &rho_ab) {
        require_two_qubit(rho_ab, "qip");
        auto eig = hermitian_eig(rho_ab.matrix());
        values = eig.values;
        for (auto &e : values) {
            e = std::max(0.0, e);
        }
        std::array<ComplexMatrix, 3> sigma{pauli::x(), pauli::y(), pauli::z()};
        ComplexMatrix vdag = eig.vectors.adjoint();
        for (size_t i = 0; i < 3; i++) {
            paulis[i] = vdag * kron(ComplexMatrix::identity(2), sigma[i]) * eig.vectors;
        }
    }

    template <typename Weight>
    WMatrix weighted_form(Weight &&weight) const {
        WMatrix w;
        for (size_t i = 0; i < 3; i++) {
            for (size_t j = i; j < 3; j++) {
                double total = 0;
                for (size_t m = 0; m < 4; m++) {
                    for (size_t n = 0; n < 4; n++) {
                        double sum = values[m] + values[n];
                        if (sum <= kSpectralCutoff) {
                            continue;
                        }
                        total += weight(values[m], values[n]) * (paulis[i](m, n) * paulis[j](n, m)).real();
                    }
                }
                w.entries[i][j] = total;
                w.entries[j][i] = total;
            }
        }
        return w;
    }

    /// Sum over unordered pairs m < n (half the ordered sum).
    double fisher(const std::array<double, 3> &r) const {
        double total = 0;
        for (size_t m = 0; m < 4; m++) {
            for (size_t n = m + 1; n < 4; n++) {
                double sum = values[m] + values[n];
                if (sum <= kSpectralCutoff) {
                    continue;
                }
                Complex h = r[0] * paulis[0](m, n) + r[1] * paulis[1](m, n) + r[2] * paulis[2](m, n);
                double diff = values[m] - values[n];
                total += diff * diff / sum * std::norm(h);
            }
        }
        return 4 * total;
    }
};

}  // namespace

LocalHamiltonian::LocalHamiltonian(std::array<double, 3> bloch) : bloch_(bloch) {
    double norm = std::sqrt(bloch[0] * bloch[0] + bloch[1] * bloch[1] + bloch[2] * bloch[2]);
    if (std::abs(norm - 1) > 1e-12) {
        throw InvalidInput("LocalHamiltonian: Bloch vector must have unit norm (got " + std::to_string(norm) + ")");
    }
}

LocalHamiltonian LocalHamiltonian::along(double x, double y, double z) {
    double norm = std::sqrt(x * x + y * y + z * z);
    if (!(norm > 0)) {
        throw InvalidInput("LocalHamiltonian::along: zero direction");
    }
    return LocalHamiltonian({x / norm, y / norm, z / norm});
}

ComplexMatrix LocalHamiltonian::matrix() const {
    ComplexMatrix m = bloch_[0] * pauli::x();
    m += bloch_[1] * pauli::y();
    m += bloch_[2] * pauli::z();
    return m;
}

std::array<double, 3> WMatrix::eigenvalues() const {
    ComplexMatrix m(3, 3);
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 3; j++) {
            m(i, j) = entries[i][j];
        }
    }
    auto values = hermitian_eig(m).values;
    return {values[0], values[1], values[2]};
}

double WMatrix::max_eigenvalue() const {
    return eigenvalues()[2];
}

std::string_view convention_name(QipConvention c) {
    return c == QipConvention::kLinear ? "eq4" : "sqrt";
}

QipConvention parse_convention(std::string_view name) {
    if (name == "eq4") {
        return QipConvention::kLinear;
    }
    if (name == "sqrt") {
        return QipConvention::kSqrt;
    }
    throw InvalidInput("unknown QIP convention '" + std::string(name) + "' (expected eq4 or sqrt)");
}

double fisher_information(const DensityMatrix &rho_ab, const LocalHamiltonian &h) {
    return SpectralFrame(rho_ab).fisher(h.bloch());
}

WMatrix w_matrix(const DensityMatrix &rho_ab) {
    return SpectralFrame(rho_ab).weighted_form([](double em, double en) { return 2 * em * en / (em + en); });
}

WMatrix fisher_complement_matrix(const DensityMatrix &rho_ab) {
    return SpectralFrame(rho_ab).weighted_form([](double em, double en) {
        double d = em - en;
        return 0.5 * d * d / (em + en);
    });
}

double qip(const DensityMatrix &rho_ab) {
    double smallest = fisher_complement_matrix(rho_ab).eigenvalues()[0];
    return std::clamp(smallest, 0.0, 1.0);
}

double qip_sqrt(const DensityMatrix &rho_ab) {
    return std::sqrt(qip(rho_ab));
}

double qip(const DensityMatrix &rho_ab, QipConvention convention) {
    return convention == QipConvention::kLinear ? qip(rho_ab) : qip_sqrt(rho_ab);
}

std::vector<std::array<double, 3>> fibonacci_sphere(size_t n) {
    std::vector<std::array<double, 3>> dirs(n);
    const double golden_angle = std::numbers::pi * (3 - std::sqrt(5.0));
    for (size_t k = 0; k < n; k++) {
        double z = 1 - (2 * static_cast<double>(k) + 1) / static_cast<double>(n);
        double rho = std::sqrt(std::max(0.0, 1 - z * z));
        double phi = golden_angle * static_cast<double>(k);
        dirs[k] = {rho * std::cos(phi), rho * std::sin(phi), z};
    }
    return dirs;
}

double qip_bruteforce(const DensityMatrix &rho_ab, size_t n_dirs) {
    if (n_dirs < 100) {
        throw InvalidInput("qip_bruteforce: n_dirs must be at least 100");
    }
    SpectralFrame frame(rho_ab);
    double best = std::numeric_limits<double>::infinity();
    for (const auto &r : fibonacci_sphere(n_dirs)) {
        best = std::min(best, frame.fisher(r) / 4);
    }
    return best;
}

}  // namespace qipflow
