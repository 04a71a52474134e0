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

#include "qipflow/channels/maps.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qipflow/errors.h"

namespace qipflow {

namespace {

constexpr double kParamSlack = 1e-12;

void check_dephasing(double factor) {
    if (!(factor >= -kParamSlack && factor <= 1 + kParamSlack)) {
        throw InvalidInput("dephasing factor must lie in [0, 1], got " + std::to_string(factor));
    }
}

void check_damping(Complex amplitude) {
    if (!(std::abs(amplitude) <= 1 + kParamSlack)) {
        throw InvalidInput("damping amplitude must satisfy |J| <= 1, got |J| = " + std::to_string(std::abs(amplitude)));
    }
}

ComplexMatrix lift(const ComplexMatrix &k, size_t ancilla_dim) {
    return kron(k, ComplexMatrix::identity(ancilla_dim));
}

DensityMatrix apply_kraus(const std::array<ComplexMatrix, 2> &kraus, const DensityMatrix &rho) {
    size_t n = rho.dim();
    if (n % 2 != 0 || rho.subsystem_dims().empty() || rho.subsystem_dims().front() != 2) {
        throw InvalidInput("channel acts on a leading qubit; state has incompatible dimensions");
    }
    size_t anc = n / 2;
    ComplexMatrix out = ComplexMatrix::zeros(n, n);
    for (const auto &k : kraus) {
        ComplexMatrix big = lift(k, anc);
        out += big * rho.matrix() * big.adjoint();
    }
    // Remove rounding-level anti-Hermitian residue.
    ComplexMatrix sym = 0.5 * (out + out.adjoint());
    return DensityMatrix(std::move(sym), rho.subsystem_dims());
}

void require_qubit(const DensityMatrix &rho, const char *op) {
    if (rho.dim() != 2) {
        throw InvalidInput(std::string(op) + ": expects a single-qubit state");
    }
}

}  // namespace

std::array<ComplexMatrix, 2> kraus_operators(const MapDescriptor &map) {
    if (const auto *d = std::get_if<DephasingMap>(&map)) {
        check_dephasing(d->factor);
        double g = std::clamp(d->factor, 0.0, 1.0);
        ComplexMatrix k0 = Complex(std::sqrt((1 + g) / 2)) * ComplexMatrix::identity(2);
        ComplexMatrix k1 = Complex(std::sqrt((1 - g) / 2)) * pauli::z();
        return {k0, k1};
    }
    Complex j = std::get<DampingMap>(map).amplitude;
    check_damping(j);
    double a2 = std::min(1.0, std::norm(j));
    ComplexMatrix k0{{1, 0}, {0, std::conj(j)}};
    ComplexMatrix k1{{0, std::sqrt(1 - a2)}, {0, 0}};
    return {k0, k1};
}

DensityMatrix apply_dephasing_system(const DensityMatrix &rho_a, double factor) {
    require_qubit(rho_a, "apply_dephasing_system");
    return apply_kraus(kraus_operators(DephasingMap{factor}), rho_a);
}

DensityMatrix apply_dephasing_joint(const DensityMatrix &rho_ab, double factor) {
    require_two_qubit(rho_ab, "apply_dephasing_joint");
    return apply_kraus(kraus_operators(DephasingMap{factor}), rho_ab);
}

DensityMatrix apply_amplitude_damping_system(const DensityMatrix &rho_a, Complex amplitude) {
    require_qubit(rho_a, "apply_amplitude_damping_system");
    return apply_kraus(kraus_operators(DampingMap{amplitude}), rho_a);
}

DensityMatrix apply_amplitude_damping_joint(const DensityMatrix &rho_ab, Complex amplitude) {
    require_two_qubit(rho_ab, "apply_amplitude_damping_joint");
    return apply_kraus(kraus_operators(DampingMap{amplitude}), rho_ab);
}

DensityMatrix apply_channel(const MapDescriptor &map, const DensityMatrix &rho) {
    return apply_kraus(kraus_operators(map), rho);
}

ComplexMatrix apply_linear(const MapDescriptor &map, const ComplexMatrix &op) {
    size_t n = op.rows();
    if (n != op.cols() || n % 2 != 0 || n == 0) {
        throw InvalidInput("apply_linear: operator must be square with even dimension");
    }
    size_t d = n / 2;
    // Block (x, y) holds <x|_a op |y>_a.
    auto block = [&](ComplexMatrix &m, size_t x, size_t y, size_t i, size_t j) -> Complex & {
        return m(x * d + i, y * d + j);
    };
    ComplexMatrix out = op;
    if (const auto *dp = std::get_if<DephasingMap>(&map)) {
        for (size_t i = 0; i < d; ++i) {
            for (size_t j = 0; j < d; ++j) {
                block(out, 0, 1, i, j) *= dp->factor;
                block(out, 1, 0, i, j) *= dp->factor;
            }
        }
        return out;
    }
    Complex jt = std::get<DampingMap>(map).amplitude;
    double a2 = std::norm(jt);
    ComplexMatrix src = op;
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) {
            block(out, 0, 0, i, j) = block(src, 0, 0, i, j) + (1 - a2) * block(src, 1, 1, i, j);
            block(out, 0, 1, i, j) = jt * block(src, 0, 1, i, j);
            block(out, 1, 0, i, j) = std::conj(jt) * block(src, 1, 0, i, j);
            block(out, 1, 1, i, j) = a2 * block(src, 1, 1, i, j);
        }
    }
    return out;
}

ComplexMatrix choi_matrix(const MapDescriptor &map) {
    const double h = 1 / std::sqrt(2.0);
    std::vector<Complex> phi{h, 0, 0, h};
    return apply_linear(map, ComplexMatrix::outer(phi));
}

std::string describe(const MapDescriptor &map) {
    char buf[96];
    if (const auto *d = std::get_if<DephasingMap>(&map)) {
        std::snprintf(buf, sizeof buf, "dephasing(Gamma=%.6g)", d->factor);
    } else {
        Complex j = std::get<DampingMap>(map).amplitude;
        std::snprintf(buf, sizeof buf, "damping(J=%.6g%+.6gi)", j.real(), j.imag());
    }
    return buf;
}

}  // namespace qipflow
