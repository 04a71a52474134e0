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

#include "qipflow/states/correlations.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "qipflow/errors.h"

namespace qipflow {

double von_neumann_entropy(const DensityMatrix &rho) {
    double s = 0;
    for (double e : hermitian_eig(rho.matrix()).values) {
        if (e > 0) {
            s -= e * std::log2(e);
        }
    }
    return std::max(0.0, s);
}

DensityMatrix reduced_state(const DensityMatrix &rho_ab, size_t keep) {
    require_two_qubit(rho_ab, "reduced_state");
    return DensityMatrix(partial_trace(rho_ab.matrix(), keep), {2});
}

double mutual_information(const DensityMatrix &rho_ab) {
    require_two_qubit(rho_ab, "mutual_information");
    double total = von_neumann_entropy(reduced_state(rho_ab, 0)) + von_neumann_entropy(reduced_state(rho_ab, 1)) -
                   von_neumann_entropy(rho_ab);
    return std::max(0.0, total);
}

double concurrence(const DensityMatrix &rho_ab) {
    require_two_qubit(rho_ab, "concurrence");
    const ComplexMatrix &rho = rho_ab.matrix();
    ComplexMatrix yy = kron(pauli::y(), pauli::y());
    ComplexMatrix flipped = yy * rho.conjugate() * yy;

    // sqrt(rho) flipped sqrt(rho) is Hermitian PSD and shares its spectrum
    // with rho * flipped.
    ComplexMatrix root = hermitian_function(hermitian_eig(rho), [](double e) { return std::sqrt(std::max(0.0, e)); });
    ComplexMatrix r = root * flipped * root;
    ComplexMatrix sym = r + r.adjoint();
    sym *= 0.5;

    std::vector<double> lambdas;
    for (double e : hermitian_eig(sym).values) {
        lambdas.push_back(std::sqrt(std::max(0.0, e)));
    }
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    double c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
    return std::clamp(c, 0.0, 1.0);
}

double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw InvalidInput("trace_distance: dimension mismatch");
    }
    return 0.5 * trace_norm(rho.matrix() - sigma.matrix());
}

}  // namespace qipflow
