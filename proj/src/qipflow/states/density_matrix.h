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

#ifndef QIPFLOW_STATES_DENSITY_MATRIX_H
#define QIPFLOW_STATES_DENSITY_MATRIX_H

#include <span>
#include <string>
#include <vector>

#include "qipflow/numerics/matrix.h"

namespace qipflow {

/// A validated density matrix. Construction checks Hermiticity, unit trace
/// and positivity (each to 1e-10) and throws InvalidInput naming the failed
/// check. Two-qubit states use the basis |00>,|01>,|10>,|11> with the first
/// label the system (a) and the second the ancilla (b).
class DensityMatrix {
   public:
    static constexpr double kTolerance = 1e-10;

    DensityMatrix(ComplexMatrix matrix, std::vector<size_t> subsystem_dims);
    /// Single qubit or (2, 2) depending on the dimension.
    explicit DensityMatrix(ComplexMatrix matrix);

    static DensityMatrix from_pure(std::span<const Complex> ket, std::vector<size_t> subsystem_dims);

    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    const std::vector<size_t> &subsystem_dims() const {
        return dims_;
    }
    size_t dim() const {
        return matrix_.rows();
    }
    bool is_two_qubit() const {
        return dims_.size() == 2 && dims_[0] == 2 && dims_[1] == 2;
    }
    const Complex &operator()(size_t r, size_t c) const {
        return matrix_(r, c);
    }
    double purity() const;

   private:
    ComplexMatrix matrix_;
    std::vector<size_t> dims_;
};

/// Throws InvalidInput unless `rho` is a (2, 2) state. `op` names the caller.
void require_two_qubit(const DensityMatrix &rho, const char *op);

DensityMatrix bell_phi();
/// (I + r (sx sx - sy sy + sz sz)) / 4 for r in [0, 1].
DensityMatrix werner(double r);
DensityMatrix maximally_mixed(size_t qubits);
/// cos(theta)|00> + sin(theta)|11>.
DensityMatrix schmidt_state(double theta);
/// Qubit state with Bloch vector (x, y, z), |r| <= 1.
DensityMatrix qubit_from_bloch(double x, double y, double z);

}  // namespace qipflow

#endif
