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

#ifndef QIPFLOW_CHANNELS_MAPS_H
#define QIPFLOW_CHANNELS_MAPS_H

#include <array>
#include <string>
#include <variant>

#include "qipflow/numerics/matrix.h"
#include "qipflow/states/density_matrix.h"

namespace qipflow {

/// Phase-damping map on a qubit: coherences scaled by `factor`.
struct DephasingMap {
    double factor = 1;
};

/// Amplitude-damping map on a qubit with complex amplitude J.
struct DampingMap {
    Complex amplitude = 1;
};

using MapDescriptor = std::variant<DephasingMap, DampingMap>;

/// Kraus operators (on the system qubit) for a physical map. Throws
/// InvalidInput when the parameters do not describe a CPTP map.
std::array<ComplexMatrix, 2> kraus_operators(const MapDescriptor &map);

DensityMatrix apply_dephasing_system(const DensityMatrix &rho_a, double factor);
DensityMatrix apply_dephasing_joint(const DensityMatrix &rho_ab, double factor);
DensityMatrix apply_amplitude_damping_system(const DensityMatrix &rho_a, Complex amplitude);
DensityMatrix apply_amplitude_damping_joint(const DensityMatrix &rho_ab, Complex amplitude);

/// Channel on the first qubit of rho; rho may carry any ancilla dimension.
DensityMatrix apply_channel(const MapDescriptor &map, const DensityMatrix &rho);

/// Linear action of the map on the first qubit of an arbitrary operator of
/// dimension 2*d. Works for non-CP parameters too (used for Choi matrices of
/// intermediate maps).
ComplexMatrix apply_linear(const MapDescriptor &map, const ComplexMatrix &op);

/// (map (x) I)|Phi><Phi| with |Phi> = (|00> + |11>)/sqrt(2). Trace 1.
ComplexMatrix choi_matrix(const MapDescriptor &map);

std::string describe(const MapDescriptor &map);

}  // namespace qipflow

#endif
