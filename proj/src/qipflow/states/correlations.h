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

#ifndef QIPFLOW_STATES_CORRELATIONS_H
#define QIPFLOW_STATES_CORRELATIONS_H

#include "qipflow/states/density_matrix.h"

namespace qipflow {

/// -sum e log2 e, with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix &rho);

/// Reduced state of one qubit of a two-qubit state (0 = system a, 1 = ancilla b).
DensityMatrix reduced_state(const DensityMatrix &rho_ab, size_t keep);

/// S(a) + S(b) - S(ab), in bits.
double mutual_information(const DensityMatrix &rho_ab);

/// Wootters concurrence.
double concurrence(const DensityMatrix &rho_ab);

/// (1/2) || rho - sigma ||_1
double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma);

}  // namespace qipflow

#endif
