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

#ifndef QIPFLOW_CHANNELS_VOLTERRA_H
#define QIPFLOW_CHANNELS_VOLTERRA_H

#include <functional>
#include <span>
#include <vector>

#include "qipflow/channels/spectral.h"
#include "qipflow/numerics/matrix.h"

namespace qipflow {

struct VolterraOptions {
    /// Accept once doubling the internal resolution moves no sample by more.
    double refine_tol = 1e-5;
    /// Past the resolution cap, fail if the last refinement moved a sample by more.
    double fail_tol = 1e-4;
    size_t max_internal_points = 48000;
};

struct VolterraSolution {
    std::vector<Complex> values;
    /// Internal steps per output step in the accepted solve.
    size_t substeps = 0;
    /// Max change between the last two refinement levels.
    double refinement_change = 0;
};

/// Solves y'(t) = -int_0^t f(t - tau) y(tau) dtau, y(0) = 1, on a uniform grid
/// starting at 0. Trapezoid rule in the memory integral, implicit trapezoid in
/// time; internal steps are halved (with Richardson extrapolation between
/// levels) until the result settles.
VolterraSolution solve_volterra(const std::function<Complex(double)> &kernel, std::span<const double> times,
                                const VolterraOptions &opts = {});

VolterraSolution solve_volterra_jt(const LorentzianSpectralDensity &sd, std::span<const double> times,
                                   const VolterraOptions &opts = {});

}  // namespace qipflow

#endif
