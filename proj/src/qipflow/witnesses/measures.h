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

#ifndef QIPFLOW_WITNESSES_MEASURES_H
#define QIPFLOW_WITNESSES_MEASURES_H

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qipflow/channels/spectral.h"
#include "qipflow/channels/trajectory.h"
#include "qipflow/qip/qip.h"
#include "qipflow/states/density_matrix.h"

namespace qipflow {

/// A window where the monitored quantity grows, with its values at the edges.
struct BackflowInterval {
    double t_start = 0;
    double t_end = 0;
    double q_start = 0;
    double q_end = 0;

    double gain() const {
        return q_end - q_start;
    }
};

struct MeasureReport {
    /// "qip", "blp", "mutual" or "rhp".
    std::string measure;
    double value = 0;
    std::vector<BackflowInterval> intervals;
    std::vector<double> times;
    /// Monitored quantity on `times`.
    std::vector<double> samples;
    /// Name of the monitored quantity (CSV column).
    std::string quantity;
    std::optional<QipConvention> convention;
    std::string initial_state;
    /// Step used for the divisibility measure.
    std::optional<double> step;
    /// Grid steps skipped because the intermediate map was singular.
    std::vector<std::pair<double, double>> skipped;

    /// Throws InvalidInput if value < 0, intervals overlap or leave the grid,
    /// or value differs from the summed interval gains by more than 1e-6.
    void validate() const;
};

/// Q of (Omega(t) (x) I) rho0 at every grid time.
std::vector<double> qip_flow(const ChannelTrajectory &traj, const DensityMatrix &rho0, QipConvention convention);

/// Sum of the rises of a sampled quantity. The derivative is estimated from
/// the samples; interval edges are placed at interpolated sign changes of the
/// derivative and the quantity there is taken from a cubic Hermite
/// interpolant. Needs at least 3 samples.
MeasureReport backflow_measure(std::span<const double> times, std::span<const double> q_samples);

/// -2 int_{gamma < 0} Gamma gamma dt over [0, t_max], by nested adaptive
/// quadrature; windows located by bisection on sign changes of the rate.
double n_q_dephasing_analytic(const OhmicSpectralDensity &sd, double t_max, double tol);

/// QIP backflow for one initial state.
MeasureReport n_qip(const ChannelTrajectory &traj, const DensityMatrix &rho0, QipConvention convention,
                    const std::string &label);

/// Default distinguishability pair: |+>,|-> for dephasing, |0>,|1> for damping.
std::pair<DensityMatrix, DensityMatrix> default_blp_pair(ChannelKind kind);

/// Trace-distance backflow of two evolved system states.
MeasureReport n_blp(const ChannelTrajectory &traj, const std::pair<DensityMatrix, DensityMatrix> &pair,
                    const std::string &label = "pair");

/// Mutual-information backflow of the evolved joint state.
MeasureReport n_mutual(const ChannelTrajectory &traj, const DensityMatrix &rho0, const std::string &label);

/// Steps with g > this threshold count as divisibility violations.
constexpr double kRhpThreshold = 1e-10;

/// Divisibility measure: sum over grid steps of (||Choi(step map)||_1 - 1)
/// where positive. Singular steps are skipped and listed.
MeasureReport n_rhp(const ChannelTrajectory &traj);

/// Per-step values g_i = (||Choi(Omega(t_{i+1}, t_i))||_1 - 1) / dt; NaN for
/// singular steps.
std::vector<double> divisibility_rates(const ChannelTrajectory &traj);

struct InitialStateFamily {
    enum class Kind { kBell, kWernerGrid, kPureGrid };
    Kind kind = Kind::kBell;
    size_t points = 1;

    static InitialStateFamily bell();
    /// r = k / (points - 1), k = 0..points-1.
    static InitialStateFamily werner_grid(size_t points = 21);
    /// cos(theta)|00> + sin(theta)|11>, theta uniform on [0, pi/2].
    static InitialStateFamily pure_grid(size_t points = 64);
    static InitialStateFamily parse(std::string_view name);

    std::vector<std::pair<std::string, DensityMatrix>> members() const;
};

/// Largest QIP backflow over the family (a lower bound on the optimum).
/// Members are evaluated concurrently; ties go to the earliest member.
MeasureReport optimize_initial_state(const ChannelTrajectory &traj, const InitialStateFamily &family,
                                     QipConvention convention);

}  // namespace qipflow

#endif
