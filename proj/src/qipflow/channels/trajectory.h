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

#ifndef QIPFLOW_CHANNELS_TRAJECTORY_H
#define QIPFLOW_CHANNELS_TRAJECTORY_H

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qipflow/channels/maps.h"
#include "qipflow/channels/spectral.h"
#include "qipflow/io/csv.h"

namespace qipflow {

enum class ChannelKind { kDephasing, kDamping };

std::string_view channel_name(ChannelKind kind);
ChannelKind parse_channel(std::string_view name);

/// Cumulative map Omega(t, 0) sampled on a time grid starting at 0.
struct ChannelTrajectory {
    ChannelKind kind = ChannelKind::kDephasing;
    std::vector<double> times;
    // Dephasing only.
    std::vector<double> rate;
    std::vector<double> factor;
    /// ln Gamma, kept separately so ratios survive underflow of Gamma.
    std::vector<double> log_factor;
    // Damping only.
    std::vector<Complex> amplitude;

    size_t size() const {
        return times.size();
    }
    MapDescriptor map_at(size_t i) const;
    /// "1/omega_c" or "1/gamma0".
    std::string_view time_unit() const;
    /// Throws InvalidInput if the samples are inconsistent.
    void validate() const;
};

/// Grid must start at 0 and increase strictly. Gamma(t) is accumulated
/// interval by interval with adaptive quadrature.
ChannelTrajectory dephasing_trajectory(const OhmicSpectralDensity &sd, std::span<const double> times, double tol);

/// Closed-form amplitudes.
ChannelTrajectory damping_trajectory(const LorentzianSpectralDensity &sd, std::span<const double> times);

/// Amplitudes from the integro-differential equation (uniform grid).
ChannelTrajectory damping_trajectory_volterra(const LorentzianSpectralDensity &sd, std::span<const double> times);

/// Omega(t_j, t_i) = Omega(t_j, 0) Omega(t_i, 0)^{-1}. Throws
/// SingularIntermediateMap when the damping amplitude at t_i is below 1e-12.
MapDescriptor intermediate_map(const ChannelTrajectory &traj, size_t i, size_t j);

constexpr double kSingularAmplitude = 1e-12;

CsvTable trajectory_to_csv(const ChannelTrajectory &traj);
ChannelTrajectory trajectory_from_csv(const CsvTable &table);

}  // namespace qipflow

#endif
