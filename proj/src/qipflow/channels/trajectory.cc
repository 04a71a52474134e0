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

#include "qipflow/channels/trajectory.h"

#include <cmath>

#include "qipflow/channels/volterra.h"
#include "qipflow/errors.h"

namespace qipflow {

namespace {

void check_grid(std::span<const double> times, const char *op) {
    if (times.empty()) {
        throw InvalidInput(std::string(op) + ": empty time grid");
    }
    if (times[0] != 0) {
        throw InvalidInput(std::string(op) + ": time grid must start at 0");
    }
    for (size_t k = 1; k < times.size(); ++k) {
        if (!(times[k] > times[k - 1])) {
            throw InvalidInput(std::string(op) + ": time grid must be strictly increasing");
        }
    }
}

}  // namespace

std::string_view channel_name(ChannelKind kind) {
    return kind == ChannelKind::kDephasing ? "dephasing" : "damping";
}

ChannelKind parse_channel(std::string_view name) {
    if (name == "dephasing") {
        return ChannelKind::kDephasing;
    }
    if (name == "damping") {
        return ChannelKind::kDamping;
    }
    throw InvalidInput("unknown channel '" + std::string(name) + "' (expected dephasing or damping)");
}

MapDescriptor ChannelTrajectory::map_at(size_t i) const {
    if (kind == ChannelKind::kDephasing) {
        return DephasingMap{factor.at(i)};
    }
    return DampingMap{amplitude.at(i)};
}

std::string_view ChannelTrajectory::time_unit() const {
    return kind == ChannelKind::kDephasing ? "1/omega_c" : "1/gamma0";
}

void ChannelTrajectory::validate() const {
    check_grid(times, "ChannelTrajectory");
    size_t n = times.size();
    if (kind == ChannelKind::kDephasing) {
        if (rate.size() != n || factor.size() != n || log_factor.size() != n) {
            throw InvalidInput("ChannelTrajectory: dephasing sample count mismatch");
        }
        if (factor[0] != 1) {
            throw InvalidInput("ChannelTrajectory: Gamma(0) must be 1");
        }
        for (size_t k = 0; k < n; ++k) {
            if (!(factor[k] >= 0 && factor[k] <= 1 + 1e-12) || !std::isfinite(rate[k])) {
                throw InvalidInput("ChannelTrajectory: Gamma out of range at t=" + std::to_string(times[k]));
            }
        }
    } else {
        if (amplitude.size() != n) {
            throw InvalidInput("ChannelTrajectory: damping sample count mismatch");
        }
        if (std::abs(amplitude[0] - Complex(1)) > 1e-12) {
            throw InvalidInput("ChannelTrajectory: J(0) must be 1");
        }
        for (size_t k = 0; k < n; ++k) {
            if (!(std::abs(amplitude[k]) <= 1 + 1e-9)) {
                throw InvalidInput("ChannelTrajectory: |J| > 1 at t=" + std::to_string(times[k]));
            }
        }
    }
}

ChannelTrajectory dephasing_trajectory(const OhmicSpectralDensity &sd, std::span<const double> times, double tol) {
    check_grid(times, "dephasing_trajectory");
    ChannelTrajectory traj;
    traj.kind = ChannelKind::kDephasing;
    traj.times.assign(times.begin(), times.end());
    size_t n = times.size();
    traj.rate.resize(n);
    traj.factor.resize(n);
    traj.log_factor.resize(n);
    double per_interval = n > 1 ? tol / static_cast<double>(n - 1) : tol;
    double integral = 0;
    for (size_t k = 0; k < n; ++k) {
        if (k > 0) {
            integral += integrated_ohmic_rate(sd, times[k - 1], times[k], per_interval);
        }
        traj.rate[k] = ohmic_rate(sd, times[k]);
        traj.log_factor[k] = -2 * integral;
        traj.factor[k] = std::exp(traj.log_factor[k]);
    }
    return traj;
}

ChannelTrajectory damping_trajectory(const LorentzianSpectralDensity &sd, std::span<const double> times) {
    check_grid(times, "damping_trajectory");
    ChannelTrajectory traj;
    traj.kind = ChannelKind::kDamping;
    traj.times.assign(times.begin(), times.end());
    traj.amplitude.reserve(times.size());
    for (double t : times) {
        traj.amplitude.push_back(lorentzian_jt(sd, t));
    }
    return traj;
}

ChannelTrajectory damping_trajectory_volterra(const LorentzianSpectralDensity &sd, std::span<const double> times) {
    check_grid(times, "damping_trajectory_volterra");
    ChannelTrajectory traj;
    traj.kind = ChannelKind::kDamping;
    traj.times.assign(times.begin(), times.end());
    traj.amplitude = solve_volterra_jt(sd, times).values;
    return traj;
}

MapDescriptor intermediate_map(const ChannelTrajectory &traj, size_t i, size_t j) {
    if (i >= traj.size() || j >= traj.size() || j < i) {
        throw InvalidInput("intermediate_map: need i <= j < size");
    }
    if (traj.kind == ChannelKind::kDephasing) {
        if (i == j) {
            return DephasingMap{1};
        }
        return DephasingMap{std::exp(traj.log_factor[j] - traj.log_factor[i])};
    }
    if (i == j) {
        return DampingMap{1};
    }
    Complex ji = traj.amplitude[i];
    if (std::abs(ji) < kSingularAmplitude) {
        throw SingularIntermediateMap("intermediate_map: |J| < 1e-12 at t=" + std::to_string(traj.times[i]));
    }
    return DampingMap{traj.amplitude[j] / ji};
}

CsvTable trajectory_to_csv(const ChannelTrajectory &traj) {
    CsvTable table;
    table.metadata.emplace_back("time_unit", std::string(traj.time_unit()));
    table.metadata.emplace_back("channel", std::string(channel_name(traj.kind)));
    if (traj.kind == ChannelKind::kDephasing) {
        table.header = {"t", "gamma", "Gamma"};
        for (size_t k = 0; k < traj.size(); ++k) {
            table.rows.push_back({traj.times[k], traj.rate[k], traj.factor[k]});
        }
    } else {
        table.header = {"t", "ReJ", "ImJ", "absJ"};
        for (size_t k = 0; k < traj.size(); ++k) {
            // Modulus of the printed components, so a re-read file re-emits identically.
            Complex j(quantize(traj.amplitude[k].real()), quantize(traj.amplitude[k].imag()));
            table.rows.push_back({traj.times[k], j.real(), j.imag(), std::abs(j)});
        }
    }
    return table;
}

ChannelTrajectory trajectory_from_csv(const CsvTable &table) {
    ChannelTrajectory traj;
    bool damping = false;
    for (const auto &h : table.header) {
        damping = damping || h == "ReJ";
    }
    traj.kind = damping ? ChannelKind::kDamping : ChannelKind::kDephasing;
    size_t ct = table.column("t");
    if (damping) {
        size_t cr = table.column("ReJ");
        size_t ci = table.column("ImJ");
        for (const auto &row : table.rows) {
            traj.times.push_back(row[ct]);
            traj.amplitude.emplace_back(row[cr], row[ci]);
        }
    } else {
        size_t cg = table.column("gamma");
        size_t cf = table.column("Gamma");
        for (const auto &row : table.rows) {
            traj.times.push_back(row[ct]);
            traj.rate.push_back(row[cg]);
            traj.factor.push_back(row[cf]);
            traj.log_factor.push_back(std::log(row[cf]));
        }
    }
    traj.validate();
    return traj;
}

}  // namespace qipflow
