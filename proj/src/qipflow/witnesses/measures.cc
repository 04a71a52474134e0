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

#include "qipflow/witnesses/measures.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <numbers>

#include "qipflow/channels/maps.h"
#include "qipflow/errors.h"
#include "qipflow/numerics/calculus.h"
#include "qipflow/states/correlations.h"

namespace qipflow {

namespace {

double hermite(std::span<const double> t, std::span<const double> q, std::span<const double> d, size_t k, double at) {
    double h = t[k + 1] - t[k];
    double s = (at - t[k]) / h;
    double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * q[k] + (s3 - 2 * s2 + s) * h * d[k] + (-2 * s3 + 3 * s2) * q[k + 1] +
           (s3 - s2) * h * d[k + 1];
}

std::string format_label(const char *fmt, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, x);
    return buf;
}

template <typename F>
std::vector<double> monitor(const ChannelTrajectory &traj, F &&quantity) {
    std::vector<double> out;
    out.reserve(traj.size());
    for (size_t i = 0; i < traj.size(); ++i) {
        out.push_back(quantity(traj.map_at(i)));
    }
    return out;
}

}  // namespace

void MeasureReport::validate() const {
    if (!(value >= 0) || !std::isfinite(value)) {
        throw InvalidInput("MeasureReport: value must be finite and nonnegative");
    }
    if (samples.size() != times.size()) {
        throw InvalidInput("MeasureReport: samples and times differ in length");
    }
    double total = 0;
    double prev_end = -std::numeric_limits<double>::infinity();
    for (const auto &iv : intervals) {
        if (!(iv.t_start <= iv.t_end) || iv.t_start < prev_end) {
            throw InvalidInput("MeasureReport: intervals must be ordered and disjoint");
        }
        if (!times.empty() && (iv.t_start < times.front() || iv.t_end > times.back())) {
            throw InvalidInput("MeasureReport: interval outside the time grid");
        }
        prev_end = iv.t_end;
        total += iv.gain();
    }
    if (std::abs(total - value) > 1e-6) {
        throw InvalidInput("MeasureReport: value differs from summed interval gains");
    }
}

std::vector<double> qip_flow(const ChannelTrajectory &traj, const DensityMatrix &rho0, QipConvention convention) {
    require_two_qubit(rho0, "qip_flow");
    return monitor(traj, [&](const MapDescriptor &m) { return qip(apply_channel(m, rho0), convention); });
}

MeasureReport backflow_measure(std::span<const double> times, std::span<const double> q) {
    if (times.size() < 3) {
        throw InvalidInput("backflow_measure: need at least 3 samples");
    }
    std::vector<double> d = sampled_derivative(times, q);
    size_t n = times.size();
    MeasureReport report;
    report.times.assign(times.begin(), times.end());
    report.samples.assign(q.begin(), q.end());
    size_t k = 0;
    while (k < n) {
        if (!(d[k] > 0)) {
            ++k;
            continue;
        }
        size_t a = k;
        while (k + 1 < n && d[k + 1] > 0) {
            ++k;
        }
        size_t b = k;
        ++k;
        BackflowInterval iv;
        if (a == 0) {
            iv.t_start = times[0];
            iv.q_start = q[0];
        } else {
            double frac = -d[a - 1] / (d[a] - d[a - 1]);
            iv.t_start = times[a - 1] + frac * (times[a] - times[a - 1]);
            iv.q_start = hermite(times, q, d, a - 1, iv.t_start);
        }
        if (b == n - 1) {
            iv.t_end = times[n - 1];
            iv.q_end = q[n - 1];
        } else {
            double frac = d[b] / (d[b] - d[b + 1]);
            iv.t_end = times[b] + frac * (times[b + 1] - times[b]);
            iv.q_end = hermite(times, q, d, b, iv.t_end);
        }
        if (iv.gain() > 0) {
            report.value += iv.gain();
            report.intervals.push_back(iv);
        }
    }
    report.validate();
    return report;
}

double n_q_dephasing_analytic(const OhmicSpectralDensity &sd, double t_max, double tol) {
    if (!(t_max > 0)) {
        throw InvalidInput("n_q_dephasing_analytic: t_max must be positive");
    }
    auto rate = [&sd](double t) { return ohmic_rate(sd, t); };
    const size_t samples = std::max<size_t>(10000, static_cast<size_t>(std::ceil(t_max * 400)));
    // Windows where the rate is negative, edges refined by bisection.
    double prev_t = 0;
    bool prev_neg = rate(0) < 0;
    std::vector<std::pair<double, double>> windows;
    double open = prev_neg ? 0.0 : -1.0;
    for (size_t i = 1; i <= samples; ++i) {
        double t = t_max * static_cast<double>(i) / static_cast<double>(samples);
        bool neg = rate(t) < 0;
        if (neg != prev_neg) {
            double lo = prev_t, hi = t;
            for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
                double mid = 0.5 * (lo + hi);
                ((rate(mid) < 0) == prev_neg ? lo : hi) = mid;
            }
            double root = 0.5 * (lo + hi);
            if (neg) {
                open = root;
            } else {
                windows.emplace_back(open, root);
                open = -1;
            }
        }
        prev_t = t;
        prev_neg = neg;
    }
    if (open >= 0) {
        windows.emplace_back(open, t_max);
    }
    double total = 0;
    const double inner_tol = tol * 1e-2;
    for (auto [a, b] : windows) {
        double base = a > 0 ? adaptive_quad(rate, 0, a, inner_tol) : 0.0;
        auto integrand = [&](double t) {
            double g = rate(t);
            double acc = t > a ? adaptive_quad(rate, a, t, inner_tol) : 0.0;
            return -2 * g * std::exp(-2 * (base + acc));
        };
        total += adaptive_quad(integrand, a, b, tol);
    }
    return std::max(0.0, total);
}

MeasureReport n_qip(const ChannelTrajectory &traj, const DensityMatrix &rho0, QipConvention convention,
                    const std::string &label) {
    auto q = qip_flow(traj, rho0, convention);
    MeasureReport report = backflow_measure(traj.times, q);
    report.measure = "qip";
    report.quantity = "Q";
    report.convention = convention;
    report.initial_state = label;
    return report;
}

std::pair<DensityMatrix, DensityMatrix> default_blp_pair(ChannelKind kind) {
    if (kind == ChannelKind::kDephasing) {
        return {qubit_from_bloch(1, 0, 0), qubit_from_bloch(-1, 0, 0)};
    }
    return {qubit_from_bloch(0, 0, 1), qubit_from_bloch(0, 0, -1)};
}

MeasureReport n_blp(const ChannelTrajectory &traj, const std::pair<DensityMatrix, DensityMatrix> &pair,
                    const std::string &label) {
    if (pair.first.dim() != 2 || pair.second.dim() != 2) {
        throw InvalidInput("n_blp: pair must be single-qubit states");
    }
    auto dist = monitor(traj, [&](const MapDescriptor &m) {
        return trace_distance(apply_channel(m, pair.first), apply_channel(m, pair.second));
    });
    MeasureReport report = backflow_measure(traj.times, dist);
    report.measure = "blp";
    report.quantity = "D_trace";
    report.initial_state = label;
    return report;
}

MeasureReport n_mutual(const ChannelTrajectory &traj, const DensityMatrix &rho0, const std::string &label) {
    require_two_qubit(rho0, "n_mutual");
    auto info = monitor(traj, [&](const MapDescriptor &m) { return mutual_information(apply_channel(m, rho0)); });
    MeasureReport report = backflow_measure(traj.times, info);
    report.measure = "mutual";
    report.quantity = "I";
    report.initial_state = label;
    return report;
}

std::vector<double> divisibility_rates(const ChannelTrajectory &traj) {
    std::vector<double> g;
    g.reserve(traj.size() > 0 ? traj.size() - 1 : 0);
    for (size_t i = 0; i + 1 < traj.size(); ++i) {
        double dt = traj.times[i + 1] - traj.times[i];
        try {
            MapDescriptor m = intermediate_map(traj, i, i + 1);
            g.push_back((trace_norm(choi_matrix(m)) - 1) / dt);
        } catch (const SingularIntermediateMap &) {
            g.push_back(std::numeric_limits<double>::quiet_NaN());
        }
    }
    return g;
}

MeasureReport n_rhp(const ChannelTrajectory &traj) {
    if (traj.size() < 2) {
        throw InvalidInput("n_rhp: need at least 2 grid points");
    }
    std::vector<double> g = divisibility_rates(traj);
    MeasureReport report;
    report.measure = "rhp";
    report.quantity = "N_RHP_cumulative";
    report.initial_state = "channel";
    report.times = traj.times;
    report.samples.assign(traj.size(), 0);
    double step = 0;
    double cum = 0;
    std::optional<BackflowInterval> run;
    for (size_t i = 0; i < g.size(); ++i) {
        double t0 = traj.times[i], t1 = traj.times[i + 1];
        step = std::max(step, t1 - t0);
        bool violating = false;
        if (std::isnan(g[i])) {
            report.skipped.emplace_back(t0, t1);
        } else if (g[i] > kRhpThreshold) {
            violating = true;
            if (!run) {
                run = BackflowInterval{t0, t0, cum, cum};
            }
            cum += g[i] * (t1 - t0);
            run->t_end = t1;
            run->q_end = cum;
        }
        if (!violating && run) {
            report.intervals.push_back(*run);
            run.reset();
        }
        report.samples[i + 1] = cum;
    }
    if (run) {
        report.intervals.push_back(*run);
    }
    report.value = cum;
    report.step = step;
    report.validate();
    return report;
}

InitialStateFamily InitialStateFamily::bell() {
    return {Kind::kBell, 1};
}

InitialStateFamily InitialStateFamily::werner_grid(size_t points) {
    if (points < 2) {
        throw InvalidInput("werner_grid: need at least 2 points");
    }
    return {Kind::kWernerGrid, points};
}

InitialStateFamily InitialStateFamily::pure_grid(size_t points) {
    if (points < 2) {
        throw InvalidInput("pure_grid: need at least 2 points");
    }
    return {Kind::kPureGrid, points};
}

InitialStateFamily InitialStateFamily::parse(std::string_view name) {
    if (name == "bell") {
        return bell();
    }
    if (name == "werner_grid") {
        return werner_grid();
    }
    if (name == "pure_grid") {
        return pure_grid();
    }
    throw InvalidInput("unknown family '" + std::string(name) + "' (expected bell, werner_grid or pure_grid)");
}

std::vector<std::pair<std::string, DensityMatrix>> InitialStateFamily::members() const {
    std::vector<std::pair<std::string, DensityMatrix>> out;
    switch (kind) {
        case Kind::kBell:
            out.emplace_back("bell", bell_phi());
            break;
        case Kind::kWernerGrid:
            for (size_t k = 0; k < points; ++k) {
                double r = static_cast<double>(k) / static_cast<double>(points - 1);
                out.emplace_back(format_label("werner(r=%.6g)", r), werner(r));
            }
            break;
        case Kind::kPureGrid:
            for (size_t k = 0; k < points; ++k) {
                double theta = std::numbers::pi / 2 * static_cast<double>(k) / static_cast<double>(points - 1);
                out.emplace_back(format_label("schmidt(theta=%.6g)", theta), schmidt_state(theta));
            }
            break;
    }
    return out;
}

MeasureReport optimize_initial_state(const ChannelTrajectory &traj, const InitialStateFamily &family,
                                     QipConvention convention) {
    auto members = family.members();
    std::vector<std::future<MeasureReport>> jobs;
    jobs.reserve(members.size());
    for (const auto &[label, rho] : members) {
        jobs.push_back(std::async(std::launch::async, [&traj, &label, &rho, convention] {
            return n_qip(traj, rho, convention, label);
        }));
    }
    std::optional<MeasureReport> best;
    for (auto &job : jobs) {
        MeasureReport r = job.get();
        if (!best || r.value > best->value) {
            best = std::move(r);
        }
    }
    return *best;
}

}  // namespace qipflow
