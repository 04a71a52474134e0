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

#include <cmath>
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"
#include "qipflow/errors.h"
#include "qipflow/numerics/calculus.h"
#include "qipflow/states/correlations.h"
#include "qipflow/witnesses/measures.h"
#include "qipflow/witnesses/report_io.h"

using namespace qipflow;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<double> &dephasing_grid() {
    static const std::vector<double> grid = uniform_grid(0, 50, 4001);
    return grid;
}

const std::vector<double> &damping_grid() {
    static const std::vector<double> grid = uniform_grid(0, 60, 6001);
    return grid;
}

ChannelTrajectory dephasing(double s, double alpha = 1) {
    return dephasing_trajectory(OhmicSpectralDensity(alpha, 1, s), dephasing_grid(), 1e-8);
}

ChannelTrajectory damping(double lambda, double delta = 0.01) {
    return damping_trajectory(LorentzianSpectralDensity(1, lambda, delta), damping_grid());
}

/// Gamma(b) - Gamma(a) summed over the negative-rate windows: the integral of
/// -2 Gamma gamma evaluated through its antiderivative.
double dephasing_backflow_by_antiderivative(const OhmicSpectralDensity &sd, double t_max) {
    auto grid = uniform_grid(0, t_max, 200001);
    double total = 0;
    double start = -1;
    for (size_t k = 0; k < grid.size(); ++k) {
        bool neg = ohmic_rate(sd, grid[k]) < 0;
        if (neg && start < 0) {
            start = grid[k];
        }
        bool closes = start >= 0 && (!neg || k + 1 == grid.size());
        if (closes) {
            // Gamma is extremal where the rate vanishes; the sampled edges
            // are within 2.5e-4 of it, so the error is second order.
            total += dephasing_factor(sd, grid[k], 1e-13) - dephasing_factor(sd, start, 1e-13);
            start = -1;
        }
    }
    return total;
}

}  // namespace

TEST(qip_flow, dephased_bell_follows_gamma) {
    auto traj = dephasing(3, 0.1);
    auto q = qip_flow(traj, bell_phi(), QipConvention::kSqrt);
    for (size_t k = 0; k < q.size(); ++k) {
        ASSERT_NEAR(q[k], traj.factor[k], 1e-9) << traj.times[k];
    }
    auto q4 = qip_flow(traj, bell_phi(), QipConvention::kLinear);
    for (size_t k = 0; k < q.size(); k += 50) {
        EXPECT_NEAR(q4[k], traj.factor[k] * traj.factor[k], 1e-9);
    }
}

TEST(qip_flow, werner_one_under_damping_follows_amplitude) {
    for (double lam : {10.0, 0.5, 0.1}) {
        auto traj = damping(lam);
        auto q = qip_flow(traj, werner(1), QipConvention::kSqrt);
        for (size_t k = 0; k < q.size(); ++k) {
            ASSERT_NEAR(q[k], std::abs(traj.amplitude[k]), 1e-8) << lam << " t=" << traj.times[k];
        }
    }
}

TEST(qip_flow, maximally_mixed_input_stays_zero) {
    for (const auto &traj : {dephasing(3), damping(0.1)}) {
        for (double v : qip_flow(traj, maximally_mixed(2), QipConvention::kSqrt)) {
            ASSERT_NEAR(v, 0, 1e-12);
        }
    }
}

TEST(backflow, monotone_samples_give_zero) {
    auto t = uniform_grid(0, 5, 101);
    std::vector<double> q;
    for (double x : t) {
        q.push_back(std::exp(-x));
    }
    auto r = backflow_measure(t, q);
    EXPECT_EQ(r.value, 0);
    EXPECT_TRUE(r.intervals.empty());
    EXPECT_THROW(backflow_measure(std::vector<double>{0, 1}, std::vector<double>{1, 1}), InvalidInput);
}

TEST(backflow, single_revival) {
    auto t = uniform_grid(0, kPi, 2001);
    std::vector<double> q;
    for (double x : t) {
        q.push_back(std::abs(std::cos(x)));
    }
    auto r = backflow_measure(t, q);
    ASSERT_EQ(r.intervals.size(), 1u);
    EXPECT_NEAR(r.intervals[0].t_start, kPi / 2, 2 * kPi / 2000);
    EXPECT_NEAR(r.intervals[0].t_end, kPi, 1e-15);
    EXPECT_NEAR(r.value, 1, 1e-3);
}

TEST(backflow, smooth_revivals_converge_with_grid) {
    // q = exp(-t/4) (1 + cos t)/2 has rises of known size between the
    // critical points of q.
    auto q_of = [](double x) { return std::exp(-x / 4) * (1 + std::cos(x)) / 2; };
    auto dq = [](double x) { return std::exp(-x / 4) * (-(1 + std::cos(x)) / 8 - std::sin(x) / 2); };
    // Exact value: sum of q(max) - q(min) over rising windows on [0, 20].
    double exact = 0;
    auto crit = uniform_grid(0, 20, 200001);
    double lo = -1;
    for (size_t k = 1; k < crit.size(); ++k) {
        bool rising = dq(crit[k]) > 0;
        if (rising && lo < 0) {
            double a = crit[k - 1], b = crit[k];
            for (int it = 0; it < 80; ++it) {
                double m = (a + b) / 2;
                (dq(m) > 0 ? b : a) = m;
            }
            lo = (a + b) / 2;
        } else if (!rising && lo >= 0) {
            double a = crit[k - 1], b = crit[k];
            for (int it = 0; it < 80; ++it) {
                double m = (a + b) / 2;
                (dq(m) > 0 ? a : b) = m;
            }
            exact += q_of((a + b) / 2) - q_of(lo);
            lo = -1;
        }
    }
    double prev_err = 1;
    for (size_t n : {401, 801, 1601, 3201}) {
        auto t = uniform_grid(0, 20, n);
        std::vector<double> q;
        for (double x : t) {
            q.push_back(q_of(x));
        }
        auto r = backflow_measure(t, q);
        double err = std::abs(r.value - exact);
        EXPECT_LT(err, prev_err) << n;
        prev_err = err;
        EXPECT_EQ(r.intervals.size(), 3u);
    }
    EXPECT_LT(prev_err, 1e-6);
}

TEST(backflow, report_invariants) {
    auto t = uniform_grid(0, 30, 3001);
    std::vector<double> q;
    for (double x : t) {
        q.push_back(std::abs(std::sin(x)) * std::exp(-x / 10) + 0.01 * std::cos(7 * x));
    }
    auto r = backflow_measure(t, q);
    EXPECT_NO_THROW(r.validate());
    double prev = -1;
    double total = 0;
    for (const auto &iv : r.intervals) {
        EXPECT_GE(iv.t_start, prev);
        EXPECT_LE(iv.t_start, iv.t_end);
        EXPECT_GT(iv.gain(), 0);
        prev = iv.t_end;
        total += iv.gain();
    }
    EXPECT_NEAR(total, r.value, 1e-12);

    MeasureReport bad = r;
    bad.value += 1e-3;
    EXPECT_THROW(bad.validate(), InvalidInput);
    bad = r;
    bad.value = -1;
    EXPECT_THROW(bad.validate(), InvalidInput);
    if (r.intervals.size() >= 2) {
        bad = r;
        std::swap(bad.intervals[0], bad.intervals[1]);
        EXPECT_THROW(bad.validate(), InvalidInput);
    }
}

TEST(analytic, examples) {
    EXPECT_EQ(n_q_dephasing_analytic(OhmicSpectralDensity(1, 1, 1.5), 50, 1e-10), 0);
    EXPECT_GT(n_q_dephasing_analytic(OhmicSpectralDensity(1, 1, 3), 50, 1e-10), 0);
    EXPECT_THROW(n_q_dephasing_analytic(OhmicSpectralDensity(1, 1, 3), 0, 1e-10), InvalidInput);
}

TEST(analytic, matches_antiderivative) {
    for (double s : {2.5, 3.0, 4.0, 5.0}) {
        OhmicSpectralDensity sd(1, 1, s);
        double a = n_q_dephasing_analytic(sd, 50, 1e-11);
        double b = dephasing_backflow_by_antiderivative(sd, 50);
        EXPECT_NEAR(a, b, 1e-8) << s;
    }
}

TEST(analytic, matches_grid_backflow) {
    for (double s : {2.5, 3.0, 4.0}) {
        OhmicSpectralDensity sd(1, 1, s);
        auto r = n_qip(dephasing(s), bell_phi(), QipConvention::kSqrt, "bell");
        EXPECT_NEAR(r.value, n_q_dephasing_analytic(sd, 50, 1e-10), 1e-4) << s;
    }
}

TEST(blp, dephasing_distance_is_gamma_and_matches_qip) {
    for (double s : {2.5, 3.0, 4.0}) {
        auto traj = dephasing(s);
        auto b = n_blp(traj, default_blp_pair(traj.kind));
        for (size_t k = 0; k < traj.size(); k += 40) {
            EXPECT_NEAR(b.samples[k], traj.factor[k], 1e-12);
        }
        auto q = n_qip(traj, bell_phi(), QipConvention::kSqrt, "bell");
        EXPECT_NEAR(b.value, q.value, 1e-6) << s;
    }
}

TEST(blp, markovian_and_strong_coupling) {
    auto traj = dephasing(1);
    EXPECT_EQ(n_blp(traj, default_blp_pair(traj.kind)).value, 0);
    auto strong = damping(0.1);
    auto r = n_blp(strong, default_blp_pair(strong.kind));
    EXPECT_GT(r.value, 0);
    for (size_t k = 0; k < strong.size(); k += 100) {
        EXPECT_NEAR(r.samples[k], std::norm(strong.amplitude[k]), 1e-12);
    }
    EXPECT_THROW(n_blp(strong, {bell_phi(), bell_phi()}), InvalidInput);
}

TEST(mutual, shape_over_ohmicity) {
    EXPECT_LE(n_mutual(dephasing(1), bell_phi(), "bell").value, 1e-8);
    std::vector<double> s_grid{2.2, 2.6, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5, 6.0};
    std::vector<double> vals;
    for (double s : s_grid) {
        vals.push_back(n_mutual(dephasing(s), bell_phi(), "bell").value);
    }
    size_t peak = std::max_element(vals.begin(), vals.end()) - vals.begin();
    EXPECT_GT(peak, 0u);
    EXPECT_LT(peak, vals.size() - 1);
    for (size_t k = 0; k < vals.size(); ++k) {
        if (k < peak) {
            EXPECT_LT(vals[k], vals[k + 1]);
        } else if (k > peak) {
            EXPECT_LT(vals[k], vals[k - 1]);
        }
    }
    EXPECT_LT(vals.back(), 1e-3 * vals[peak]);
}

TEST(rhp, examples) {
    EXPECT_LE(n_rhp(dephasing(1)).value, 1e-8);
    double prev = 0;
    for (double s : {2.5, 3.0, 4.0, 5.0, 6.0}) {
        double v = n_rhp(dephasing(s)).value;
        EXPECT_GT(v, prev) << s;
        prev = v;
    }
    ChannelTrajectory step;
    step.kind = ChannelKind::kDephasing;
    step.times = {0, 0.5, 0.75};
    step.rate = {0, 0, 0};
    step.log_factor = {0, std::log(0.5), std::log(0.6)};
    step.factor = {1, 0.5, 0.6};
    auto r = n_rhp(step);
    EXPECT_NEAR(r.value, 0.2, 1e-9);
    ASSERT_EQ(r.intervals.size(), 1u);
    EXPECT_EQ(r.intervals[0].t_start, 0.5);
    EXPECT_EQ(r.intervals[0].t_end, 0.75);
    EXPECT_EQ(*r.step, 0.5);
}

TEST(rhp, singular_steps_are_skipped_and_recorded) {
    ChannelTrajectory traj;
    traj.kind = ChannelKind::kDamping;
    traj.times = {0, 1, 2, 3};
    traj.amplitude = {1, 0.0, 0.5, 0.6};
    auto r = n_rhp(traj);
    ASSERT_EQ(r.skipped.size(), 1u);
    EXPECT_EQ(r.skipped[0].first, 1);
    EXPECT_EQ(r.skipped[0].second, 2);
    // Step 2 -> 3 has J ratio 1.2: Choi eigenvalues {-0.22, 0, 0, 1.22}.
    EXPECT_NEAR(r.value, 0.44, 1e-12);
}

TEST(rhp, violations_coincide_with_negative_rate) {
    auto traj = dephasing(3);
    auto g = divisibility_rates(traj);
    for (size_t i = 0; i < g.size(); ++i) {
        double mid = 0.5 * (traj.times[i] + traj.times[i + 1]);
        double rate = ohmic_rate(OhmicSpectralDensity(1, 1, 3), mid);
        if (std::abs(rate) > 1e-6) {
            EXPECT_EQ(g[i] > kRhpThreshold, rate < 0) << mid;
        }
    }
}

TEST(markovian, all_measures_vanish) {
    std::vector<ChannelTrajectory> trajs;
    for (double s : {0.5, 1.0, 1.5, 2.0}) {
        trajs.push_back(dephasing(s));
    }
    trajs.push_back(damping(10));
    for (const auto &traj : trajs) {
        EXPECT_LE(n_qip(traj, bell_phi(), QipConvention::kSqrt, "bell").value, 1e-8);
        EXPECT_LE(n_qip(traj, bell_phi(), QipConvention::kLinear, "bell").value, 1e-8);
        EXPECT_LE(n_blp(traj, default_blp_pair(traj.kind)).value, 1e-8);
        EXPECT_LE(n_mutual(traj, bell_phi(), "bell").value, 1e-8);
        EXPECT_LE(n_rhp(traj).value, 1e-8);
    }
}

TEST(convention, intervals_agree_between_conventions) {
    for (const auto &traj : {dephasing(3), damping(0.5), damping(0.1)}) {
        auto a = n_qip(traj, werner(0.8), QipConvention::kSqrt, "w");
        auto b = n_qip(traj, werner(0.8), QipConvention::kLinear, "w");
        double h = traj.times[1] - traj.times[0];
        ASSERT_EQ(a.intervals.size(), b.intervals.size());
        for (size_t k = 0; k < a.intervals.size(); ++k) {
            EXPECT_NEAR(a.intervals[k].t_start, b.intervals[k].t_start, h);
            EXPECT_NEAR(a.intervals[k].t_end, b.intervals[k].t_end, h);
        }
    }
}

TEST(families, members) {
    EXPECT_EQ(InitialStateFamily::bell().members().size(), 1u);
    auto w = InitialStateFamily::werner_grid().members();
    ASSERT_EQ(w.size(), 21u);
    EXPECT_EQ(w.front().first, "werner(r=0)");
    EXPECT_EQ(w.back().first, "werner(r=1)");
    EXPECT_EQ(InitialStateFamily::pure_grid().members().size(), 64u);
    EXPECT_THROW(InitialStateFamily::parse("ghz"), InvalidInput);
    EXPECT_THROW(InitialStateFamily::werner_grid(1), InvalidInput);
}

TEST(families, optimization) {
    EXPECT_EQ(optimize_initial_state(dephasing(1), InitialStateFamily::werner_grid(), QipConvention::kSqrt).value, 0);
    auto strong = damping(0.1);
    auto best = optimize_initial_state(strong, InitialStateFamily::werner_grid(), QipConvention::kSqrt);
    EXPECT_EQ(best.initial_state, "werner(r=1)");
    for (const auto &[label, rho] : InitialStateFamily::werner_grid().members()) {
        EXPECT_LE(n_qip(strong, rho, QipConvention::kSqrt, label).value, best.value);
    }
    auto traj = dephasing(3);
    auto bell = optimize_initial_state(traj, InitialStateFamily::bell(), QipConvention::kSqrt);
    EXPECT_EQ(bell.value, n_qip(traj, bell_phi(), QipConvention::kSqrt, "bell").value);
    EXPECT_EQ(bell.initial_state, "bell");
    auto pure = optimize_initial_state(traj, InitialStateFamily::pure_grid(), QipConvention::kSqrt);
    EXPECT_GE(pure.value, 0);
    auto again = optimize_initial_state(traj, InitialStateFamily::pure_grid(), QipConvention::kSqrt);
    EXPECT_EQ(pure.initial_state, again.initial_state);
    EXPECT_EQ(pure.value, again.value);
}

TEST(regimes, entanglement_vanishes_while_qip_revives) {
    auto traj = damping_trajectory(LorentzianSpectralDensity(1, 0.01, 0.001), damping_grid());
    DensityMatrix rho0 = werner(0.45);
    auto q = qip_flow(traj, rho0, QipConvention::kSqrt);
    auto d = sampled_derivative(traj.times, q);
    bool found = false;
    size_t k = 0;
    while (k < traj.size()) {
        if (concurrence(apply_channel(traj.map_at(k), rho0)) >= 1e-10) {
            ++k;
            continue;
        }
        size_t a = k;
        bool q_positive = true, revives = false;
        while (k < traj.size() && concurrence(apply_channel(traj.map_at(k), rho0)) < 1e-10) {
            q_positive = q_positive && q[k] > 0;
            revives = revives || d[k] > 0;
            ++k;
        }
        if (k < traj.size() && k - a > 1 && q_positive && revives) {
            found = true;
        }
    }
    EXPECT_TRUE(found);
    for (size_t i = 0; i < traj.size(); i += 10) {
        EXPECT_GT(mutual_information(apply_channel(traj.map_at(i), rho0)), 0);
    }
}

TEST(report_io, json_fields) {
    auto r = n_qip(dephasing(3), bell_phi(), QipConvention::kSqrt, "bell");
    auto j = report_to_json(r);
    EXPECT_EQ(j["measure"], "qip");
    EXPECT_EQ(j["convention"], "sqrt");
    EXPECT_EQ(j["initial_state"], "bell");
    EXPECT_EQ(j["value"].get<double>(), r.value);
    EXPECT_EQ(j["intervals"].size(), r.intervals.size());
    EXPECT_EQ(j["grid"]["points"].get<size_t>(), 4001u);
    auto rhp = report_to_json(n_rhp(dephasing(3)));
    EXPECT_TRUE(rhp["convention"].is_null());
    EXPECT_TRUE(rhp.contains("step"));
    EXPECT_EQ(report_to_json_text(r), report_to_json_text(r));
}

TEST(report_io, monitored_csv_round_trip) {
    auto r = n_mutual(dephasing(3), bell_phi(), "bell");
    std::string text = to_csv_string(report_trajectory_csv(r));
    std::istringstream in(text);
    auto table = read_csv(in);
    EXPECT_EQ(table.header[1], "I");
    EXPECT_EQ(to_csv_string(table), text);
}
