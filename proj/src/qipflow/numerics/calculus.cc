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

#include "qipflow/numerics/calculus.h"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qipflow/errors.h"

namespace qipflow {

namespace {

struct Panel {
    double a, b;
    double fa, fm, fb;
    double whole;
    double tol;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6 * (fa + 4 * fm + fb);
}

}  // namespace

double adaptive_quad(const std::function<double(double)> &f, double a, double b, double tol, size_t max_intervals) {
    if (!(a <= b)) {
        throw InvalidInput("adaptive_quad: require a <= b");
    }
    if (!(tol > 0)) {
        throw InvalidInput("adaptive_quad: tolerance must be positive");
    }
    if (a == b) {
        return 0;
    }

    // Seed with a few panels so features narrower than the interval are seen.
    constexpr int kSeedPanels = 8;
    std::vector<Panel> stack;
    double h = (b - a) / kSeedPanels;
    for (int k = kSeedPanels - 1; k >= 0; k--) {
        double pa = a + k * h;
        double pb = k == kSeedPanels - 1 ? b : a + (k + 1) * h;
        double pm = 0.5 * (pa + pb);
        double fa = f(pa), fm = f(pm), fb = f(pb);
        stack.push_back({pa, pb, fa, fm, fb, simpson(pa, pb, fa, fm, fb), tol / kSeedPanels});
    }

    double accepted = 0;
    size_t live = kSeedPanels;
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        double m = 0.5 * (p.a + p.b);
        double lm = 0.5 * (p.a + m);
        double rm = 0.5 * (m + p.b);
        double flm = f(lm), frm = f(rm);
        double left = simpson(p.a, m, p.fa, flm, p.fm);
        double right = simpson(m, p.b, p.fm, frm, p.fb);
        double refined = left + right;
        double delta = refined - p.whole;
        if (!std::isfinite(refined)) {
            throw NumericalFailure("adaptive_quad: integrand is not finite on the interval", accepted);
        }
        if (std::abs(delta) <= 15 * p.tol || m == p.a || m == p.b) {
            accepted += refined + delta / 15;
            continue;
        }
        live++;
        if (live > max_intervals) {
            double estimate = accepted + refined;
            for (const auto &q : stack) {
                estimate += q.whole;
            }
            throw NumericalFailure("adaptive_quad: subdivision cap of " + std::to_string(max_intervals) +
                                       " intervals reached",
                                   estimate);
        }
        stack.push_back({m, p.b, p.fm, frm, p.fb, right, 0.5 * p.tol});
        stack.push_back({p.a, m, p.fa, flm, p.fm, left, 0.5 * p.tol});
    }
    return accepted;
}

double gamma_function(double x) {
    if (!(x > 0) || !std::isfinite(x)) {
        throw InvalidInput("gamma_function: argument must be a positive finite number");
    }
    static constexpr std::array<double, 9> kLanczos = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    constexpr double kG = 7;
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x).
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_function(1 - x));
    }
    double z = x - 1;
    double series = kLanczos[0];
    for (size_t k = 1; k < kLanczos.size(); k++) {
        series += kLanczos[k] / (z + static_cast<double>(k));
    }
    double t = z + kG + 0.5;
    return std::sqrt(2 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

std::vector<double> sampled_derivative(std::span<const double> times, std::span<const double> values) {
    const size_t n = times.size();
    if (n < 3) {
        throw InvalidInput("sampled_derivative: need at least 3 grid points");
    }
    if (values.size() != n) {
        throw InvalidInput("sampled_derivative: times and values differ in length");
    }
    for (size_t k = 1; k < n; k++) {
        if (!(times[k] > times[k - 1])) {
            throw InvalidInput("sampled_derivative: grid is not strictly increasing");
        }
    }
    std::vector<double> d(n);
    for (size_t i = 1; i + 1 < n; i++) {
        double h1 = times[i] - times[i - 1];
        double h2 = times[i + 1] - times[i];
        d[i] = -h2 / (h1 * (h1 + h2)) * values[i - 1] + (h2 - h1) / (h1 * h2) * values[i] +
               h1 / (h2 * (h1 + h2)) * values[i + 1];
    }
    {
        double h1 = times[1] - times[0];
        double h2 = times[2] - times[1];
        d[0] = -(2 * h1 + h2) / (h1 * (h1 + h2)) * values[0] + (h1 + h2) / (h1 * h2) * values[1] -
               h1 / (h2 * (h1 + h2)) * values[2];
    }
    {
        double h1 = times[n - 2] - times[n - 3];
        double h2 = times[n - 1] - times[n - 2];
        d[n - 1] = h2 / (h1 * (h1 + h2)) * values[n - 3] - (h1 + h2) / (h1 * h2) * values[n - 2] +
                   (2 * h2 + h1) / (h2 * (h1 + h2)) * values[n - 1];
    }
    return d;
}

std::vector<double> uniform_grid(double t0, double t1, size_t n) {
    if (n < 2) {
        throw InvalidInput("uniform_grid: need at least 2 points");
    }
    if (!(t1 > t0)) {
        throw InvalidInput("uniform_grid: end must exceed start");
    }
    std::vector<double> grid(n);
    double h = (t1 - t0) / static_cast<double>(n - 1);
    for (size_t k = 0; k < n; k++) {
        grid[k] = t0 + h * static_cast<double>(k);
    }
    grid.back() = t1;
    return grid;
}

}  // namespace qipflow
