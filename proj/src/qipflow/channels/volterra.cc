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

#include "qipflow/channels/volterra.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qipflow/errors.h"

namespace qipflow {

namespace {

// One solve with step h over n_steps steps; returns every `stride`-th sample.
std::vector<Complex> march(const std::vector<Complex> &f, double h, size_t n_steps, size_t stride) {
    std::vector<Complex> y(n_steps + 1);
    y[0] = 1;
    const Complex f0 = f[0];
    const Complex denom = 1.0 + h * h * f0 / 4.0;
    Complex deriv = 0;  // y'(0) = 0
    for (size_t n = 0; n < n_steps; ++n) {
        size_t m = n + 1;
        // Memory integral at t_m without the unknown endpoint term.
        Complex acc = 0.5 * f[m] * y[0];
        for (size_t k = 1; k < m; ++k) {
            acc += f[m - k] * y[k];
        }
        Complex partial = -h * acc;
        y[m] = (y[n] + 0.5 * h * (deriv + partial)) / denom;
        deriv = partial - 0.5 * h * f0 * y[m];
    }
    std::vector<Complex> out;
    out.reserve(n_steps / stride + 1);
    for (size_t k = 0; k <= n_steps; k += stride) {
        out.push_back(y[k]);
    }
    return out;
}

std::vector<Complex> solve_level(const std::function<Complex(double)> &kernel, double step, size_t intervals,
                                 size_t sub) {
    double h = step / static_cast<double>(sub);
    size_t n = intervals * sub;
    std::vector<Complex> f(n + 1);
    for (size_t k = 0; k <= n; ++k) {
        f[k] = kernel(static_cast<double>(k) * h);
    }
    return march(f, h, n, sub);
}

double max_diff(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    double d = 0;
    for (size_t k = 0; k < a.size(); ++k) {
        d = std::max(d, std::abs(a[k] - b[k]));
    }
    return d;
}

}  // namespace

VolterraSolution solve_volterra(const std::function<Complex(double)> &kernel, std::span<const double> times,
                                const VolterraOptions &opts) {
    if (times.empty()) {
        throw InvalidInput("solve_volterra: empty grid");
    }
    if (times[0] != 0) {
        throw InvalidInput("solve_volterra: grid must start at 0");
    }
    if (times.size() == 1) {
        return {{Complex(1)}, 1, 0};
    }
    size_t intervals = times.size() - 1;
    double step = times.back() / static_cast<double>(intervals);
    if (!(step > 0)) {
        throw InvalidInput("solve_volterra: grid must be increasing");
    }
    for (size_t k = 0; k < times.size(); ++k) {
        double expect = static_cast<double>(k) * step;
        if (std::abs(times[k] - expect) > 1e-9 * std::max(1.0, std::abs(times.back()))) {
            throw InvalidInput("solve_volterra: grid must be uniform");
        }
    }

    // Each level halves the internal step; successive levels are combined by
    // Richardson extrapolation (the scheme is second order in h).
    auto extrapolate = [](const std::vector<Complex> &coarse, const std::vector<Complex> &fine) {
        std::vector<Complex> out(fine.size());
        for (size_t k = 0; k < fine.size(); ++k) {
            out[k] = (4.0 * fine[k] - coarse[k]) / 3.0;
        }
        return out;
    };
    size_t sub = 2;
    std::vector<Complex> fine = solve_level(kernel, step, intervals, sub);
    std::vector<Complex> best = extrapolate(solve_level(kernel, step, intervals, 1), fine);
    double change = std::numeric_limits<double>::infinity();
    while (sub == 2 || intervals * sub * 2 <= opts.max_internal_points) {
        std::vector<Complex> next = solve_level(kernel, step, intervals, sub * 2);
        std::vector<Complex> improved = extrapolate(fine, next);
        change = max_diff(best, improved);
        sub *= 2;
        fine = std::move(next);
        best = std::move(improved);
        if (change < opts.refine_tol) {
            return {std::move(best), sub, change};
        }
    }
    if (!(change <= opts.fail_tol)) {
        throw NumericalFailure("solve_volterra: step too coarse; half-step refinement changed the result by " +
                                   std::to_string(change),
                               change);
    }
    return {std::move(best), sub, change};
}

VolterraSolution solve_volterra_jt(const LorentzianSpectralDensity &sd, std::span<const double> times,
                                   const VolterraOptions &opts) {
    return solve_volterra([&sd](double tau) { return memory_kernel(sd, tau); }, times, opts);
}

}  // namespace qipflow
