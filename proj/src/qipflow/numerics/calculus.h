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

#ifndef QIPFLOW_NUMERICS_CALCULUS_H
#define QIPFLOW_NUMERICS_CALCULUS_H

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qipflow {

constexpr size_t kDefaultMaxQuadIntervals = size_t{1} << 20;

/// Adaptive Simpson quadrature of f over [a, b] with Richardson-corrected
/// panels. Throws NumericalFailure (carrying the current estimate) when more
/// than `max_intervals` panels would be needed.
double adaptive_quad(const std::function<double(double)> &f, double a, double b, double tol,
                     size_t max_intervals = kDefaultMaxQuadIntervals);

/// Euler Gamma function for x > 0 (Lanczos, g = 7, nine coefficients).
double gamma_function(double x);

/// Three-point derivative estimate of sampled data on a strictly increasing
/// grid: centered in the interior, one-sided at the ends. Exact for
/// quadratics, including on nonuniform grids.
std::vector<double> sampled_derivative(std::span<const double> times, std::span<const double> values);

/// n points from t0 to t1 inclusive.
std::vector<double> uniform_grid(double t0, double t1, size_t n);

}  // namespace qipflow

#endif
