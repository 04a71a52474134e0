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

#include "qipflow/channels/spectral.h"

#include <cmath>

#include "qipflow/errors.h"
#include "qipflow/numerics/calculus.h"

namespace qipflow {

OhmicSpectralDensity::OhmicSpectralDensity(double alpha, double omega_c, double ohmicity)
    : alpha_(alpha), omega_c_(omega_c), s_(ohmicity) {
    if (!(alpha > 0) || !(omega_c > 0) || !(ohmicity > 0)) {
        throw InvalidInput("OhmicSpectralDensity: alpha, omega_c and S must be strictly positive");
    }
    gamma_s_ = gamma_function(ohmicity);
}

LorentzianSpectralDensity::LorentzianSpectralDensity(double gamma0, double lambda, double delta)
    : gamma0_(gamma0), lambda_(lambda), delta_(delta) {
    if (!(gamma0 > 0) || !(lambda > 0)) {
        throw InvalidInput("LorentzianSpectralDensity: gamma0 and lambda must be strictly positive");
    }
    if (!std::isfinite(delta)) {
        throw InvalidInput("LorentzianSpectralDensity: delta must be finite");
    }
}

double ohmic_rate(const OhmicSpectralDensity &sd, double t) {
    if (!(t >= 0)) {
        throw InvalidInput("ohmic_rate: t must be nonnegative");
    }
    double x = sd.omega_c() * t;
    double s = sd.ohmicity();
    return sd.alpha() * sd.omega_c() * sd.gamma_of_s() * std::sin(s * std::atan(x)) * std::pow(1 + x * x, -s / 2);
}

double integrated_ohmic_rate(const OhmicSpectralDensity &sd, double t0, double t1, double tol) {
    return adaptive_quad([&](double t) { return ohmic_rate(sd, t); }, t0, t1, tol);
}

double dephasing_factor(const OhmicSpectralDensity &sd, double t, double tol) {
    if (!(t >= 0)) {
        throw InvalidInput("dephasing_factor: t must be nonnegative");
    }
    if (t == 0) {
        return 1;
    }
    return std::exp(-2 * integrated_ohmic_rate(sd, 0, t, tol));
}

Complex lorentzian_jt(const LorentzianSpectralDensity &sd, double t) {
    if (!(t >= 0)) {
        throw InvalidInput("lorentzian_jt: t must be nonnegative");
    }
    const Complex a(sd.lambda(), -sd.delta());
    const Complex eta = std::sqrt(a * a - 2 * sd.gamma0() * sd.lambda());
    const Complex x = 0.5 * eta * t;
    if (std::abs(eta) * t < 1e-6) {
        // cosh -> 1 + x^2/2, sinh(x)/eta -> (t/2)(1 + x^2/6).
        return std::exp(-0.5 * a * t) * (1.0 + 0.5 * x * x + a * (0.5 * t) * (1.0 + x * x / 6.0));
    }
    if (std::abs(x) <= 1) {
        return std::exp(-0.5 * a * t) * (std::cosh(x) + a / eta * std::sinh(x));
    }
    // Exponential split keeps each factor bounded for large t.
    const Complex ratio = a / eta;
    return 0.5 * ((1.0 + ratio) * std::exp(x - 0.5 * a * t) + (1.0 - ratio) * std::exp(-x - 0.5 * a * t));
}

Complex memory_kernel(const LorentzianSpectralDensity &sd, double tau) {
    if (!(tau >= 0)) {
        throw InvalidInput("memory_kernel: tau must be nonnegative");
    }
    return 0.5 * sd.gamma0() * sd.lambda() * std::exp(Complex(-sd.lambda(), sd.delta()) * tau);
}

}  // namespace qipflow
