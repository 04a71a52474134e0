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

#ifndef QIPFLOW_CHANNELS_SPECTRAL_H
#define QIPFLOW_CHANNELS_SPECTRAL_H

#include "qipflow/numerics/matrix.h"

namespace qipflow {

/// J(w) = alpha w_c (w / w_c)^S exp(-w / w_c), zero temperature.
class OhmicSpectralDensity {
   public:
    OhmicSpectralDensity(double alpha, double omega_c, double ohmicity);

    double alpha() const {
        return alpha_;
    }
    double omega_c() const {
        return omega_c_;
    }
    double ohmicity() const {
        return s_;
    }
    /// Euler Gamma(S), cached.
    double gamma_of_s() const {
        return gamma_s_;
    }

   private:
    double alpha_, omega_c_, s_, gamma_s_;
};

/// J(w) = gamma0 lambda^2 / (2 pi [(w - w_c)^2 + lambda^2]); delta = w_0 - w_c.
class LorentzianSpectralDensity {
   public:
    LorentzianSpectralDensity(double gamma0, double lambda, double delta);

    double gamma0() const {
        return gamma0_;
    }
    double lambda() const {
        return lambda_;
    }
    double delta() const {
        return delta_;
    }

   private:
    double gamma0_, lambda_, delta_;
};

/// Dephasing rate gamma(t) = int J(w) sin(w t) / w dw, evaluated in closed
/// form: alpha w_c Gamma(S) sin(S atan(w_c t)) / (1 + w_c^2 t^2)^(S/2).
double ohmic_rate(const OhmicSpectralDensity &sd, double t);

/// Gamma(t) = exp(-2 int_0^t gamma), integral by adaptive quadrature.
double dephasing_factor(const OhmicSpectralDensity &sd, double t, double tol);

/// int_0^t gamma(t') dt' by adaptive quadrature.
double integrated_ohmic_rate(const OhmicSpectralDensity &sd, double t0, double t1, double tol);

/// Closed-form amplitude J_t for the Lorentzian reservoir.
Complex lorentzian_jt(const LorentzianSpectralDensity &sd, double t);

/// Reservoir correlation f(tau) = (gamma0 lambda / 2) exp((i delta - lambda) tau).
Complex memory_kernel(const LorentzianSpectralDensity &sd, double tau);

}  // namespace qipflow

#endif
