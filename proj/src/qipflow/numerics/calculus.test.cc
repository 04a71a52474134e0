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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qipflow/errors.h"

using namespace qipflow;

TEST(adaptive_quad, polynomial_and_trig) {
    EXPECT_NEAR(adaptive_quad([](double x) { return x; }, 0, 1, 1e-12), 0.5, 1e-12);
    EXPECT_NEAR(adaptive_quad([](double x) { return std::sin(x); }, 0, std::numbers::pi, 1e-10), 2.0, 1e-10);
    EXPECT_EQ(adaptive_quad([](double) { return 1.0; }, 2, 2, 1e-10), 0.0);
}

TEST(adaptive_quad, lorentzian_antiderivative) {
    double alpha = 0.3, wc = 2.0;
    for (double t : {0.1, 1.0, 5.0, 40.0}) {
        double got = adaptive_quad([&](double x) { return alpha * wc / (1 + wc * wc * x * x); }, 0, t, 1e-11);
        EXPECT_NEAR(got, alpha * std::atan(wc * t), 1e-10) << t;
    }
}

TEST(adaptive_quad, additive_over_splits) {
    auto f = [](double x) { return std::cos(3 * x) * std::exp(-0.2 * x); };
    double tol = 1e-9;
    double whole = adaptive_quad(f, 0, 10, tol);
    for (double split : {0.5, 3.3, 7.9}) {
        double parts = adaptive_quad(f, 0, split, tol) + adaptive_quad(f, split, 10, tol);
        EXPECT_NEAR(whole, parts, 2 * tol);
    }
}

TEST(adaptive_quad, errors) {
    EXPECT_THROW(adaptive_quad([](double x) { return x; }, 1, 0, 1e-8), InvalidInput);
    try {
        adaptive_quad([](double x) { return std::sin(1 / (x + 1e-9)); }, 0, 1, 1e-14, 64);
        FAIL() << "expected NumericalFailure";
    } catch (const NumericalFailure &e) {
        EXPECT_TRUE(std::isfinite(e.best_estimate()));
    }
}

TEST(gamma_function, known_values) {
    EXPECT_NEAR(gamma_function(1), 1.0, 1e-14);
    EXPECT_NEAR(gamma_function(0.5), std::sqrt(std::numbers::pi), 1e-13);
    EXPECT_NEAR(gamma_function(4), 6.0, 1e-12);
    EXPECT_THROW(gamma_function(0), InvalidInput);
    EXPECT_THROW(gamma_function(-1.5), InvalidInput);
}

TEST(gamma_function, relative_error_against_libm) {
    for (double x = 0.01; x <= 30; x += 0.0137) {
        double ref = std::tgamma(x);
        ASSERT_NEAR(gamma_function(x) / ref, 1.0, 1e-10) << x;
    }
}

TEST(sampled_derivative, affine_and_quadratic) {
    std::vector<double> t, lin, quad;
    for (int k = 0; k <= 20; k++) {
        double x = 0.25 * k;
        t.push_back(x);
        lin.push_back(2 * x);
        quad.push_back(x * x);
    }
    auto dl = sampled_derivative(t, lin);
    auto dq = sampled_derivative(t, quad);
    for (size_t k = 0; k < t.size(); k++) {
        EXPECT_NEAR(dl[k], 2.0, 1e-12);
        EXPECT_NEAR(dq[k], 2 * t[k], 1e-12);
    }
}

TEST(sampled_derivative, nonuniform_quadratic) {
    std::vector<double> t{0, 0.1, 0.35, 0.4, 1.0, 1.7};
    std::vector<double> y;
    for (double x : t) {
        y.push_back(3 * x * x - x + 2);
    }
    auto d = sampled_derivative(t, y);
    for (size_t k = 0; k < t.size(); k++) {
        EXPECT_NEAR(d[k], 6 * t[k] - 1, 1e-12);
    }
}

TEST(sampled_derivative, second_order_convergence) {
    auto err = [](size_t n) {
        std::vector<double> t = uniform_grid(0, 2, n);
        std::vector<double> y;
        for (double x : t) {
            y.push_back(std::exp(-x) * std::cos(2 * x));
        }
        auto d = sampled_derivative(t, y);
        double worst = 0;
        for (size_t k = 0; k < n; k++) {
            double exact = -std::exp(-t[k]) * (std::cos(2 * t[k]) + 2 * std::sin(2 * t[k]));
            worst = std::max(worst, std::abs(d[k] - exact));
        }
        return worst;
    };
    double ratio = err(101) / err(201);
    EXPECT_GT(ratio, 3.5);
    EXPECT_LT(ratio, 4.5);
}

TEST(sampled_derivative, errors) {
    std::vector<double> t{0, 1}, y{0, 1};
    EXPECT_THROW(sampled_derivative(t, y), InvalidInput);
    std::vector<double> t3{0, 2, 1}, y3{0, 1, 2};
    EXPECT_THROW(sampled_derivative(t3, y3), InvalidInput);
}
