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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"
#include "qipflow/errors.h"
#include "qipflow/states/correlations.h"
#include "qipflow/states/density_matrix.h"
#include "test_util.h"

using namespace qipflow;
using qipflow::testing::random_density_matrix;
using qipflow::testing::random_unitary;

namespace {

DensityMatrix dephased_bell(double gamma) {
    ComplexMatrix m(4, 4);
    m(0, 0) = m(3, 3) = 0.5;
    m(0, 3) = m(3, 0) = 0.5 * gamma;
    return DensityMatrix(m, {2, 2});
}

double binary_entropy(double p) {
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

/// Wootters via the non-Hermitian product rho * flipped, eigenvalues from
/// a general complex eigensolver.
double concurrence_oracle(const ComplexMatrix &rho) {
    Eigen::Matrix4cd r, yy = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            r(i, j) = rho(i, j);
        }
    }
    yy(0, 3) = yy(3, 0) = -1;
    yy(1, 2) = yy(2, 1) = 1;
    Eigen::Matrix4cd prod = r * yy * r.conjugate() * yy;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(prod);
    std::vector<double> l;
    for (int k = 0; k < 4; k++) {
        l.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()(k).real())));
    }
    std::sort(l.begin(), l.end(), std::greater<>());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

}  // namespace

TEST(density_matrix, validation) {
    EXPECT_THROW(DensityMatrix(ComplexMatrix::identity(4), {2, 2}), InvalidInput);  // trace 4
    ComplexMatrix nonherm{{0.5, 0.2}, {0.0, 0.5}};
    EXPECT_THROW(DensityMatrix(nonherm, {2}), InvalidInput);
    std::vector<double> neg{1.2, -0.2};
    EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal(neg), {2}), InvalidInput);
    ComplexMatrix half = ComplexMatrix::identity(4);
    half *= 0.25;
    EXPECT_THROW(DensityMatrix(half, {2, 3}), InvalidInput);
    try {
        DensityMatrix(ComplexMatrix::diagonal(neg), {2});
    } catch (const InvalidInput &e) {
        EXPECT_NE(std::string(e.what()).find("positive semidefinite"), std::string::npos);
    }
}

TEST(bell_phi, entries) {
    DensityMatrix b = bell_phi();
    EXPECT_NEAR(b(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(b(0, 3).real(), 0.5, 1e-15);
    EXPECT_NEAR(b.purity(), 1.0, 1e-15);
    EXPECT_TRUE(b.is_two_qubit());
}

TEST(werner, endpoints_and_spectrum) {
    ComplexMatrix quarter = ComplexMatrix::identity(4);
    quarter *= 0.25;
    EXPECT_LT((werner(0).matrix() - quarter).max_norm(), 1e-15);
    EXPECT_LT((werner(1).matrix() - bell_phi().matrix()).max_norm(), 1e-15);
    auto eig = hermitian_eig(werner(0.45).matrix());
    EXPECT_NEAR(eig.values[0], 0.1375, 1e-14);
    EXPECT_NEAR(eig.values[1], 0.1375, 1e-14);
    EXPECT_NEAR(eig.values[2], 0.1375, 1e-14);
    EXPECT_NEAR(eig.values[3], 0.5875, 1e-14);
    EXPECT_THROW(werner(1.1), InvalidInput);
    EXPECT_THROW(werner(-0.1), InvalidInput);
}

TEST(werner, valid_on_grid_and_reduced_states_maximally_mixed) {
    ComplexMatrix half = ComplexMatrix::identity(2);
    half *= 0.5;
    for (int k = 0; k < 100; k++) {
        double r = k / 99.0;
        DensityMatrix w = werner(r);
        EXPECT_LT((partial_trace(w.matrix(), 1) - half).max_norm(), 1e-15);
        EXPECT_LT((partial_trace(w.matrix(), 0) - half).max_norm(), 1e-15);
    }
}

TEST(von_neumann_entropy, known_values) {
    EXPECT_NEAR(von_neumann_entropy(bell_phi()), 0.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(maximally_mixed(1)), 1.0, 1e-14);
    EXPECT_NEAR(von_neumann_entropy(maximally_mixed(2)), 2.0, 1e-14);
}

TEST(mutual_information, known_values) {
    EXPECT_NEAR(mutual_information(bell_phi()), 2.0, 1e-12);
    std::vector<Complex> ket00{1, 0, 0, 0};
    EXPECT_NEAR(mutual_information(DensityMatrix::from_pure(ket00, {2, 2})), 0.0, 1e-14);
    double expected = 2 - binary_entropy(0.75);
    EXPECT_NEAR(expected, 1.18872187554, 1e-10);
    EXPECT_NEAR(mutual_information(dephased_bell(0.5)), expected, 1e-12);
    EXPECT_THROW(mutual_information(maximally_mixed(1)), InvalidInput);
}

TEST(mutual_information, nonnegative_on_random_states) {
    for (int trial = 0; trial < 1000; trial++) {
        DensityMatrix rho(random_density_matrix(4), {2, 2});
        ASSERT_GE(mutual_information(rho), 0.0);
    }
}

TEST(concurrence, known_values) {
    EXPECT_NEAR(concurrence(bell_phi()), 1.0, 1e-7);
    EXPECT_NEAR(concurrence(maximally_mixed(2)), 0.0, 1e-12);
    for (double r : {0.0, 0.2, 1.0 / 3, 0.45, 0.7, 0.99}) {
        // X-state closed form 2 max(0, |rho_14| - sqrt(rho_22 rho_33)).
        DensityMatrix w = werner(r);
        double xform = 2 * std::max(0.0, std::abs(w(0, 3)) - std::sqrt(w(1, 1).real() * w(2, 2).real()));
        EXPECT_NEAR(xform, std::max(0.0, (3 * r - 1) / 2), 1e-14);
        EXPECT_NEAR(concurrence(w), xform, 1e-7) << r;
    }
    EXPECT_NEAR(concurrence(werner(0.45)), 0.175, 1e-7);
}

TEST(concurrence, matches_general_eigensolver_oracle) {
    for (int trial = 0; trial < 200; trial++) {
        ComplexMatrix m = random_density_matrix(4);
        // Mix toward a Bell state to cover entangled states too.
        m *= 0.5;
        m += 0.5 * bell_phi().matrix();
        ASSERT_NEAR(concurrence(DensityMatrix(m, {2, 2})), concurrence_oracle(m), 1e-7);
    }
}

TEST(concurrence, local_unitary_invariance) {
    for (int trial = 0; trial < 200; trial++) {
        ComplexMatrix m = random_density_matrix(4);
        m *= 0.4;
        m += 0.6 * bell_phi().matrix();
        ComplexMatrix u = kron(random_unitary(2), random_unitary(2));
        DensityMatrix rho(m, {2, 2});
        DensityMatrix rotated(u * m * u.adjoint(), {2, 2});
        ASSERT_NEAR(concurrence(rho), concurrence(rotated), 1e-8);
    }
}

TEST(trace_distance, known_values) {
    DensityMatrix zero = qubit_from_bloch(0, 0, 1);
    DensityMatrix one = qubit_from_bloch(0, 0, -1);
    EXPECT_NEAR(trace_distance(zero, zero), 0.0, 1e-15);
    EXPECT_NEAR(trace_distance(zero, one), 1.0, 1e-15);
    for (double g : {0.1, 0.5, 0.9}) {
        // |+><+| vs its dephased image with off-diagonals scaled by g.
        DensityMatrix plus = qubit_from_bloch(1, 0, 0);
        DensityMatrix dephased = qubit_from_bloch(g, 0, 0);
        EXPECT_NEAR(trace_distance(plus, dephased), (1 - g) / 2, 1e-14);
        // Difference-matrix eigenvalues of a +/- pair dephased by g are +/- g.
        EXPECT_NEAR(trace_distance(qubit_from_bloch(g, 0, 0), qubit_from_bloch(-g, 0, 0)), g, 1e-14);
    }
    EXPECT_THROW(trace_distance(zero, bell_phi()), InvalidInput);
}

TEST(trace_distance, metric_properties) {
    for (int trial = 0; trial < 200; trial++) {
        DensityMatrix a(random_density_matrix(4), {2, 2});
        DensityMatrix b(random_density_matrix(4), {2, 2});
        DensityMatrix c(random_density_matrix(4), {2, 2});
        ASSERT_NEAR(trace_distance(a, b), trace_distance(b, a), 1e-10);
        ASSERT_LE(trace_distance(a, c), trace_distance(a, b) + trace_distance(b, c) + 1e-10);
        ASSERT_GE(trace_distance(a, b), 0.0);
        ASSERT_LE(trace_distance(a, b), 1.0 + 1e-12);
    }
}
