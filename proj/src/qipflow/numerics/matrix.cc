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

#include "qipflow/numerics/matrix.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qipflow/errors.h"

namespace qipflow {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr int kMaxJacobiSweeps = 100;

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidInput(std::string(op) + ": shape mismatch");
    }
}

double off_diagonal_norm_squared(const ComplexMatrix &a) {
    double total = 0;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            if (r != c) {
                total += std::norm(a(r, c));
            }
        }
    }
    return total;
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw InvalidInput("ComplexMatrix: entry count " + std::to_string(data_.size()) + " != rows*cols");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw InvalidInput("ComplexMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m(k, k) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::zeros(size_t rows, size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (size_t k = 0; k < values.size(); k++) {
        m(k, k) = values[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
    ComplexMatrix m(v.size(), v.size());
    for (size_t r = 0; r < v.size(); r++) {
        for (size_t c = 0; c < v.size(); c++) {
            m(r, c) = v[r] * std::conj(v[c]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out = *this;
    for (auto &z : out.data_) {
        z = std::conj(z);
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex total = 0;
    for (size_t k = 0; k < std::min(rows_, cols_); k++) {
        total += (*this)(k, k);
    }
    return total;
}

double ComplexMatrix::max_norm() const {
    double best = 0;
    for (const auto &z : data_) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

double ComplexMatrix::frobenius_norm() const {
    double total = 0;
    for (const auto &z : data_) {
        total += std::norm(z);
    }
    return std::sqrt(total);
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+=");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-=");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : data_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw InvalidInput("operator*: inner dimensions differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t k = 0; k < a.cols(); k++) {
            Complex ark = a(r, k);
            if (ark == Complex{}) {
                continue;
            }
            for (size_t c = 0; c < b.cols(); c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) {
    m *= s;
    return m;
}

std::vector<Complex> operator*(const ComplexMatrix &m, std::span<const Complex> v) {
    if (m.cols() != v.size()) {
        throw InvalidInput("matrix-vector product: dimension mismatch");
    }
    std::vector<Complex> out(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

double hermiticity_defect(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw InvalidInput("hermiticity_defect: matrix is not square");
    }
    double worst = 0;
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = r; c < m.cols(); c++) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

namespace pauli {
ComplexMatrix x() {
    return {{0, 1}, {1, 0}};
}
ComplexMatrix y() {
    return {{0, Complex(0, -1)}, {Complex(0, 1), 0}};
}
ComplexMatrix z() {
    return {{1, 0}, {0, -1}};
}
}  // namespace pauli

std::vector<Complex> HermitianEigenResult::vector(size_t k) const {
    std::vector<Complex> v(vectors.rows());
    for (size_t r = 0; r < v.size(); r++) {
        v[r] = vectors(r, k);
    }
    return v;
}

HermitianEigenResult hermitian_eig(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw InvalidInput("hermitian_eig: matrix is not square");
    }
    double defect = hermiticity_defect(m);
    if (defect > kHermitianTolerance) {
        throw InvalidInput("hermitian_eig: matrix is not Hermitian (max |M - M^dagger| = " + std::to_string(defect) + ")");
    }
    const size_t n = m.rows();
    ComplexMatrix a = m;
    for (size_t r = 0; r < n; r++) {
        a(r, r) = a(r, r).real();
        for (size_t c = r + 1; c < n; c++) {
            Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    // Rotations are skipped once an off-diagonal entry is negligible next to
    // both diagonal entries it couples. This keeps small eigenvalues of graded
    // PSD matrices accurate to high relative precision.
    bool converged = n < 2;
    for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; sweep++) {
        if (off_diagonal_norm_squared(a) == 0) {
            converged = true;
            break;
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                double mag = std::abs(a(p, q));
                if (mag == 0) {
                    continue;
                }
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                if (sweep > 3 && std::abs(app) + 100 * mag == std::abs(app) &&
                    std::abs(aqq) + 100 * mag == std::abs(aqq)) {
                    a(p, q) = 0;
                    a(q, p) = 0;
                    continue;
                }
                Complex phase = std::conj(a(p, q) / mag);
                // Smaller of the two annihilating rotations, |theta| <= pi/4.
                double zeta = (aqq - app) / (2 * mag);
                double t = std::abs(zeta) > 1e150
                               ? 0.5 / zeta
                               : std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(zeta * zeta + 1));
                double cs = 1 / std::sqrt(1 + t * t);
                double sn = t * cs;

                // G restricted to (p, q): [[cs, sn], [-sn * phase, cs * phase]].
                Complex gpp = cs, gpq = sn, gqp = -sn * phase, gqq = cs * phase;
                for (size_t k = 0; k < n; k++) {
                    Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                }
                for (size_t k = 0; k < n; k++) {
                    Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                a(p, p) = app - t * mag;
                a(q, q) = aqq + t * mag;
                a(p, q) = 0;
                a(q, p) = 0;
                for (size_t k = 0; k < n; k++) {
                    Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * gpp + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * gqq;
                }
            }
        }
    }
    if (!converged && off_diagonal_norm_squared(a) > 1e-24) {
        throw NumericalFailure("hermitian_eig: Jacobi iteration did not converge");
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) {
        return a(i, i).real() < a(j, j).real();
    });
    HermitianEigenResult result{std::vector<double>(n), ComplexMatrix(n, n)};
    for (size_t k = 0; k < n; k++) {
        result.values[k] = a(order[k], order[k]).real();
        for (size_t r = 0; r < n; r++) {
            result.vectors(r, k) = v(r, order[k]);
        }
    }
    return result;
}

double trace_norm(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw InvalidInput("trace_norm: matrix is not square");
    }
    double total = 0;
    if (hermiticity_defect(m) <= 1e-12 * std::max(1.0, m.max_norm())) {
        for (double e : hermitian_eig(m).values) {
            total += std::abs(e);
        }
        return total;
    }
    ComplexMatrix gram = m.adjoint() * m;
    for (double e : hermitian_eig(gram).values) {
        total += std::sqrt(std::max(0.0, e));
    }
    return total;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ar = 0; ar < a.rows(); ar++) {
        for (size_t ac = 0; ac < a.cols(); ac++) {
            Complex s = a(ar, ac);
            for (size_t br = 0; br < b.rows(); br++) {
                for (size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, size_t keep, size_t dim_first, size_t dim_second) {
    const size_t n = dim_first * dim_second;
    if (m.rows() != n || m.cols() != n) {
        throw InvalidInput("partial_trace: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                           ", expected " + std::to_string(n) + "x" + std::to_string(n));
    }
    if (keep > 1) {
        throw InvalidInput("partial_trace: keep must be 0 or 1");
    }
    if (keep == 0) {
        ComplexMatrix out(dim_first, dim_first);
        for (size_t i = 0; i < dim_first; i++) {
            for (size_t j = 0; j < dim_first; j++) {
                for (size_t k = 0; k < dim_second; k++) {
                    out(i, j) += m(i * dim_second + k, j * dim_second + k);
                }
            }
        }
        return out;
    }
    ComplexMatrix out(dim_second, dim_second);
    for (size_t i = 0; i < dim_second; i++) {
        for (size_t j = 0; j < dim_second; j++) {
            for (size_t k = 0; k < dim_first; k++) {
                out(i, j) += m(k * dim_second + i, k * dim_second + j);
            }
        }
    }
    return out;
}

}  // namespace qipflow
