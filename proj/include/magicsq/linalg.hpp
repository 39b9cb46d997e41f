// Copyright 2026 The magicsq Authors
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

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace magicsq {

using Complex = std::complex<double>;

/// Raised when a caller breaks an operation's precondition (shape mismatch,
/// non-Hermitian input to the eigensolver, an incomplete Kraus set, ...).
class ContractViolation : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for out-of-range numeric parameters (noise level, grid size, target).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

inline constexpr double kDefaultTolerance = 1e-10;

namespace detail {

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require(bool ok, const std::string &what) {
    if (!ok) {
        throw ContractViolation(what);
    }
}

}  // namespace detail

/// Dense row-major complex matrix. Entries are always finite.
class Matrix {
   public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        detail::require(rows > 0 && cols > 0, "Matrix: dimensions must be positive");
    }

    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        detail::require(rows > 0 && cols > 0, "Matrix: dimensions must be positive");
        detail::require(data_.size() == rows * cols, "Matrix: entry count does not match dimensions");
        detail::require(std::all_of(data_.begin(), data_.end(), detail::is_finite),
                        "Matrix: entries must be finite");
    }

    /// Square matrix from nested rows, e.g. `Matrix::square({{0, 1}, {1, 0}})`.
    static Matrix square(std::initializer_list<std::initializer_list<Complex>> rows) {
        const std::size_t n = rows.size();
        std::vector<Complex> data;
        data.reserve(n * n);
        for (const auto &row : rows) {
            detail::require(row.size() == n, "Matrix::square: ragged or non-square rows");
            data.insert(data.end(), row.begin(), row.end());
        }
        return Matrix(n, n, std::move(data));
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    static Matrix diagonal(std::span<const Complex> diag) {
        Matrix m(diag.size(), diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) {
            m(i, i) = diag[i];
        }
        return m;
    }

    static Matrix diagonal(std::initializer_list<Complex> diag) {
        return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const { return data_; }

    Matrix &operator+=(const Matrix &other) {
        detail::require(rows_ == other.rows_ && cols_ == other.cols_, "Matrix +=: dimension mismatch");
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] += other.data_[k];
        }
        return *this;
    }

    Matrix &operator-=(const Matrix &other) {
        detail::require(rows_ == other.rows_ && cols_ == other.cols_, "Matrix -=: dimension mismatch");
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] -= other.data_[k];
        }
        return *this;
    }

    Matrix &operator*=(Complex s) {
        for (auto &z : data_) {
            z *= s;
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
    friend Matrix operator*(Matrix a, Complex s) { return a *= s; }

    friend bool operator==(const Matrix &a, const Matrix &b) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Largest absolute entrywise difference; dimensions must agree.
inline double max_abs_diff(const Matrix &a, const Matrix &b) {
    detail::require(a.rows() == b.rows() && a.cols() == b.cols(), "max_abs_diff: dimension mismatch");
    double worst = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) {
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    }
    return worst;
}

inline bool approx_equal(const Matrix &a, const Matrix &b, double tol = kDefaultTolerance) {
    return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol;
}

inline Matrix matmul(const Matrix &a, const Matrix &b) {
    detail::require(a.cols() == b.rows(), "matmul: inner dimensions differ");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

/// Conjugate transpose.
inline Matrix adjoint(const Matrix &a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

/// Kronecker product; `a` supplies the more significant block index.
inline Matrix tensor(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex s = a(ar, ac);
            if (s == Complex{}) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

inline Complex trace(const Matrix &a) {
    detail::require(a.is_square(), "trace: matrix is not square");
    Complex sum{};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        sum += a(i, i);
    }
    return sum;
}

/// max |a - a^dagger| over all entries; `a` must be square.
inline double hermiticity_defect(const Matrix &a) {
    detail::require(a.is_square(), "hermiticity_defect: matrix is not square");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i; j < a.cols(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return worst;
}

inline bool is_hermitian(const Matrix &a, double tol = kDefaultTolerance) {
    return a.is_square() && hermiticity_defect(a) <= tol;
}

inline bool is_unitary(const Matrix &u, double tol = kDefaultTolerance) {
    return u.is_square() && approx_equal(matmul(adjoint(u), u), Matrix::identity(u.rows()), tol);
}

// ---------------------------------------------------------------------------
// Hermitian eigensolver (cyclic complex Jacobi).

struct JacobiOptions {
    double off_diagonal_tolerance = 1e-12;
    int max_sweeps = 100;
};

struct HermitianEigen {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column k is the eigenvector for values[k]
    int sweeps = 0;
};

namespace detail {

inline double off_diagonal_norm(const Matrix &a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

}  // namespace detail

/// Diagonalizes a Hermitian matrix by cyclic Jacobi sweeps until the
/// off-diagonal Frobenius norm drops to `opts.off_diagonal_tolerance`.
///
/// Each rotation first removes the phase of a(p,q) with diag(1, conj(e)) and
/// then applies the classical real Jacobi rotation, so the combined 2x2 block
/// is J = [[c, s], [-s conj(e), c conj(e)]] and A <- J^dagger A J.
inline HermitianEigen hermitian_eigen(const Matrix &input, JacobiOptions opts = {}) {
    detail::require(is_hermitian(input), "hermitian_eigen: input is not Hermitian within 1e-10");
    const std::size_t n = input.rows();
    Matrix a = input;
    Matrix v = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
    }

    int sweep = 0;
    while (detail::off_diagonal_norm(a) > opts.off_diagonal_tolerance) {
        if (sweep == opts.max_sweeps) {
            throw std::runtime_error("hermitian_eigen: Jacobi iteration did not converge");
        }
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double g = std::abs(apq);
                if (g == 0.0) {
                    continue;
                }
                const Complex phase = apq / g;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * g);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const Complex jpp = c;
                const Complex jpq = s;
                const Complex jqp = -s * std::conj(phase);
                const Complex jqq = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    HermitianEigen out{std::vector<double>(n), Matrix(n, n), sweep};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

inline std::vector<double> hermitian_eigenvalues(const Matrix &a, JacobiOptions opts = {}) {
    return hermitian_eigen(a, opts).values;
}

// ---------------------------------------------------------------------------
// States.

/// Normalized pure state of `dim` amplitudes (dim a power of two).
class StateVector {
   public:
    explicit StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
        const std::size_t n = amps_.size();
        detail::require(n > 0 && (n & (n - 1)) == 0, "StateVector: dimension must be a power of two");
        detail::require(std::all_of(amps_.begin(), amps_.end(), detail::is_finite),
                        "StateVector: amplitudes must be finite");
        double norm2 = 0.0;
        for (const auto &z : amps_) {
            norm2 += std::norm(z);
        }
        detail::require(std::abs(norm2 - 1.0) <= 1e-12, "StateVector: amplitudes are not normalized");
    }

    /// Computational basis vector |index> of the given dimension.
    static StateVector basis(std::size_t dim, std::size_t index) {
        detail::require(index < dim, "StateVector::basis: index out of range");
        std::vector<Complex> amps(dim);
        amps[index] = 1.0;
        return StateVector(std::move(amps));
    }

    std::size_t dim() const { return amps_.size(); }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }
    std::span<const Complex> amplitudes() const { return amps_; }

   private:
    std::vector<Complex> amps_;
};

/// |v><w|, conjugating w.
inline Matrix outer(const StateVector &v, const StateVector &w) {
    Matrix out(v.dim(), w.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        for (std::size_t j = 0; j < w.dim(); ++j) {
            out(i, j) = v[i] * std::conj(w[j]);
        }
    }
    return out;
}

/// <v| m |v>.
inline Complex expectation(const StateVector &v, const Matrix &m) {
    detail::require(m.is_square() && m.rows() == v.dim(), "expectation: dimension mismatch");
    Complex sum{};
    for (std::size_t i = 0; i < v.dim(); ++i) {
        Complex row{};
        for (std::size_t j = 0; j < v.dim(); ++j) {
            row += m(i, j) * v[j];
        }
        sum += std::conj(v[i]) * row;
    }
    return sum;
}

/// Unit-trace, Hermitian, positive semidefinite matrix.
///
/// Trace and Hermiticity are always checked. The Jacobi PSD check runs for
/// dim <= kEagerPsdCheckLimit; larger states built from Gram sums skip it and
/// can be checked with is_positive_semidefinite().
class DensityMatrix {
   public:
    static constexpr std::size_t kEagerPsdCheckLimit = 16;
    static constexpr double kTraceTolerance = 1e-10;
    static constexpr double kHermitianTolerance = 1e-10;
    static constexpr double kPsdTolerance = 1e-9;

    explicit DensityMatrix(Matrix m) : m_(std::move(m)) {
        const std::size_t n = m_.rows();
        detail::require(m_.is_square() && n > 0 && (n & (n - 1)) == 0,
                        "DensityMatrix: must be square with power-of-two dimension");
        detail::require(std::abs(trace(m_) - Complex{1.0}) <= kTraceTolerance,
                        "DensityMatrix: trace is not 1");
        detail::require(hermiticity_defect(m_) <= kHermitianTolerance, "DensityMatrix: not Hermitian");
        if (n <= kEagerPsdCheckLimit) {
            detail::require(is_positive_semidefinite(), "DensityMatrix: not positive semidefinite");
        }
    }

    static DensityMatrix pure(const StateVector &v) { return DensityMatrix(outer(v, v)); }

    static DensityMatrix maximally_mixed(std::size_t dim) {
        return DensityMatrix(Matrix::identity(dim) * Complex{1.0 / static_cast<double>(dim)});
    }

    std::size_t dim() const { return m_.rows(); }
    const Matrix &matrix() const { return m_; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    double min_eigenvalue() const { return hermitian_eigenvalues(m_).front(); }
    bool is_positive_semidefinite() const { return min_eigenvalue() >= -kPsdTolerance; }

    /// tr(rho^2); 1 for pure states.
    double purity() const {
        double sum = 0.0;
        for (const auto &z : m_.entries()) {
            sum += std::norm(z);
        }
        return sum;
    }

   private:
    Matrix m_;
};

// Pauli matrices.
inline Matrix pauli_x() { return Matrix::square({{0.0, 1.0}, {1.0, 0.0}}); }
inline Matrix pauli_y() { return Matrix::square({{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}); }
inline Matrix pauli_z() { return Matrix::square({{1.0, 0.0}, {0.0, -1.0}}); }

}  // namespace magicsq
