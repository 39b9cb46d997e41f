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

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "magicsq/channels.hpp"
#include "magicsq/linalg.hpp"

namespace magicsq::testutil {

inline std::mt19937_64 &rng() {
    static std::mt19937_64 gen(20260417);
    return gen;
}

/// Entries uniform in the unit disc.
inline Matrix random_matrix(std::size_t n) {
    std::uniform_real_distribution<double> radius(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = std::polar(std::sqrt(radius(rng())), angle(rng()));
        }
    }
    return m;
}

/// Entries re + i*im with re, im integers in [-4, 4].
inline Matrix random_gaussian_integer_matrix(std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> d(-4, 4);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = Complex(d(rng()), d(rng()));
        }
    }
    return m;
}

inline Matrix random_hermitian(std::size_t n) {
    Matrix g = random_matrix(n);
    Matrix h = g + adjoint(g);
    return h * Complex{0.5};
}

/// G G^dagger / tr(G G^dagger) for a random G; full rank with probability 1.
inline DensityMatrix random_density(std::size_t n) {
    Matrix g = random_matrix(n);
    Matrix p = matmul(g, adjoint(g));
    const Complex t = trace(p);
    return DensityMatrix(p * (1.0 / t));
}

inline std::vector<double> grid11() {
    std::vector<double> g;
    for (int k = 0; k <= 10; ++k) {
        g.push_back(k / 10.0);
    }
    return g;
}

inline std::vector<double> grid101() {
    std::vector<double> g;
    for (int k = 0; k <= 100; ++k) {
        g.push_back(k / 100.0);
    }
    return g;
}

/// Applies a single-qubit Kraus set to qubit `q` (0 = most significant) of an
/// n-qubit operator, one qubit at a time. Independent of the n^4 tensor
/// extension used by the library.
inline Matrix apply_on_qubit(const KrausSet &k, const Matrix &rho, int q, int n_qubits) {
    const std::size_t dim = rho.rows();
    const std::size_t shift = static_cast<std::size_t>(n_qubits - 1 - q);
    Matrix out(dim, dim);
    for (const auto &e : k.operators()) {
        // (E rho E^dagger)(r, c) = sum_{x, y} E(r_q, x) rho(r|x, c|y) conj(E(c_q, y))
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                const std::size_t rq = (r >> shift) & 1;
                const std::size_t cq = (c >> shift) & 1;
                Complex acc{};
                for (std::size_t x = 0; x < 2; ++x) {
                    for (std::size_t y = 0; y < 2; ++y) {
                        const std::size_t rr = (r & ~(std::size_t{1} << shift)) | (x << shift);
                        const std::size_t cc = (c & ~(std::size_t{1} << shift)) | (y << shift);
                        acc += e(rq, x) * rho(rr, cc) * std::conj(e(cq, y));
                    }
                }
                out(r, c) += acc;
            }
        }
    }
    return out;
}

inline Matrix apply_per_qubit(const KrausSet &single, const Matrix &rho, int n_qubits) {
    Matrix cur = rho;
    for (int q = 0; q < n_qubits; ++q) {
        cur = apply_on_qubit(single, cur, q, n_qubits);
    }
    return cur;
}

/// Scalar fidelity oracle: <Omega| J(Phi) |Omega> = sum_k |tr(E_k) / d|^2.
inline double fidelity_from_traces(const KrausSet &k) {
    double sum = 0.0;
    const double d = static_cast<double>(k.dim());
    for (const auto &e : k.operators()) {
        sum += std::norm(trace(e) / d);
    }
    return sum;
}

}  // namespace magicsq::testutil
