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
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

#include "magicsq/channels.hpp"
#include "magicsq/fidelity.hpp"
#include "magicsq/game.hpp"

namespace magicsq {

/// Real polynomial, coefficients in ascending degree (constant term first).
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> coeffs) : c_(coeffs) {}
    explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

    const std::vector<double> &coefficients() const { return c_; }

    /// Coefficient of x^k; zero past the stored length.
    double coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }

    double operator()(double x) const {
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    /// Largest coefficient-wise |a - b|, padding the shorter with zeros.
    friend double max_coefficient_deviation(const Polynomial &a, const Polynomial &b) {
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            worst = std::max(worst, std::abs(a.coefficient(k) - b.coefficient(k)));
        }
        return worst;
    }

   private:
    std::vector<double> c_;
};

// ---------------------------------------------------------------------------
// Reference closed forms for every (channel, input) pair.

/// Closed-form winning probabilities, indexed by channel and game input.
class PaperTable {
   public:
    const Polynomial &at(ChannelKind kind, const GameInput &in) const { return entries_[index(kind)][slot(in)]; }
    void set(ChannelKind kind, const GameInput &in, Polynomial p) { entries_[index(kind)][slot(in)] = std::move(p); }

    static std::size_t slot(const GameInput &in) { return static_cast<std::size_t>((in.row() - 1) * 3 + in.col() - 1); }

   private:
    static std::size_t index(ChannelKind kind) { return static_cast<std::size_t>(kind); }

    std::array<std::array<Polynomial, 9>, 6> entries_;
};

inline PaperTable paper_table() {
    const Polynomial quartic_depol{1, -2, 3, -2, 0.5};
    const Polynomial half_quad{1, -1, 0.5};        // a^2/2 - a + 1
    const Polynomial two_quad{1, -2, 2};           // 2a^2 - 2a + 1
    const Polynomial amp_quad{1, -1.5, 1};         // a^2 - 3a/2 + 1
    const Polynomial linear_half{1, -0.5};         // 1 - a/2
    const Polynomial flip_quartic{1, -4, 12, -16, 8};
    const Polynomial one{1};

    PaperTable t;
    auto fill = [&t](ChannelKind kind, std::initializer_list<GameInput> inputs, const Polynomial &p) {
        for (const auto &in : inputs) {
            t.set(kind, in, p);
        }
    };
    using K = ChannelKind;
    fill(K::Depolarizing,
         {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}}, quartic_depol);

    fill(K::AmplitudeDamping, {{1, 1}, {1, 2}, {2, 3}, {3, 3}}, half_quad);
    fill(K::AmplitudeDamping, {{1, 3}}, two_quad);
    fill(K::AmplitudeDamping, {{2, 1}, {2, 2}, {3, 1}, {3, 2}}, amp_quad);

    fill(K::PhaseDamping, {{1, 1}, {1, 2}, {2, 3}, {3, 3}}, half_quad);
    fill(K::PhaseDamping, {{1, 3}}, one);
    fill(K::PhaseDamping, {{2, 1}, {2, 2}, {3, 1}, {3, 2}}, linear_half);

    fill(K::PhaseFlip, {{1, 1}, {1, 2}, {2, 3}, {3, 3}}, flip_quartic);
    fill(K::PhaseFlip, {{1, 3}}, one);
    fill(K::PhaseFlip, {{2, 1}, {2, 2}, {3, 1}, {3, 2}}, two_quad);

    fill(K::BitFlip, {{1, 1}, {1, 2}, {3, 1}, {3, 2}}, two_quad);
    fill(K::BitFlip, {{2, 3}}, one);
    fill(K::BitFlip, {{1, 3}, {2, 1}, {2, 2}, {3, 3}}, flip_quartic);

    fill(K::BitPhaseFlip, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}, two_quad);
    fill(K::BitPhaseFlip, {{3, 3}}, one);
    fill(K::BitPhaseFlip, {{1, 3}, {2, 3}, {3, 1}, {3, 2}}, flip_quartic);
    return t;
}

// ---------------------------------------------------------------------------
// Polynomial reconstruction.

inline constexpr std::array<double, 5> kInterpolationNodes = {0.0, 0.25, 0.5, 0.75, 1.0};
inline constexpr double kCoefficientSnap = 1e-8;

namespace detail {

/// Solves V c = y for the Vandermonde matrix of the interpolation nodes, by
/// Gaussian elimination with partial pivoting.
inline std::array<double, 5> solve_vandermonde(const std::array<double, 5> &y) {
    constexpr std::size_t n = 5;
    std::array<std::array<double, n + 1>, n> m{};
    for (std::size_t r = 0; r < n; ++r) {
        double p = 1.0;
        for (std::size_t c = 0; c < n; ++c) {
            m[r][c] = p;
            p *= kInterpolationNodes[r];
        }
        m[r][n] = y[r];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) {
                pivot = r;
            }
        }
        std::swap(m[col], m[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = m[r][col] / m[col][col];
            for (std::size_t c = col; c <= n; ++c) {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    std::array<double, n> x{};
    for (std::size_t r = n; r-- > 0;) {
        double acc = m[r][n];
        for (std::size_t c = r + 1; c < n; ++c) {
            acc -= m[r][c] * x[c];
        }
        x[r] = acc / m[r][r];
    }
    return x;
}

inline Polynomial interpolate(const std::array<double, 5> &values) {
    std::array<double, 5> c = solve_vandermonde(values);
    for (double &v : c) {
        if (std::abs(v) < kCoefficientSnap) {
            v = 0.0;
        }
    }
    return Polynomial(std::vector<double>(c.begin(), c.end()));
}

}  // namespace detail

/// Degree-4 interpolants of the winning probability for all nine inputs.
inline std::array<Polynomial, 9> reconstruct_polynomials(ChannelKind kind) {
    std::array<std::array<double, 5>, 9> samples{};
    for (std::size_t node = 0; node < kInterpolationNodes.size(); ++node) {
        const auto probs = success_probabilities(ChannelSpec(kind, kInterpolationNodes[node]));
        for (std::size_t in = 0; in < 9; ++in) {
            samples[in][node] = probs[in];
        }
    }
    std::array<Polynomial, 9> out;
    for (std::size_t in = 0; in < 9; ++in) {
        out[in] = detail::interpolate(samples[in]);
    }
    return out;
}

inline Polynomial reconstruct_polynomial(ChannelKind kind, const GameInput &input) {
    std::array<double, 5> y{};
    for (std::size_t node = 0; node < kInterpolationNodes.size(); ++node) {
        y[node] = success_probability(input, ChannelSpec(kind, kInterpolationNodes[node]));
    }
    return detail::interpolate(y);
}

struct VerificationRow {
    ChannelKind channel;
    GameInput input;
    double max_coeff_dev;
    bool pass;
};

struct VerificationReport {
    std::vector<VerificationRow> rows;

    std::size_t passed() const {
        return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto &r) { return r.pass; }));
    }
    std::size_t failed() const { return rows.size() - passed(); }
    bool all_passed() const { return failed() == 0; }
};

/// Reconstructs all 54 (channel, input) polynomials and compares them to
/// `reference` coefficient-wise. Mismatches are recorded, never thrown.
inline VerificationReport verify_against_paper(double tol = 1e-7, const PaperTable &reference = paper_table()) {
    if (!(tol > 0.0)) {
        throw DomainError("verify_against_paper: tolerance must be positive");
    }
    VerificationReport report;
    const auto inputs = all_inputs();
    for (ChannelKind kind : kAllChannels) {
        const auto polys = reconstruct_polynomials(kind);
        for (std::size_t k = 0; k < inputs.size(); ++k) {
            const double dev = max_coefficient_deviation(polys[k], reference.at(kind, inputs[k]));
            report.rows.push_back({kind, inputs[k], dev, dev <= tol});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Sweeps.

struct SweepRow {
    double alpha;
    std::array<double, 9> probabilities;  // all_inputs() order
    double mean;
    double delta4;
};

struct SweepTable {
    ChannelKind channel;
    std::vector<SweepRow> rows;
};

/// `points` evenly spaced noise levels k/(points-1), endpoints included.
inline std::vector<double> alpha_grid(int points) {
    if (points < 2) {
        throw DomainError("grid needs at least 2 points");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        grid[static_cast<std::size_t>(k)] = static_cast<double>(k) / static_cast<double>(points - 1);
    }
    grid.back() = 1.0;
    return grid;
}

inline SweepTable sweep(ChannelKind kind, int points) {
    SweepTable table{kind, {}};
    for (double a : alpha_grid(points)) {
        const ChannelSpec spec(kind, a);
        SweepRow row{a, success_probabilities(spec), 0.0, channel_fidelity(spec, 4)};
        double sum = 0.0;
        for (double p : row.probabilities) {
            sum += p;
        }
        row.mean = sum / 9.0;
        table.rows.push_back(row);
    }
    return table;
}

/// Smallest alpha where the mean winning probability falls to `target`.
///
/// Bisects on [0, a*] where a* is the argmin of the mean over a uniform grid
/// of `grid_points` levels; the mean is monotone on that initial segment for
/// every channel here. Returns nullopt when the mean never drops below
/// `target`.
inline std::optional<double> threshold_crossing(ChannelKind kind, double target = kClassicalLimit,
                                                int grid_points = 101, double interval_tol = 1e-10) {
    if (!(target > 0.0 && target < 1.0)) {
        throw DomainError("threshold target must lie strictly between 0 and 1");
    }
    const auto grid = alpha_grid(grid_points);
    double best_alpha = 0.0;
    double best_mean = 1.0;
    for (double a : grid) {
        const double m = mean_success(ChannelSpec(kind, a));
        if (m < best_mean) {
            best_mean = m;
            best_alpha = a;
        }
    }
    if (best_mean > target) {
        return std::nullopt;
    }
    double lo = 0.0;
    double hi = best_alpha;
    while (hi - lo > interval_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mean_success(ChannelSpec(kind, mid)) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct ParametricPoint {
    double alpha;
    double delta4;
    double mean;
};

/// (four-qubit channel fidelity, mean winning probability) along the alpha grid.
inline std::vector<ParametricPoint> parametric_dataset(ChannelKind kind, int points) {
    std::vector<ParametricPoint> out;
    for (double a : alpha_grid(points)) {
        const ChannelSpec spec(kind, a);
        out.push_back({a, channel_fidelity(spec, 4), mean_success(spec)});
    }
    return out;
}

/// Max |mean - chord| over the points with delta4 >= min_delta, where the
/// chord joins the highest- and lowest-fidelity retained points. Measures how
/// close the parametric curve is to a straight line.
inline double max_chord_deviation(const std::vector<ParametricPoint> &curve, double min_delta = 0.1) {
    std::vector<ParametricPoint> kept;
    std::copy_if(curve.begin(), curve.end(), std::back_inserter(kept),
                 [&](const ParametricPoint &p) { return p.delta4 >= min_delta; });
    if (kept.size() < 2) {
        return 0.0;
    }
    const auto [lo, hi] = std::minmax_element(kept.begin(), kept.end(),
                                              [](const auto &x, const auto &y) { return x.delta4 < y.delta4; });
    if (hi->delta4 == lo->delta4) {
        return 0.0;
    }
    const double slope = (hi->mean - lo->mean) / (hi->delta4 - lo->delta4);
    double worst = 0.0;
    for (const auto &p : kept) {
        worst = std::max(worst, std::abs(p.mean - (lo->mean + slope * (p.delta4 - lo->delta4))));
    }
    return worst;
}

}  // namespace magicsq
