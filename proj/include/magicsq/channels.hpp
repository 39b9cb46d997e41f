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

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "magicsq/linalg.hpp"

namespace magicsq {

/// Single-qubit noise families, in registry order.
enum class ChannelKind {
    Depolarizing,
    AmplitudeDamping,
    PhaseDamping,
    PhaseFlip,
    BitFlip,
    BitPhaseFlip,
};

inline constexpr std::array<ChannelKind, 6> kAllChannels = {
    ChannelKind::Depolarizing, ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
    ChannelKind::PhaseFlip,    ChannelKind::BitFlip,          ChannelKind::BitPhaseFlip,
};

inline constexpr std::string_view channel_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::Depolarizing:
            return "depolarizing";
        case ChannelKind::AmplitudeDamping:
            return "amplitude-damping";
        case ChannelKind::PhaseDamping:
            return "phase-damping";
        case ChannelKind::PhaseFlip:
            return "phase-flip";
        case ChannelKind::BitFlip:
            return "bit-flip";
        case ChannelKind::BitPhaseFlip:
            return "bit-phase-flip";
    }
    return "?";
}

inline std::optional<ChannelKind> parse_channel(std::string_view name) {
    for (ChannelKind k : kAllChannels) {
        if (channel_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

/// A noise family together with its strength alpha in [0, 1].
class ChannelSpec {
   public:
    ChannelSpec(ChannelKind kind, double alpha) : kind_(kind), alpha_(alpha) {
        if (!(alpha >= 0.0 && alpha <= 1.0)) {
            throw DomainError("noise level alpha must lie in [0, 1], got " + std::to_string(alpha));
        }
    }

    ChannelKind kind() const { return kind_; }
    double alpha() const { return alpha_; }

   private:
    ChannelKind kind_;
    double alpha_;
};

/// Non-empty set of dim x dim Kraus operators with sum E^dagger E = I.
class KrausSet {
   public:
    static constexpr double kCompletenessTolerance = 1e-10;

    explicit KrausSet(std::vector<Matrix> operators) : ops_(std::move(operators)) {
        detail::require(!ops_.empty(), "KrausSet: at least one operator is required");
        const std::size_t d = ops_.front().rows();
        Matrix sum(d, d);
        for (const auto &e : ops_) {
            detail::require(e.is_square() && e.rows() == d, "KrausSet: operators must share a square shape");
            sum += matmul(adjoint(e), e);
        }
        detail::require(approx_equal(sum, Matrix::identity(d), kCompletenessTolerance),
                        "KrausSet: completeness sum E^dagger E = I violated");
    }

    static KrausSet identity(std::size_t dim) { return KrausSet({Matrix::identity(dim)}); }

    std::size_t dim() const { return ops_.front().rows(); }
    std::size_t size() const { return ops_.size(); }
    const std::vector<Matrix> &operators() const { return ops_; }
    const Matrix &operator[](std::size_t k) const { return ops_[k]; }

   private:
    std::vector<Matrix> ops_;
};

/// Kraus operators of a single-qubit channel. Zero operators (alpha = 0 or 1
/// edge cases) are kept so the operator count depends only on the family.
inline KrausSet single_qubit_kraus(const ChannelSpec &spec) {
    const double a = spec.alpha();
    const Matrix id = Matrix::identity(2);
    switch (spec.kind()) {
        case ChannelKind::Depolarizing: {
            const double w = std::sqrt(a / 4.0);
            return KrausSet({std::sqrt(1.0 - 3.0 * a / 4.0) * id, w * pauli_x(), w * pauli_y(), w * pauli_z()});
        }
        case ChannelKind::AmplitudeDamping:
            return KrausSet({Matrix::square({{1.0, 0.0}, {0.0, std::sqrt(1.0 - a)}}),
                             Matrix::square({{0.0, std::sqrt(a)}, {0.0, 0.0}})});
        case ChannelKind::PhaseDamping:
            return KrausSet({Matrix::diagonal({1.0, std::sqrt(1.0 - a)}), Matrix::diagonal({0.0, std::sqrt(a)})});
        case ChannelKind::PhaseFlip:
            return KrausSet({std::sqrt(1.0 - a) * id, std::sqrt(a) * pauli_z()});
        case ChannelKind::BitFlip:
            return KrausSet({std::sqrt(1.0 - a) * id, std::sqrt(a) * pauli_x()});
        case ChannelKind::BitPhaseFlip:
            return KrausSet({std::sqrt(1.0 - a) * id, std::sqrt(a) * pauli_y()});
    }
    throw ContractViolation("single_qubit_kraus: unknown channel kind");
}

/// Uniform product noise on four qubits: every ordered 4-tuple of the
/// single-qubit operators, tensored with qubit 1 most significant.
inline KrausSet extend_to_four_qubits(const KrausSet &single) {
    detail::require(single.dim() == 2, "extend_to_four_qubits: expected a single-qubit Kraus set");
    const std::size_t n = single.size();
    std::vector<Matrix> ops;
    ops.reserve(n * n * n * n);
    for (std::size_t k1 = 0; k1 < n; ++k1) {
        for (std::size_t k2 = 0; k2 < n; ++k2) {
            const Matrix left = tensor(single[k1], single[k2]);
            for (std::size_t k3 = 0; k3 < n; ++k3) {
                for (std::size_t k4 = 0; k4 < n; ++k4) {
                    ops.push_back(tensor(left, tensor(single[k3], single[k4])));
                }
            }
        }
    }
    return KrausSet(std::move(ops));
}

inline KrausSet four_qubit_kraus(const ChannelSpec &spec) { return extend_to_four_qubits(single_qubit_kraus(spec)); }

/// sum_k E_k M E_k^dagger for an arbitrary square M (no state checks).
inline Matrix apply_to_matrix(const KrausSet &k, const Matrix &m) {
    detail::require(m.is_square() && m.rows() == k.dim(), "apply: dimension mismatch between channel and matrix");
    Matrix out(k.dim(), k.dim());
    for (const auto &e : k.operators()) {
        out += matmul(matmul(e, m), adjoint(e));
    }
    return out;
}

inline DensityMatrix apply(const KrausSet &k, const DensityMatrix &rho) {
    return DensityMatrix(apply_to_matrix(k, rho.matrix()));
}

/// True iff both channels send every matrix unit |r><c| to the same output
/// within `tol` entrywise.
inline bool channels_equal(const KrausSet &a, const KrausSet &b, double tol = kDefaultTolerance) {
    detail::require(a.dim() == b.dim(), "channels_equal: dimension mismatch");
    const std::size_t d = a.dim();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            Matrix unit(d, d);
            unit(r, c) = 1.0;
            if (max_abs_diff(apply_to_matrix(a, unit), apply_to_matrix(b, unit)) > tol) {
                return false;
            }
        }
    }
    return true;
}

/// Flip probability p with phase-flip(p) == phase-damping(alpha) as channels.
inline double phase_flip_equivalent(double alpha) { return (1.0 - std::sqrt(1.0 - alpha)) / 2.0; }

}  // namespace magicsq
