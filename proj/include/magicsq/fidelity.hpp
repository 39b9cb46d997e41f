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
#include <cstddef>
#include <utility>
#include <vector>

#include "magicsq/channels.hpp"
#include "magicsq/linalg.hpp"

namespace magicsq {

/// (1/sqrt(d)) sum_m |m>|m> on a d*d dimensional space.
inline StateVector max_entangled_state(std::size_t d) {
    std::vector<Complex> amps(d * d);
    const double w = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t m = 0; m < d; ++m) {
        amps[m * d + m] = w;
    }
    return StateVector(std::move(amps));
}

/// Normalized Jamiolkowski state of a channel acting on dimension d.
struct ChoiState {
    DensityMatrix matrix;
    std::size_t source_dim;
};

/// (Phi x Id)(|Omega><Omega|), with the channel on the first tensor factor.
///
/// Each (E_k x I)|Omega> has entries E_k(a, m)/sqrt(d) at index a*d + m, so
/// the state is accumulated as a sum of rank-one terms over the nonzero
/// entries only.
inline ChoiState jamiolkowski(const KrausSet &k) {
    const std::size_t d = k.dim();
    const std::size_t n = d * d;
    const double w = 1.0 / std::sqrt(static_cast<double>(d));
    Matrix choi(n, n);
    std::vector<std::pair<std::size_t, Complex>> nz;
    nz.reserve(n);
    for (const auto &e : k.operators()) {
        nz.clear();
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t m = 0; m < d; ++m) {
                if (e(a, m) != Complex{}) {
                    nz.emplace_back(a * d + m, e(a, m) * w);
                }
            }
        }
        for (const auto &[r, vr] : nz) {
            for (const auto &[c, vc] : nz) {
                choi(r, c) += vr * std::conj(vc);
            }
        }
    }
    return ChoiState{DensityMatrix(std::move(choi)), d};
}

/// <pure| rho |pure>; the fidelity when one argument is a pure state.
inline double fidelity_with_pure(const StateVector &pure, const DensityMatrix &rho) {
    detail::require(pure.dim() == rho.dim(), "fidelity_with_pure: dimension mismatch");
    return std::clamp(expectation(pure, rho.matrix()).real(), 0.0, 1.0);
}

/// Overlap of J(Phi) with J(identity), for the single-qubit channel
/// (qubits == 1) or its four-qubit product extension (qubits == 4).
inline double channel_fidelity(const ChannelSpec &spec, int qubits = 4) {
    if (qubits != 1 && qubits != 4) {
        throw DomainError("channel_fidelity: qubit count must be 1 or 4");
    }
    const KrausSet single = single_qubit_kraus(spec);
    const KrausSet k = qubits == 1 ? single : extend_to_four_qubits(single);
    return fidelity_with_pure(max_entangled_state(k.dim()), jamiolkowski(k).matrix);
}

/// Four-qubit fidelity agrees with the fourth power of the one-qubit value.
inline bool product_factorization_check(const ChannelSpec &spec, double tol = 1e-9) {
    return std::abs(channel_fidelity(spec, 4) - std::pow(channel_fidelity(spec, 1), 4)) <= tol;
}

}  // namespace magicsq
