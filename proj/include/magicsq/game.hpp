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
#include <cstdint>
#include <string>
#include <vector>

#include "magicsq/channels.hpp"
#include "magicsq/linalg.hpp"

namespace magicsq {

/// Best winning probability achievable without entanglement.
inline constexpr double kClassicalLimit = 8.0 / 9.0;

/// Row (Alice) and column (Bob) handed out by the referee, both 1-based.
class GameInput {
   public:
    GameInput(int row, int col) : row_(row), col_(col) {
        if (row < 1 || row > 3 || col < 1 || col > 3) {
            throw DomainError("game input must have row and column in {1,2,3}, got (" + std::to_string(row) +
                              "," + std::to_string(col) + ")");
        }
    }

    int row() const { return row_; }
    int col() const { return col_; }

    friend bool operator==(const GameInput &, const GameInput &) = default;

   private:
    int row_;
    int col_;
};

/// The nine inputs in row-major order: (1,1), (1,2), ..., (3,3).
inline std::array<GameInput, 9> all_inputs() {
    return {GameInput{1, 1}, GameInput{1, 2}, GameInput{1, 3}, GameInput{2, 1}, GameInput{2, 2},
            GameInput{2, 3}, GameInput{3, 1}, GameInput{3, 2}, GameInput{3, 3}};
}

/// Measured bits (a1, a2, b1, b2) packed as a1*8 + a2*4 + b1*2 + b2, which is
/// also the computational-basis index of the four-qubit outcome.
struct Outcome {
    std::uint8_t bits = 0;

    int a1() const { return (bits >> 3) & 1; }
    int a2() const { return (bits >> 2) & 1; }
    int b1() const { return (bits >> 1) & 1; }
    int b2() const { return bits & 1; }

    static Outcome from_bits(int a1, int a2, int b1, int b2) {
        return Outcome{static_cast<std::uint8_t>((a1 << 3) | (a2 << 2) | (b1 << 1) | b2)};
    }
};

using Triple = std::array<int, 3>;

struct CompletedAnswers {
    Triple row;     // Alice, even parity
    Triple column;  // Bob, odd parity
};

/// Fills the third entry of each answer by parity.
inline CompletedAnswers complete_answers(Outcome o) {
    return {{o.a1(), o.a2(), o.a1() ^ o.a2()}, {o.b1(), o.b2(), o.b1() ^ o.b2() ^ 1}};
}

/// Entangled strategy: shared four-qubit state plus Alice's and Bob's
/// two-qubit unitaries. Alice holds qubits 1-2, Bob qubits 3-4.
///
/// `column_flips[j-1]` is an even-weight mask Bob XORs onto his completed
/// column for input column j. With these unitaries the noiseless outcome
/// distribution wins only under these relabelings; no input-independent
/// entry assignment does.
struct Strategy {
    std::array<Matrix, 3> alice;
    std::array<Matrix, 3> bob;
    StateVector shared_state;
    std::array<Triple, 3> column_flips;
};

inline Strategy build_strategy() {
    const Complex i{0.0, 1.0};
    const double r2 = 1.0 / std::sqrt(2.0);

    const Matrix a1 = r2 * Matrix::square({{i, 0, 0, 1}, {0, -i, 1, 0}, {0, i, 1, 0}, {1, 0, 0, i}});
    const Matrix a2 = 0.5 * Matrix::square({{i, 1, 1, i}, {-i, 1, -1, i}, {i, 1, -1, -i}, {-i, 1, 1, -i}});
    const Matrix a3 = 0.5 * Matrix::square({{-1, -1, -1, 1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {1, -1, -1, -1}});

    const Matrix b1 = 0.5 * Matrix::square({{i, -i, 1, 1}, {-i, -i, 1, -1}, {1, 1, -i, i}, {-i, i, 1, 1}});
    const Matrix b2 = 0.5 * Matrix::square({{-1, i, 1, i}, {1, i, 1, -i}, {1, -i, 1, i}, {-1, -i, 1, -i}});
    const Matrix b3 = r2 * Matrix::square({{1, 0, 0, 1}, {-1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, -1, 0}});

    // (|0011> - |1100> - |0110> + |1001>) / 2
    std::vector<Complex> psi(16);
    psi[0b0011] = 0.5;
    psi[0b1100] = -0.5;
    psi[0b0110] = -0.5;
    psi[0b1001] = 0.5;

    return Strategy{{a1, a2, a3},
                    {b1, b2, b3},
                    StateVector(std::move(psi)),
                    {Triple{1, 1, 0}, Triple{1, 0, 1}, Triple{0, 1, 1}}};
}

/// Set of measurement outcomes that win for a given input.
struct SuccessSet {
    GameInput input;
    std::vector<Outcome> outcomes;

    bool contains(Outcome o) const {
        return std::any_of(outcomes.begin(), outcomes.end(), [&](Outcome x) { return x.bits == o.bits; });
    }
};

/// Enumerates all 16 outcomes; an outcome wins when Alice's row and Bob's
/// (relabelled) column agree at the intersection cell.
inline SuccessSet derive_success_set(const GameInput &input, const Strategy &strategy = build_strategy()) {
    SuccessSet set{input, {}};
    const Triple &flip = strategy.column_flips[input.col() - 1];
    for (int bits = 0; bits < 16; ++bits) {
        const Outcome o{static_cast<std::uint8_t>(bits)};
        const CompletedAnswers ans = complete_answers(o);
        const int row_entry = ans.row[input.col() - 1];
        const int col_entry = ans.column[input.row() - 1] ^ flip[input.row() - 1];
        if (row_entry == col_entry) {
            set.outcomes.push_back(o);
        }
    }
    return set;
}

/// Projector onto the winning computational-basis states.
inline Matrix success_projector(const SuccessSet &set) {
    Matrix proj(16, 16);
    for (Outcome o : set.outcomes) {
        proj(o.bits, o.bits) = 1.0;
    }
    return proj;
}

namespace detail {

inline Matrix game_unitary(const GameInput &input, const Strategy &strategy) {
    return tensor(strategy.alice[input.row() - 1], strategy.bob[input.col() - 1]);
}

inline DensityMatrix play(const GameInput &input, const Strategy &strategy, const DensityMatrix &noisy) {
    const Matrix u = game_unitary(input, strategy);
    return DensityMatrix(matmul(matmul(u, noisy.matrix()), adjoint(u)));
}

inline double measure_success(const GameInput &input, const Strategy &strategy, const DensityMatrix &rho_f) {
    double p = 0.0;
    for (Outcome o : derive_success_set(input, strategy).outcomes) {
        p += rho_f(o.bits, o.bits).real();
    }
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace detail

/// Shared state after four-qubit product noise, before any game gate.
inline DensityMatrix noisy_shared_state(const ChannelSpec &spec, const Strategy &strategy) {
    return apply(four_qubit_kraus(spec), DensityMatrix::pure(strategy.shared_state));
}

/// (A_row x B_col) Phi(|Psi><Psi|) (A_row x B_col)^dagger.
inline DensityMatrix final_state(const GameInput &input, const ChannelSpec &spec,
                                 const Strategy &strategy = build_strategy()) {
    return detail::play(input, strategy, noisy_shared_state(spec, strategy));
}

/// tr(rho_f * Pi_success), evaluated exactly.
inline double success_probability(const GameInput &input, const ChannelSpec &spec,
                                  const Strategy &strategy = build_strategy()) {
    return detail::measure_success(input, strategy, final_state(input, spec, strategy));
}

/// Winning probabilities for all nine inputs, in all_inputs() order. The
/// noisy shared state is computed once and reused.
inline std::array<double, 9> success_probabilities(const ChannelSpec &spec,
                                                   const Strategy &strategy = build_strategy()) {
    const DensityMatrix noisy = noisy_shared_state(spec, strategy);
    std::array<double, 9> out{};
    const auto inputs = all_inputs();
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        out[k] = detail::measure_success(inputs[k], strategy, detail::play(inputs[k], strategy, noisy));
    }
    return out;
}

/// Average over the nine equally likely inputs.
inline double mean_success(const ChannelSpec &spec, const Strategy &strategy = build_strategy()) {
    double sum = 0.0;
    for (double p : success_probabilities(spec, strategy)) {
        sum += p;
    }
    return sum / 9.0;
}

}  // namespace magicsq
