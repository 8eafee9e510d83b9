// Copyright 2026 The emguard Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Computational/Fourier bases, Bell and GHZ states, and measurement.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "emguard/linalg.hpp"
#include "emguard/rng.hpp"

namespace emguard {

/// Largest amplitude count any constructor here will allocate. Defaults to
/// 2^20; the EMGUARD_SIZE_CAP environment variable overrides it.
[[nodiscard]] std::size_t statevector_size_cap();

/// Primitive d-th root of unity raised to `power`, e^{2πi·power/d}.
[[nodiscard]] Complex root_of_unity(std::size_t d, long long power);

/// |k> in a d-level system.
[[nodiscard]] StateVector basis_state(std::size_t d, std::size_t k);

/// F[r][k] = ζ^{kr}/√d.
[[nodiscard]] Matrix qft_matrix(std::size_t d);

/// F|k>.
[[nodiscard]] StateVector fourier_state(std::size_t d, std::size_t k);

enum class BellSign { Plus, Minus };

/// (|0 b> ± |1 b̄>)/√2 on dims (2, 2).
[[nodiscard]] StateVector bell_state(unsigned b, BellSign sign);

/// (1/√d) Σ_j |j, j, ..., j>.
[[nodiscard]] StateVector ghz_state(std::size_t d, std::size_t n);

/// F^{⊗n} applied to ghz_state(d, n).
[[nodiscard]] StateVector ghz_fourier(std::size_t d, std::size_t n);

struct OutcomeDistribution {
    DimensionSpec dims;
    std::vector<double> probabilities; ///< indexed by flat basis index
};

/// Born-rule distribution over computational basis strings. Throws when the
/// state's norm is off by more than 1e-8.
[[nodiscard]] OutcomeDistribution outcome_distribution(const StateVector &psi);

/// Draw a flat index from a probability table by inversion.
[[nodiscard]] std::size_t sample_index(std::span<const double> probabilities, RngStream &rng);

/// Sample a computational-basis measurement; returns the digit string.
[[nodiscard]] std::vector<std::size_t> sample_outcome(const StateVector &psi, RngStream &rng);

} // namespace emguard
