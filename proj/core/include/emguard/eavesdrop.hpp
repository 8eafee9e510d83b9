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
 * Eavesdropping checks: decoy particles drawn from the computational and
 * Fourier bases, and correlation checks on GHZ carriers. Each check has an
 * exact detection probability and a seeded Monte-Carlo counterpart; leakage
 * is the Holevo quantity of Eve's ancilla ensemble.
 *
 * Monte-Carlo trial i draws from derive_stream(seed, i), so counts do not
 * depend on how trials are split across threads.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "emguard/attack.hpp"

namespace emguard {

enum class DecoyBasis { Computational, Fourier };
enum class CheckMode { AllEqual, SumModZero };

[[nodiscard]] std::string to_string(DecoyBasis basis);
[[nodiscard]] std::string to_string(CheckMode mode);

struct DetectionReport {
    double p_exact = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t detections = 0;
    /// Exact probability per basis/value ("fourier/1") or per check mode.
    std::map<std::string, double> per_case;
    double leakage_bits = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const DetectionReport &, const DetectionReport &) = default;
};

/// Decoy state |k> or F|k>.
[[nodiscard]] StateVector decoy_state(std::size_t d, DecoyBasis basis, std::size_t k);

/**
 * @brief Probability that Bob, measuring in the preparation basis, does not
 * get k back: 1 − ‖(<decoy_k| ⊗ I) U (|decoy_k> ⊗ anc_init)‖².
 */
[[nodiscard]] double decoy_detection_prob(const AttackUnitary &atk, DecoyBasis basis,
                                          std::size_t k);

/// Bob's full outcome distribution (in the preparation basis) for decoy k.
[[nodiscard]] std::vector<double> decoy_outcome_probs(const AttackUnitary &atk, DecoyBasis basis,
                                                      std::size_t k);

/// Mean of decoy_detection_prob over both bases and all d values.
[[nodiscard]] double decoy_average_detection(const AttackUnitary &atk);

/// Largest decoy_detection_prob over both bases and all values.
[[nodiscard]] double decoy_max_detection(const AttackUnitary &atk);

/// Each decoy picks a basis and value uniformly, passes through the attack and
/// is measured in the announced basis.
[[nodiscard]] DetectionReport simulate_decoy_round(const AttackUnitary &atk,
                                                   std::uint64_t n_decoys, std::uint64_t seed,
                                                   unsigned threads = 1);

/**
 * @brief Exact probability that the GHZ correlation check fails.
 *
 * AllEqual measures the carriers in the computational basis and flags a
 * non-constant string. SumModZero applies F to every carrier (the ancilla is
 * untouched) and flags Σ b_i ≢ 0 (mod d).
 */
[[nodiscard]] double ghz_check_detection(const JointAncillaState &state, CheckMode mode);

/// Fixed mode, or a fair coin between the two modes each round when empty.
using ModePolicy = std::optional<CheckMode>;

[[nodiscard]] DetectionReport simulate_ghz_round(const JointAncillaState &state,
                                                 std::uint64_t n_rounds, ModePolicy policy,
                                                 std::uint64_t seed, unsigned threads = 1);

/// Holevo quantity S(Σ p_j ρ_j) − Σ p_j S(ρ_j), in bits.
[[nodiscard]] double holevo_quantity(std::span<const double> probs,
                                     std::span<const Matrix> states);

/**
 * @brief Eve's Holevo information about the first carrier's computational
 * value j, from the ancilla conditioned on j.
 *
 * Branches with probability below 1e-14 are skipped.
 */
[[nodiscard]] double holevo_leakage(const JointAncillaState &state);

/// Holevo information of {1/d, Tr_sys U(|l> ⊗ anc_init)}.
[[nodiscard]] double decoy_leakage(const AttackUnitary &atk);

} // namespace emguard
