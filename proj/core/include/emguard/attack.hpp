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
 * Entanglement-measurement attacks: a unitary on (system ⊗ ancilla) applied
 * to each intercepted particle, and the conditional ancilla vectors it leaves.
 *
 * Wire convention for carrier states under attack: all carrier subsystems
 * first, then the ancillas in particle order.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "emguard/linalg.hpp"
#include "emguard/rng.hpp"
#include "emguard/states.hpp"

namespace emguard {

/// Default tolerance of the no-detection predicate.
inline constexpr double kUndetectableTol = 1e-8;

/**
 * @brief Eve's unitary on system ⊗ ancilla together with the ancilla's
 * initial state.
 *
 * The system qudit is the most significant factor of `u`. Construction
 * validates unitarity to 1e-10 and the ancilla normalization.
 */
class AttackUnitary {
  public:
    AttackUnitary(std::size_t d_sys, std::size_t d_anc, Matrix u, StateVector anc_init);

    [[nodiscard]] std::size_t d_sys() const { return d_sys_; }
    [[nodiscard]] std::size_t d_anc() const { return d_anc_; }
    [[nodiscard]] const Matrix &u() const { return u_; }
    [[nodiscard]] const StateVector &anc_init() const { return anc_init_; }

    /// U(|psi> ⊗ anc_init) for a single system qudit.
    [[nodiscard]] CVector act_on(std::span<const Complex> system_state) const;

  private:
    std::size_t d_sys_;
    std::size_t d_anc_;
    Matrix u_;
    StateVector anc_init_;
};

/**
 * @brief Unnormalized conditional ancilla vectors e_{l,m}.
 *
 * U(|l> ⊗ anc_init) = Σ_m |m> ⊗ e_{l,m}. The scalar/normalized-state split of
 * each e_{l,m} is not unique, so only the fused vector is kept.
 */
class AttackDecomposition {
  public:
    AttackDecomposition(std::size_t d_sys, std::size_t d_anc, std::vector<CVector> e);

    [[nodiscard]] std::size_t d_sys() const { return d_sys_; }
    [[nodiscard]] std::size_t d_anc() const { return d_anc_; }
    [[nodiscard]] const CVector &e(std::size_t l, std::size_t m) const {
        return e_.at(l * d_sys_ + m);
    }

    /// Reassemble U(|l> ⊗ anc_init) from the table.
    [[nodiscard]] CVector reassemble(std::size_t l) const;

  private:
    std::size_t d_sys_;
    std::size_t d_anc_;
    std::vector<CVector> e_;
};

[[nodiscard]] AttackDecomposition decompose(const AttackUnitary &atk);

/**
 * @brief True iff every off-diagonal e_{l,m} has norm <= tol and every
 * diagonal e_{l,l} is within tol of e_{0,0}.
 */
[[nodiscard]] bool is_undetectable(const AttackDecomposition &dec, double tol = kUndetectableTol);

/// The two quantities compared by is_undetectable.
struct UndetectabilityMargins {
    double max_off_diagonal = 0.0;
    double max_diagonal_spread = 0.0;
};
[[nodiscard]] UndetectabilityMargins undetectability_margins(const AttackDecomposition &dec);

/// Identity on system ⊗ ancilla, ancilla starting in |0>.
[[nodiscard]] AttackUnitary identity_attack(std::size_t d, std::size_t d_anc);

/// U|l>|a> = |l>|a + l mod d>, ancilla of dimension d starting in |0>.
[[nodiscard]] AttackUnitary controlled_shift_attack(std::size_t d);

/// I_sys ⊗ w: acts on the ancilla only, so it cannot be detected.
[[nodiscard]] AttackUnitary ancilla_only_attack(std::size_t d, const Matrix &w);

/// Haar-random unitary of side d·d_anc, ancilla starting in |0>.
[[nodiscard]] AttackUnitary random_attack(std::size_t d, std::size_t d_anc, RngStream &rng);

// ---------------------------------------------------------------------------
// Hermitian-generator parameterization

/// (d·d_anc)^2
[[nodiscard]] std::size_t attack_param_count(std::size_t d, std::size_t d_anc);

/**
 * @brief Hermitian matrix of side `side` from side^2 real parameters.
 *
 * Layout: the first `side` entries are the diagonal; then, for each pair
 * (j, k) with j < k in lexicographic order, the real and imaginary part of
 * H[j][k].
 */
[[nodiscard]] Matrix hermitian_from_params(std::size_t side, std::span<const double> params);

/// Inverse of hermitian_from_params.
[[nodiscard]] std::vector<double> params_from_hermitian(const Matrix &h);

/// U = exp(i·H(params)), ancilla starting in |0>.
[[nodiscard]] AttackUnitary parameterized_attack(std::size_t d, std::size_t d_anc,
                                                 std::span<const double> params);

// ---------------------------------------------------------------------------
// Attacks on carrier states

/**
 * @brief Two independent per-particle attacks on a Bell state.
 *
 * Result lives on dims (2, 2, d_anc1, d_anc2).
 */
[[nodiscard]] StateVector attack_bell_carrier(const AttackUnitary &a1, const AttackUnitary &a2,
                                              unsigned b, BellSign sign);

/// Attack i acts on (carrier i, ancilla i) of ghz_state(d, n) ⊗ ancillas.
[[nodiscard]] StateVector attack_ghz_per_particle(std::span<const AttackUnitary> attacks,
                                                  std::size_t d, std::size_t n);

/**
 * @brief A GHZ carrier correlated with one joint ancilla:
 * (1/√d) Σ_j |j, ..., j> ⊗ eps_j, on dims (d, ..., d, d_anc).
 */
struct JointAncillaState {
    std::size_t d = 0;
    std::size_t n = 0;
    std::size_t d_anc = 0;
    StateVector psi;
};

/// Requires Σ_j ‖eps_j‖² = d within 1e-8.
[[nodiscard]] JointAncillaState ghz_joint_ancilla(std::size_t d, std::size_t n,
                                                  std::span<const CVector> eps);

/// Wrap an arbitrary normalized state on dims (d, ..., d, d_anc).
[[nodiscard]] JointAncillaState joint_ancilla_from_state(std::size_t d, std::size_t n,
                                                         StateVector psi);

} // namespace emguard
