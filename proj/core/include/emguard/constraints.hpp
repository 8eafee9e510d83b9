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
 * The no-detection linear systems over d-th roots of unity.
 *
 * Undetectability against Fourier decoys (negative exponents) or the
 * Fourier-transformed GHZ check (positive exponents) requires the diagonal
 * ancilla vectors x_0..x_{d-1} to satisfy Σ_m ζ^{sign·t·m} x_m = 0 for
 * t = 1..d-1. Each stacked condition is one of these d-1 rows up to a
 * nonzero scale, so the reduced matrix A has the same solution set. A has
 * rank d-1 and its kernel is spanned by the all-ones vector, forcing
 * x_0 = x_1 = ... = x_{d-1}.
 */
#pragma once

#include <cstddef>
#include <span>

#include "emguard/linalg.hpp"

namespace emguard {

/// Exponent convention of the node set: ζ^{-tm} (decoy check) or ζ^{+tm}
/// (GHZ check).
enum class ExponentSign { Negative = -1, Positive = +1 };

[[nodiscard]] int to_int(ExponentSign s);

struct ConstraintSystem {
    std::size_t d = 0;
    ExponentSign sign = ExponentSign::Negative;
    Matrix a; ///< (d-1) x d, a[t-1][m] = ζ^{sign·t·m}
    Matrix b; ///< (d-1) x (d-1), columns 1..d-1 of a
};

[[nodiscard]] ConstraintSystem build_system(std::size_t d, ExponentSign sign);

[[nodiscard]] Complex det_b_numeric(const ConstraintSystem &sys);

enum class DetConvention {
    /// ζ^{sign·d(d-1)/2} ∏_{1<=j<i<=d-1} (ζ^i − ζ^j), as printed for both
    /// exponent signs.
    AsPrinted,
    /// ζ^{sign·d(d-1)/2} ∏_{1<=j<i<=d-1} (ζ^{sign·i} − ζ^{sign·j}), the
    /// Vandermonde determinant of the actual column nodes.
    Corrected,
};

/**
 * @brief Closed-form det(B) from the factorization B = V · diag(ζ^{sign·m}).
 *
 * For the negative sign the printed form and the numeric determinant differ
 * by (−1)^{(d−1)(d−2)/2}: each factor (ζ^i − ζ^j) equals
 * −ζ^{i+j}(ζ^{−i} − ζ^{−j}) and the ζ powers cancel over the product.
 */
[[nodiscard]] Complex det_b_closed_form(std::size_t d, ExponentSign sign, DetConvention convention);

/// rank(a) at relative tolerance 1e-10.
[[nodiscard]] std::size_t verify_rank(const ConstraintSystem &sys);

/**
 * @brief The unit kernel vector of a, phase-fixed so its first entry is real
 * and positive.
 *
 * Throws std::runtime_error when the kernel is not one-dimensional or the
 * vector deviates from all-ones/√d by more than 1e-9.
 */
[[nodiscard]] StateVector kernel_vector(const ConstraintSystem &sys);

/// max_t |Σ_m a[t][m] x_m|.
[[nodiscard]] double residual(const ConstraintSystem &sys, std::span<const Complex> x);

/// max_t ‖Σ_m a[t][m] x_m‖₂ for ancilla-vector entries x_m.
[[nodiscard]] double residual(const ConstraintSystem &sys, std::span<const CVector> x);

/// Summary record emitted by the `constraints` command.
struct ConstraintReport {
    std::size_t d = 0;
    ExponentSign sign = ExponentSign::Negative;
    std::size_t rank_a = 0;
    std::size_t rank_b = 0;
    Complex det_numeric;
    Complex det_closed_corrected;
    Complex det_closed_printed;
    bool kernel_is_all_ones = false;
    double max_residual_all_ones = 0.0;
};

[[nodiscard]] ConstraintReport analyze_constraints(std::size_t d, ExponentSign sign);

} // namespace emguard
