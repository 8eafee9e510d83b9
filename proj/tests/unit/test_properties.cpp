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
 * Randomized cross-module properties. Each case draws its inputs from a
 * seeded stream so failures are reproducible from the printed case index.
 */
#include <gtest/gtest.h>

#include <cmath>

#include "emguard/attack.hpp"
#include "emguard/constraints.hpp"
#include "emguard/eavesdrop.hpp"
#include "emguard/states.hpp"
#include "oracles.hpp"

using namespace emguard;

namespace {

constexpr int kCases = 40;

/// exp(iεH)·(I ⊗ W) for a random Hermitian H.
AttackUnitary perturbed_undetectable(std::size_t d, std::size_t da, double eps, RngStream &rng) {
    const AttackUnitary base = ancilla_only_attack(d, haar_unitary(da, rng));
    Matrix h = oracle::random_hermitian(d * da, rng);
    h *= eps;
    return AttackUnitary(d, da, expm_hermitian(h) * base.u(), base.anc_init());
}

} // namespace

TEST(Property, DecompositionRoundTrip) {
    RngStream rng = make_stream(151);
    for (int c = 0; c < kCases; ++c) {
        const std::size_t d = 2 + uniform_index(rng, 3);
        const std::size_t da = 2 + uniform_index(rng, 3);
        const AttackUnitary atk = random_attack(d, da, rng);
        const AttackDecomposition dec = decompose(atk);
        for (std::size_t l = 0; l < d; ++l) {
            const CVector direct = atk.act_on(basis_state(d, l).amplitudes());
            EXPECT_LE(max_abs_diff(dec.reassemble(l), direct), 1e-12) << "case " << c;
        }
    }
}

TEST(Property, DetectionIsAProbability) {
    RngStream rng = make_stream(157);
    for (int c = 0; c < kCases; ++c) {
        const std::size_t d = 2 + uniform_index(rng, 3);
        const AttackUnitary atk = random_attack(d, 2, rng);
        for (DecoyBasis b : {DecoyBasis::Computational, DecoyBasis::Fourier}) {
            for (std::size_t k = 0; k < d; ++k) {
                const double p = decoy_detection_prob(atk, b, k);
                EXPECT_GE(p, -1e-12);
                EXPECT_LE(p, 1.0 + 1e-12);
            }
        }
    }
}

TEST(Property, UndetectableImpliesNoDetectionNoLeakageIntactCarriers) {
    RngStream rng = make_stream(163);
    for (int c = 0; c < kCases; ++c) {
        const std::size_t d = 2 + uniform_index(rng, 2);
        const std::size_t da = 2 + uniform_index(rng, 2);
        const AttackUnitary atk = ancilla_only_attack(d, haar_unitary(da, rng));
        ASSERT_TRUE(is_undetectable(decompose(atk)));
        EXPECT_LE(decoy_average_detection(atk), 1e-12);
        EXPECT_LE(decoy_max_detection(atk), 10.0 * kUndetectableTol);
        EXPECT_LE(decoy_leakage(atk), 1e-9);

        const std::vector<AttackUnitary> attacks(3, atk);
        const StateVector out = attack_ghz_per_particle(attacks, d, 3);
        const std::vector<std::size_t> keep{0, 1, 2};
        const Matrix rho = partial_trace(out.projector(), out.dims(), keep);
        EXPECT_LE(max_abs_diff(rho, ghz_state(d, 3).projector()), 1e-9);
    }
}

TEST(Property, ZeroAverageDetectionImpliesPredicate) {
    // Attacks built to satisfy the premise: products with exact-zero detection.
    RngStream rng = make_stream(167);
    for (int c = 0; c < kCases; ++c) {
        const std::size_t d = 2 + uniform_index(rng, 3);
        const Matrix w = haar_unitary(3, rng);
        const Matrix phase = Matrix::diagonal(std::vector<Complex>(d, std::polar(1.0, uniform_unit(rng))));
        const Matrix u = kron(phase, w);
        const StateVector anc(DimensionSpec({3}), haar_unitary(3, rng).column(0));
        const AttackUnitary atk(d, 3, u, anc);
        ASSERT_LE(decoy_average_detection(atk), 1e-12);
        EXPECT_TRUE(is_undetectable(decompose(atk), 1e-6)) << "case " << c;
    }
}

TEST(Property, PredicateMatchesConstraintAlgebra) {
    RngStream rng = make_stream(173);
    for (int c = 0; c < kCases; ++c) {
        const std::size_t d = 2 + uniform_index(rng, 3);
        const double eps = c % 2 == 0 ? 0.0 : 0.05 + 0.5 * uniform_unit(rng);
        const AttackUnitary atk = perturbed_undetectable(d, 2, eps, rng);
        const AttackDecomposition dec = decompose(atk);
        const ConstraintSystem sys = build_system(d, c % 4 < 2 ? ExponentSign::Negative
                                                               : ExponentSign::Positive);
        std::vector<CVector> diag;
        for (std::size_t m = 0; m < d; ++m) {
            diag.push_back(dec.e(m, m));
        }
        const UndetectabilityMargins margins = undetectability_margins(dec);
        const double tol = kUndetectableTol;
        const bool algebra = residual(sys, diag) <= tol && margins.max_off_diagonal <= tol;
        EXPECT_EQ(algebra, is_undetectable(dec, tol)) << "case " << c << " eps " << eps;
    }
}

TEST(Property, GhzEqualEpsNeverDetected) {
    RngStream rng = make_stream(179);
    for (int c = 0; c < kCases; ++c) {
        const std::size_t d = 2 + uniform_index(rng, 3);
        const std::size_t n = 2 + uniform_index(rng, 2);
        const CVector e = haar_unitary(3, rng).column(0);
        const std::vector<CVector> eps(d, e);
        const JointAncillaState s = ghz_joint_ancilla(d, n, eps);
        EXPECT_LE(ghz_check_detection(s, CheckMode::AllEqual), 1e-12);
        EXPECT_LE(ghz_check_detection(s, CheckMode::SumModZero), 1e-12);
        EXPECT_LE(holevo_leakage(s), 1e-9);
    }
}

TEST(Property, ResidualZeroIffAllOnes) {
    RngStream rng = make_stream(181);
    for (int c = 0; c < kCases; ++c) {
        const std::size_t d = 2 + uniform_index(rng, 8);
        const ConstraintSystem sys = build_system(d, ExponentSign::Negative);
        const Complex scale{standard_normal(rng), standard_normal(rng)};
        CVector x(d, scale);
        const bool perturb = c % 2 == 1;
        if (perturb) {
            for (Complex &z : x) {
                z += Complex{0.1 * standard_normal(rng), 0.1 * standard_normal(rng)};
            }
        }
        double spread = 0.0;
        for (const Complex &z : x) {
            spread = std::max(spread, std::abs(z - x[0]));
        }
        const bool in_kernel = residual(sys, x) <= 1e-10;
        EXPECT_EQ(in_kernel, spread <= 1e-8) << "case " << c;
    }
}

TEST(Property, ReducedBellCarrierIntactUnderUndetectableAttacks) {
    RngStream rng = make_stream(191);
    for (int c = 0; c < kCases; ++c) {
        const AttackUnitary a1 = ancilla_only_attack(2, haar_unitary(2 + uniform_index(rng, 2), rng));
        const AttackUnitary a2 = ancilla_only_attack(2, haar_unitary(2 + uniform_index(rng, 2), rng));
        const unsigned b = static_cast<unsigned>(uniform_index(rng, 2));
        const BellSign s = uniform_index(rng, 2) == 0 ? BellSign::Plus : BellSign::Minus;
        const StateVector out = attack_bell_carrier(a1, a2, b, s);
        const std::vector<std::size_t> keep{0, 1};
        const Matrix rho = partial_trace(out.projector(), out.dims(), keep);
        EXPECT_NEAR(oracle::purity(rho), 1.0, 1e-9);
    }
}
