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
#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "emguard/linalg.hpp"
#include "emguard/states.hpp"
#include "oracles.hpp"

using namespace emguard;

TEST(BasisState, Examples) {
    EXPECT_EQ(max_abs_diff(basis_state(2, 0).amplitudes(), CVector{1.0, 0.0}), 0.0);
    EXPECT_EQ(max_abs_diff(basis_state(3, 2).amplitudes(), CVector{0.0, 0.0, 1.0}), 0.0);
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = 0; k < 4; ++k) {
            const Complex ip = inner(basis_state(4, j).amplitudes(), basis_state(4, k).amplitudes());
            EXPECT_EQ(ip, Complex(j == k ? 1.0 : 0.0, 0.0));
        }
    }
    EXPECT_THROW((void)basis_state(3, 3), std::out_of_range);
    EXPECT_THROW((void)basis_state(1, 0), std::invalid_argument);
}

TEST(Qft, HadamardAtDimensionTwo) {
    const double h = 1.0 / std::numbers::sqrt2;
    const Matrix want = Matrix::from_rows({{h, h}, {h, -h}});
    EXPECT_LE(max_abs_diff(qft_matrix(2), want), 1e-15);
}

TEST(Qft, EntryFormula) {
    const Complex want = oracle::zeta(3, 2) / std::sqrt(3.0);
    EXPECT_LE(std::abs(qft_matrix(3)(1, 2) - want), 1e-15);
    for (std::size_t d = 2; d <= 7; ++d) {
        const Matrix f = qft_matrix(d);
        for (std::size_t k = 0; k < d; ++k) {
            EXPECT_LE(max_abs_diff(f.column(k), oracle::fourier_column(d, k)), 1e-14);
            EXPECT_LE(max_abs_diff(fourier_state(d, k).amplitudes(), oracle::fourier_column(d, k)),
                      1e-14);
        }
    }
}

TEST(Qft, UnitaryAndSquareIsReflection) {
    for (std::size_t d = 2; d <= 16; ++d) {
        const Matrix f = qft_matrix(d);
        EXPECT_LE(max_abs_diff(dagger(f) * f, Matrix::identity(d)), 1e-12) << "d=" << d;
        const Matrix f2 = oracle::matmul(f, f);
        for (std::size_t k = 0; k < d; ++k) {
            const CVector out = oracle::matvec(f2, oracle::basis(d, k));
            EXPECT_LE(oracle::max_diff(out, oracle::basis(d, (d - k) % d)), 1e-12)
                << "d=" << d << " k=" << k;
        }
    }
}

TEST(Bell, ExamplesAndOrthonormality) {
    const double h = 1.0 / std::numbers::sqrt2;
    EXPECT_LE(max_abs_diff(bell_state(0, BellSign::Plus).amplitudes(), CVector{h, 0.0, 0.0, h}),
              1e-15);
    EXPECT_LE(max_abs_diff(bell_state(1, BellSign::Minus).amplitudes(), CVector{0.0, h, -h, 0.0}),
              1e-15);
    std::vector<StateVector> all;
    for (unsigned b : {0U, 1U}) {
        for (BellSign s : {BellSign::Plus, BellSign::Minus}) {
            all.push_back(bell_state(b, s));
        }
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
            const Complex ip = inner(all[i].amplitudes(), all[j].amplitudes());
            EXPECT_NEAR(std::abs(ip), i == j ? 1.0 : 0.0, 1e-15);
        }
    }
    EXPECT_THROW((void)bell_state(2, BellSign::Plus), std::invalid_argument);
}

TEST(Ghz, Examples) {
    EXPECT_LE(max_abs_diff(ghz_state(2, 2).amplitudes(), bell_state(0, BellSign::Plus).amplitudes()),
              1e-15);
    const double a = 1.0 / std::sqrt(3.0);
    CVector want(9, Complex{0.0, 0.0});
    want[0] = want[4] = want[8] = a;
    EXPECT_LE(max_abs_diff(ghz_state(3, 2).amplitudes(), want), 1e-15);
    for (std::size_t d = 2; d <= 5; ++d) {
        for (std::size_t n = 2; n <= 5; ++n) {
            EXPECT_NEAR(ghz_state(d, n).norm(), 1.0, 1e-12);
        }
    }
}

TEST(GhzFourier, SmallCases) {
    const double h = 1.0 / std::numbers::sqrt2;
    EXPECT_LE(max_abs_diff(ghz_fourier(2, 2).amplitudes(), CVector{h, 0.0, 0.0, h}), 1e-15);
    const CVector got = ghz_fourier(2, 3).amplitudes();
    for (std::size_t idx = 0; idx < 8; ++idx) {
        const bool even = __builtin_popcount(static_cast<unsigned>(idx)) % 2 == 0;
        EXPECT_NEAR(got[idx].real(), even ? 0.5 : 0.0, 1e-15) << idx;
        EXPECT_NEAR(got[idx].imag(), 0.0, 1e-15) << idx;
    }
}

TEST(GhzFourier, MatchesDoubleSumAndKronPower) {
    for (std::size_t d = 2; d <= 5; ++d) {
        for (std::size_t n = 2; n <= 4; ++n) {
            const StateVector psi = ghz_fourier(d, n);
            const DimensionSpec dims = DimensionSpec::uniform(d, n);
            for (std::size_t idx = 0; idx < psi.size(); ++idx) {
                const Complex want = oracle::ghz_fourier_amplitude(d, dims.digits(idx));
                EXPECT_LE(std::abs(psi[idx] - want), 1e-12);
            }
            const CVector direct = emguard::apply(kron_power(qft_matrix(d), n), ghz_state(d, n).amplitudes());
            EXPECT_LE(max_abs_diff(psi.amplitudes(), direct), 1e-12);
        }
    }
}

TEST(GhzFourier, SupportIsZeroSumStringsWithEqualMagnitude) {
    for (std::size_t d = 2; d <= 5; ++d) {
        for (std::size_t n = 2; n <= 4; ++n) {
            const StateVector psi = ghz_fourier(d, n);
            const DimensionSpec dims = DimensionSpec::uniform(d, n);
            const double mag = std::pow(static_cast<double>(d), (1.0 - static_cast<double>(n)) / 2.0);
            std::size_t support = 0;
            for (std::size_t idx = 0; idx < psi.size(); ++idx) {
                std::size_t sum = 0;
                for (std::size_t b : dims.digits(idx)) {
                    sum += b;
                }
                if (sum % d == 0) {
                    ++support;
                    EXPECT_NEAR(std::abs(psi[idx]), mag, 1e-12);
                } else {
                    EXPECT_LE(std::abs(psi[idx]), 1e-12);
                }
            }
            EXPECT_EQ(support, static_cast<std::size_t>(std::pow(d, n - 1)));
        }
    }
}

TEST(Outcomes, Distribution) {
    const OutcomeDistribution zero = outcome_distribution(basis_state(2, 0));
    EXPECT_EQ(zero.probabilities, (std::vector<double>{1.0, 0.0}));
    const OutcomeDistribution bell = outcome_distribution(bell_state(0, BellSign::Plus));
    ASSERT_EQ(bell.probabilities.size(), 4U);
    EXPECT_NEAR(bell.probabilities[0], 0.5, 1e-15);
    EXPECT_NEAR(bell.probabilities[1], 0.0, 1e-15);
    EXPECT_NEAR(bell.probabilities[2], 0.0, 1e-15);
    EXPECT_NEAR(bell.probabilities[3], 0.5, 1e-15);
    double total = 0.0;
    for (double p : outcome_distribution(ghz_fourier(3, 3)).probabilities) {
        total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(Outcomes, Sampling) {
    RngStream rng = make_stream(61);
    const StateVector zeros(DimensionSpec::uniform(3, 3), basis_state(27, 0).amplitudes());
    for (int t = 0; t < 100; ++t) {
        EXPECT_EQ(sample_outcome(zeros, rng), (std::vector<std::size_t>{0, 0, 0}));
    }

    const std::size_t n = 10000;
    std::size_t hits = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const std::vector<std::size_t> out = sample_outcome(bell_state(0, BellSign::Plus), rng);
        hits += out == std::vector<std::size_t>{0, 0} ? 1 : 0;
    }
    const double sigma = std::sqrt(0.25 / static_cast<double>(n));
    EXPECT_LE(std::abs(static_cast<double>(hits) / static_cast<double>(n) - 0.5), 3.0 * sigma);

    RngStream a = make_stream(67);
    RngStream b = make_stream(67);
    for (int t = 0; t < 50; ++t) {
        EXPECT_EQ(sample_outcome(ghz_fourier(3, 2), a), sample_outcome(ghz_fourier(3, 2), b));
    }
}

TEST(SizeCap, EnvironmentOverride) {
    ASSERT_EQ(setenv("EMGUARD_SIZE_CAP", "64", 1), 0);
    EXPECT_EQ(statevector_size_cap(), 64U);
    EXPECT_NO_THROW((void)ghz_state(2, 6));
    EXPECT_THROW((void)ghz_state(2, 7), std::length_error);
    ASSERT_EQ(unsetenv("EMGUARD_SIZE_CAP"), 0);
    EXPECT_EQ(statevector_size_cap(), std::size_t{1} << 20);
}
