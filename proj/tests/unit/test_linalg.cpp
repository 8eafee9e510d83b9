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
#include <numbers>

#include "emguard/attack.hpp"
#include "emguard/constraints.hpp"
#include "emguard/linalg.hpp"
#include "emguard/states.hpp"
#include "oracles.hpp"

using namespace emguard;

namespace {

const Complex I{0.0, 1.0};

Matrix pauli_x() { return Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }

} // namespace

TEST(DimensionSpec, DigitsAreBigEndian) {
    const DimensionSpec dims({2, 3, 4});
    EXPECT_EQ(dims.total(), 24U);
    const std::vector<std::size_t> digits{1, 2, 3};
    EXPECT_EQ(dims.index(digits), 1U * 12 + 2U * 4 + 3U);
    EXPECT_EQ(dims.digits(23), digits);
    EXPECT_THROW(DimensionSpec({2, 1}), std::invalid_argument);
    EXPECT_THROW((void)dims.digits(24), std::out_of_range);
}

TEST(Matrix, RejectsNonFiniteAndRaggedInput) {
    EXPECT_THROW(Matrix(1, 1, CVector{Complex{NAN, 0.0}}), std::invalid_argument);
    EXPECT_THROW(Matrix(2, 2, CVector(3)), std::invalid_argument);
    EXPECT_THROW(Matrix::from_rows({{1.0, 2.0}, {3.0}}), std::invalid_argument);
    EXPECT_THROW(Matrix(2, 3) * Matrix(2, 3), std::invalid_argument);
}

TEST(StateVector, NormalizationGate) {
    EXPECT_THROW(StateVector(DimensionSpec({2}), CVector{1.0, 1.0}), std::invalid_argument);
    EXPECT_NO_THROW(StateVector(DimensionSpec({2}), CVector{1.0, 1.0}, Normalization::Unnormalized));
    EXPECT_THROW(StateVector(DimensionSpec({2}), CVector{1.0}), std::invalid_argument);
}

TEST(Kron, IdentityTimesIdentity) {
    EXPECT_EQ(max_abs_diff(kron(Matrix::identity(2), Matrix::identity(2)), Matrix::identity(4)), 0.0);
}

TEST(Kron, MatchesIndexFormula) {
    const Matrix x = pauli_x();
    EXPECT_EQ(max_abs_diff(kron(x, Matrix::identity(2)), oracle::kron(x, Matrix::identity(2))), 0.0);
    RngStream rng = make_stream(3);
    const Matrix a = haar_unitary(2, rng);
    const Matrix b = oracle::random_hermitian(3, rng);
    EXPECT_LE(max_abs_diff(kron(a, b), oracle::kron(a, b)), 1e-15);
}

TEST(Kron, HadamardPairOnZeroIsUniform) {
    const Matrix f = qft_matrix(2);
    const CVector out = emguard::apply(kron(f, f), CVector{1.0, 0.0, 0.0, 0.0});
    for (const Complex &z : out) {
        EXPECT_NEAR(z.real(), 0.5, 1e-15);
        EXPECT_NEAR(z.imag(), 0.0, 1e-15);
    }
}

TEST(Kron, Associative) {
    RngStream rng = make_stream(11);
    const Matrix a = oracle::random_hermitian(2, rng);
    const Matrix b = haar_unitary(3, rng);
    const Matrix c = oracle::random_hermitian(2, rng);
    EXPECT_LE(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
}

TEST(Dagger, ShapesAndUnitarity) {
    EXPECT_EQ(max_abs_diff(dagger(Matrix::identity(3)), Matrix::identity(3)), 0.0);
    const Matrix m = Matrix::from_rows({{1.0, I, 2.0}, {3.0, -I, 4.0 + I}});
    const Matrix md = dagger(m);
    ASSERT_EQ(md.rows(), 3U);
    ASSERT_EQ(md.cols(), 2U);
    EXPECT_EQ(max_abs_diff(md, oracle::adjoint(m)), 0.0);
    for (std::size_t d = 2; d <= 16; ++d) {
        const Matrix f = qft_matrix(d);
        EXPECT_LE(max_abs_diff(dagger(f) * f, Matrix::identity(d)), 1e-12) << "d=" << d;
    }
}

TEST(Apply, Examples) {
    const CVector psi{0.6, Complex{0.0, 0.8}};
    EXPECT_EQ(max_abs_diff(emguard::apply(Matrix::identity(2), psi), psi), 0.0);

    const CVector plus = emguard::apply(qft_matrix(2), CVector{1.0, 0.0});
    EXPECT_NEAR(plus[0].real(), 1.0 / std::numbers::sqrt2, 1e-15);
    EXPECT_NEAR(plus[1].real(), 1.0 / std::numbers::sqrt2, 1e-15);

    // Controlled shift as a permutation matrix: |l, a> -> |l, a + l>.
    const Matrix cs = controlled_shift_attack(2).u();
    Matrix perm(4, 4);
    for (std::size_t l = 0; l < 2; ++l) {
        for (std::size_t a = 0; a < 2; ++a) {
            perm(l * 2 + (a + l) % 2, l * 2 + a) = 1.0;
        }
    }
    EXPECT_EQ(max_abs_diff(cs, perm), 0.0);
    const CVector out = emguard::apply(cs, CVector{0.0, 0.0, 1.0, 0.0});
    EXPECT_EQ(max_abs_diff(out, CVector{0.0, 0.0, 0.0, 1.0}), 0.0);
}

TEST(Apply, PreservesNormForUnitaries) {
    RngStream rng = make_stream(5);
    for (int t = 0; t < 20; ++t) {
        const Matrix u = haar_unitary(6, rng);
        CVector v(6);
        for (Complex &z : v) {
            z = {standard_normal(rng), standard_normal(rng)};
        }
        EXPECT_NEAR(norm2(emguard::apply(u, v)), norm2(v), 1e-12 * norm2(v));
    }
}

TEST(ApplyLocal, MatchesKronOnWire) {
    RngStream rng = make_stream(17);
    const Matrix u = haar_unitary(3, rng);
    const StateVector psi = ghz_state(3, 3);
    const std::vector<std::size_t> wire{1};
    const StateVector local = apply_local(u, psi, wire);
    const Matrix full = oracle::kron(oracle::kron(Matrix::identity(3), u), Matrix::identity(3));
    EXPECT_LE(max_abs_diff(local.amplitudes(), oracle::matvec(full, psi.amplitudes())), 1e-14);
}

TEST(PartialTrace, ProductState) {
    RngStream rng = make_stream(19);
    for (int t = 0; t < 10; ++t) {
        const Matrix rs = oracle::random_density(3, rng);
        const Matrix ra = oracle::random_density(2, rng);
        const std::vector<std::size_t> keep_s{0};
        const std::vector<std::size_t> keep_a{1};
        const DimensionSpec dims({3, 2});
        EXPECT_LE(max_abs_diff(partial_trace(kron(rs, ra), dims, keep_s), rs), 1e-12);
        EXPECT_LE(max_abs_diff(partial_trace(kron(rs, ra), dims, keep_a), ra), 1e-12);
    }
}

TEST(PartialTrace, BellMarginalIsMaximallyMixed) {
    const Matrix rho = bell_state(0, BellSign::Plus).projector();
    const std::vector<std::size_t> keep{0};
    const Matrix reduced = partial_trace(rho, DimensionSpec({2, 2}), keep);
    EXPECT_LE(max_abs_diff(reduced, oracle::trace_out_second(rho, 2, 2)), 1e-15);
    Matrix half = Matrix::identity(2);
    half *= 0.5;
    EXPECT_LE(max_abs_diff(reduced, half), 1e-15);
}

TEST(PartialTrace, PreservesTraceAndMatchesDirectSum) {
    RngStream rng = make_stream(23);
    const Matrix rho = oracle::random_density(12, rng);
    const DimensionSpec dims({3, 4});
    const std::vector<std::size_t> keep0{0};
    const std::vector<std::size_t> keep1{1};
    const Matrix r0 = partial_trace(rho, dims, keep0);
    const Matrix r1 = partial_trace(rho, dims, keep1);
    EXPECT_NEAR(r0.trace().real(), 1.0, 1e-12);
    EXPECT_NEAR(r1.trace().real(), 1.0, 1e-12);
    EXPECT_LE(max_abs_diff(r0, oracle::trace_out_second(rho, 3, 4)), 1e-14);
    EXPECT_LE(max_abs_diff(r1, oracle::trace_out_first(rho, 3, 4)), 1e-14);
}

TEST(PartialTrace, RejectsBadKeepLists) {
    const Matrix rho = Matrix::identity(8);
    const DimensionSpec dims({2, 2, 2});
    const std::vector<std::size_t> unordered{2, 0};
    const std::vector<std::size_t> out_of_range{3};
    EXPECT_THROW((void)partial_trace(rho, dims, unordered), std::invalid_argument);
    EXPECT_THROW((void)partial_trace(rho, dims, out_of_range), std::invalid_argument);
}

TEST(HermitianEigs, Examples) {
    const EigenDecomposition id = hermitian_eigs(Matrix::identity(3));
    for (double v : id.values) {
        EXPECT_NEAR(v, 1.0, 1e-14);
    }
    const std::vector<Complex> diag{0.75, 0.25};
    const EigenDecomposition dg = hermitian_eigs(Matrix::diagonal(diag));
    EXPECT_NEAR(dg.values[0], 0.25, 1e-15);
    EXPECT_NEAR(dg.values[1], 0.75, 1e-15);

    const EigenDecomposition x = hermitian_eigs(pauli_x());
    const std::vector<double> want = oracle::eigs_2x2(pauli_x());
    EXPECT_NEAR(x.values[0], want[0], 1e-14);
    EXPECT_NEAR(x.values[1], want[1], 1e-14);
    EXPECT_NEAR(x.values[0], -1.0, 1e-14);
}

TEST(HermitianEigs, RandomTwoByTwoAgainstCharacteristicPolynomial) {
    RngStream rng = make_stream(29);
    for (int t = 0; t < 50; ++t) {
        const Matrix h = oracle::random_hermitian(2, rng);
        const EigenDecomposition e = hermitian_eigs(h);
        const std::vector<double> want = oracle::eigs_2x2(h);
        EXPECT_NEAR(e.values[0], want[0], 1e-12);
        EXPECT_NEAR(e.values[1], want[1], 1e-12);
    }
}

TEST(HermitianEigs, ReconstructionUpToSide64) {
    RngStream rng = make_stream(31);
    for (std::size_t n : {2U, 5U, 16U, 64U}) {
        const Matrix h = oracle::random_hermitian(n, rng);
        const EigenDecomposition e = hermitian_eigs(h);
        std::vector<Complex> lambda(e.values.begin(), e.values.end());
        const Matrix rebuilt = e.vectors * Matrix::diagonal(lambda) * dagger(e.vectors);
        EXPECT_LE(max_abs_diff(rebuilt, h), 1e-9) << "n=" << n;
        EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
    }
}

TEST(HermitianEigs, RejectsNonHermitian) {
    const Matrix m = Matrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    EXPECT_THROW((void)hermitian_eigs(m), std::domain_error);
}

TEST(VnEntropy, Examples) {
    EXPECT_NEAR(vn_entropy(basis_state(3, 1).projector()), 0.0, 1e-12);
    Matrix half = Matrix::identity(2);
    half *= 0.5;
    EXPECT_NEAR(vn_entropy(half), 1.0, 1e-12);
    for (std::size_t d = 2; d <= 8; ++d) {
        Matrix mixed = Matrix::identity(d);
        mixed *= 1.0 / static_cast<double>(d);
        EXPECT_NEAR(vn_entropy(mixed), std::log2(static_cast<double>(d)), 1e-12);
    }
}

TEST(VnEntropy, RejectsNonDensityMatrices) {
    EXPECT_THROW((void)vn_entropy(Matrix::identity(2)), std::domain_error);
    const std::vector<Complex> negative{1.5, -0.5};
    EXPECT_THROW((void)vn_entropy(Matrix::diagonal(negative)), std::domain_error);
}

TEST(Expm, Examples) {
    EXPECT_LE(max_abs_diff(expm_hermitian(Matrix(3, 3)), Matrix::identity(3)), 1e-15);

    // exp(i·θ·Y) = cos θ·I + i sin θ·Y with θ = π/2 gives i·Y.
    const Matrix y = Matrix::from_rows({{0.0, -I}, {I, 0.0}});
    Matrix h = y;
    h *= std::numbers::pi / 2.0;
    const Matrix u = expm_hermitian(h);
    const double c = std::cos(std::numbers::pi / 2.0);
    const double s = std::sin(std::numbers::pi / 2.0);
    Matrix want = Matrix::identity(2);
    want *= c;
    Matrix iy = y;
    iy *= I * s;
    want += iy;
    EXPECT_LE(max_abs_diff(u, want), 1e-14);
    EXPECT_NEAR(std::abs(u(0, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u(0, 1)), 1.0, 1e-15);
}

TEST(Expm, RandomGeneratorsGiveUnitaries) {
    RngStream rng = make_stream(37);
    for (int t = 0; t < 20; ++t) {
        const Matrix u = expm_hermitian(oracle::random_hermitian(6, rng));
        EXPECT_LE(max_abs_diff(u * dagger(u), Matrix::identity(6)), 1e-10);
    }
}

TEST(Haar, ContractAndDeterminism) {
    RngStream r1 = make_stream(41);
    const Matrix scalar = haar_unitary(1, r1);
    EXPECT_NEAR(std::abs(scalar(0, 0)), 1.0, 1e-14);

    RngStream a = make_stream(43);
    RngStream b = make_stream(43);
    const Matrix ua = haar_unitary(5, a);
    const Matrix ub = haar_unitary(5, b);
    EXPECT_EQ(max_abs_diff(ua, ub), 0.0);
    EXPECT_LE(max_abs_diff(dagger(ua) * ua, Matrix::identity(5)), 1e-10);
}

TEST(Haar, FirstMomentSanity) {
    RngStream rng = make_stream(47);
    const std::size_t n = 10000;
    Complex sum{0.0, 0.0};
    for (std::size_t t = 0; t < n; ++t) {
        sum += haar_unitary(2, rng)(0, 0);
    }
    // Entries have E|u|² = 1/2, so the mean has σ = sqrt(1/(2n)).
    const double sigma = std::sqrt(1.0 / (2.0 * static_cast<double>(n)));
    EXPECT_LE(std::abs(sum / static_cast<double>(n)), 5.0 * sigma);
}

TEST(Det, Examples) {
    EXPECT_NEAR(std::abs(det(Matrix::identity(4)) - 1.0), 0.0, 1e-15);
    const std::vector<Complex> diag{oracle::zeta(3, -1), oracle::zeta(3, -2)};
    EXPECT_LE(std::abs(det(Matrix::diagonal(diag)) - 1.0), 1e-15);

    const ConstraintSystem sys = build_system(3, ExponentSign::Negative);
    const Complex z = oracle::zeta(3, 1);
    EXPECT_LE(std::abs(det(sys.b) - oracle::cofactor_det(sys.b)), 1e-14);
    EXPECT_LE(std::abs(det(sys.b) - (z - z * z)), 1e-14);
}

TEST(Det, RandomAgainstCofactorExpansion) {
    RngStream rng = make_stream(53);
    for (std::size_t n = 1; n <= 5; ++n) {
        const Matrix m = haar_unitary(n, rng) * oracle::random_hermitian(n, rng);
        const Complex want = oracle::cofactor_det(m);
        EXPECT_LE(std::abs(det(m) - want), 1e-12 * std::max(1.0, std::abs(want))) << "n=" << n;
    }
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(Matrix::identity(4)), 4U);
    EXPECT_EQ(rank(Matrix(3, 5)), 0U);
    const ConstraintSystem sys = build_system(5, ExponentSign::Negative);
    EXPECT_EQ(rank(sys.a), 4U);
    EXPECT_EQ(oracle::gauss_rank(sys.a), 4U);
}

TEST(Rank, AgreesWithGaussianEliminationOnLowRankProducts) {
    RngStream rng = make_stream(59);
    for (std::size_t r = 1; r <= 4; ++r) {
        Matrix left(6, r);
        Matrix right(r, 5);
        for (Complex &z : left.entries()) {
            z = {standard_normal(rng), standard_normal(rng)};
        }
        for (Complex &z : right.entries()) {
            z = {standard_normal(rng), standard_normal(rng)};
        }
        const Matrix m = left * right;
        EXPECT_EQ(rank(m), r);
        EXPECT_EQ(oracle::gauss_rank(m), r);
        EXPECT_EQ(rank(m) + nullspace(m).size(), m.cols());
    }
}

TEST(Nullspace, Examples) {
    EXPECT_TRUE(nullspace(Matrix::identity(3)).empty());

    const std::vector<CVector> k = nullspace(Matrix::from_rows({{1.0, -1.0}}));
    ASSERT_EQ(k.size(), 1U);
    EXPECT_NEAR(std::abs(k[0][0]), 1.0 / std::numbers::sqrt2, 1e-14);
    EXPECT_LE(std::abs(k[0][0] - k[0][1]), 1e-14);

    const ConstraintSystem sys = build_system(4, ExponentSign::Negative);
    const std::vector<CVector> k4 = nullspace(sys.a);
    ASSERT_EQ(k4.size(), 1U);
    for (std::size_t m = 1; m < 4; ++m) {
        EXPECT_LE(std::abs(k4[0][m] - k4[0][0]), 1e-12);
    }
}
