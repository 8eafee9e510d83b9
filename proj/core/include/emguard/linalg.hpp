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
 * Dense complex linear algebra over tensor-product Hilbert spaces.
 *
 * Everything here is a pure function of its arguments. Basis strings map to
 * flat indices big-endian: the first subsystem is the most significant digit.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "emguard/rng.hpp"

namespace emguard {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Default tolerances shared by every module.
namespace tol {
inline constexpr double kGate = 1e-10;          // unitarity / hermiticity
inline constexpr double kDecomposition = 1e-9;  // eigen / SVD reconstructions
inline constexpr double kExact = 1e-12;         // algebraic identities
} // namespace tol

/**
 * @brief Ordered list of subsystem dimensions, each at least 2.
 */
class DimensionSpec {
  public:
    DimensionSpec() = default;
    explicit DimensionSpec(std::vector<std::size_t> dims);
    DimensionSpec(std::initializer_list<std::size_t> dims)
        : DimensionSpec(std::vector<std::size_t>(dims)) {}

    /// n copies of a d-level system.
    static DimensionSpec uniform(std::size_t d, std::size_t n);

    [[nodiscard]] const std::vector<std::size_t> &dims() const { return dims_; }
    [[nodiscard]] std::size_t count() const { return dims_.size(); }
    [[nodiscard]] std::size_t operator[](std::size_t i) const { return dims_.at(i); }
    /// Product of all dimensions.
    [[nodiscard]] std::size_t total() const;

    [[nodiscard]] DimensionSpec concat(const DimensionSpec &other) const;

    /// Mixed-radix digits of a flat index, most significant first.
    [[nodiscard]] std::vector<std::size_t> digits(std::size_t index) const;
    [[nodiscard]] std::size_t index(std::span<const std::size_t> digits) const;

    friend bool operator==(const DimensionSpec &, const DimensionSpec &) = default;

  private:
    std::vector<std::size_t> dims_;
};

/**
 * @brief Dense row-major complex matrix.
 */
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, CVector entries);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const Complex> diag);
    /// Build from nested rows; every row must have the same length.
    static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    [[nodiscard]] std::span<const Complex> entries() const { return data_; }
    [[nodiscard]] std::span<Complex> entries() { return data_; }

    [[nodiscard]] CVector column(std::size_t c) const;
    [[nodiscard]] Complex trace() const;

    Matrix &operator+=(const Matrix &rhs);
    Matrix &operator-=(const Matrix &rhs);
    Matrix &operator*=(Complex s);

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
    friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix &a, const Matrix &b);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    CVector data_;
};

/// Tag selecting whether a StateVector enforces unit norm.
enum class Normalization { Required, Unnormalized };

/**
 * @brief Amplitudes over a tensor product of subsystems.
 *
 * Normalized to 1e-10 unless constructed with Normalization::Unnormalized.
 */
class StateVector {
  public:
    StateVector() = default;
    StateVector(DimensionSpec dims, CVector amplitudes,
                Normalization mode = Normalization::Required);

    [[nodiscard]] const DimensionSpec &dims() const { return dims_; }
    [[nodiscard]] const CVector &amplitudes() const { return amps_; }
    [[nodiscard]] std::size_t size() const { return amps_.size(); }
    [[nodiscard]] bool normalized() const { return mode_ == Normalization::Required; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm() const;
    /// |psi><psi|
    [[nodiscard]] Matrix projector() const;
    [[nodiscard]] StateVector tensor(const StateVector &other) const;

  private:
    DimensionSpec dims_;
    CVector amps_;
    Normalization mode_ = Normalization::Required;
};

// ---------------------------------------------------------------------------
// Elementwise helpers

[[nodiscard]] double norm2(std::span<const Complex> v);
/// <a|b>, conjugating the left argument.
[[nodiscard]] Complex inner(std::span<const Complex> a, std::span<const Complex> b);
[[nodiscard]] double max_abs(const Matrix &m);
[[nodiscard]] double max_abs_diff(const Matrix &a, const Matrix &b);
[[nodiscard]] double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);
[[nodiscard]] bool is_unitary(const Matrix &u, double tol = tol::kGate);
[[nodiscard]] bool is_hermitian(const Matrix &h, double tol = tol::kGate);

// ---------------------------------------------------------------------------
// Kernel operations

[[nodiscard]] Matrix kron(const Matrix &a, const Matrix &b);
/// m ⊗ m ⊗ ... (n factors).
[[nodiscard]] Matrix kron_power(const Matrix &m, std::size_t n);
[[nodiscard]] Matrix dagger(const Matrix &a);

/// Matrix-vector product. Throws std::invalid_argument on size mismatch.
[[nodiscard]] CVector apply(const Matrix &u, std::span<const Complex> v);
/// Apply u to psi; the result keeps psi's dimensions and normalization mode.
[[nodiscard]] StateVector apply(const Matrix &u, const StateVector &psi);

/**
 * @brief Apply a local operator to a subset of subsystems.
 *
 * @param u square matrix of side prod(dims[w] for w in wires); its row index is
 * read big-endian in the order the wires are listed.
 */
[[nodiscard]] StateVector apply_local(const Matrix &u, const StateVector &psi,
                                      std::span<const std::size_t> wires);

/**
 * @brief Reduced density matrix on the subsystems in `keep`.
 *
 * `keep` must be strictly increasing and in range, otherwise
 * std::invalid_argument. Kept subsystems stay in their original order.
 */
[[nodiscard]] Matrix partial_trace(const Matrix &rho, const DimensionSpec &dims,
                                   std::span<const std::size_t> keep);

struct EigenDecomposition {
    std::vector<double> values; ///< ascending
    Matrix vectors;             ///< eigenvectors as columns
};

/// Throws std::domain_error when ‖h − h†‖_max > 1e-10.
[[nodiscard]] EigenDecomposition hermitian_eigs(const Matrix &h);

/// Von Neumann entropy in bits. Rejects non-PSD or non-unit-trace input.
[[nodiscard]] double vn_entropy(const Matrix &rho);

/// exp(i·h) for Hermitian h.
[[nodiscard]] Matrix expm_hermitian(const Matrix &h);

/// Haar-distributed unitary from the QR decomposition of a Ginibre matrix.
[[nodiscard]] Matrix haar_unitary(std::size_t dim, RngStream &rng);

/// Determinant by LU with partial pivoting.
[[nodiscard]] Complex det(const Matrix &m);

/// Number of singular values above tol·σ_max.
[[nodiscard]] std::size_t rank(const Matrix &m, double tol = tol::kGate);

/// Orthonormal basis of the numerical kernel, dimension cols − rank(m, tol).
[[nodiscard]] std::vector<CVector> nullspace(const Matrix &m, double tol = tol::kGate);

} // namespace emguard
