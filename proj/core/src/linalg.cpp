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
#include "emguard/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace emguard {

namespace {

using EMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EMatrix to_eigen(const Matrix &m) {
    EMatrix out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    std::copy(m.entries().begin(), m.entries().end(), out.data());
    return out;
}

template <typename Derived> Matrix from_eigen(const Eigen::MatrixBase<Derived> &e) {
    Matrix out(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
    for (Eigen::Index r = 0; r < e.rows(); ++r) {
        for (Eigen::Index c = 0; c < e.cols(); ++c) {
            out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = e(r, c);
        }
    }
    return out;
}

void require_square(const Matrix &m, const char *who) {
    if (!m.is_square()) {
        throw std::invalid_argument(std::string(who) + ": matrix is not square (" +
                                    std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + ")");
    }
}

void require_hermitian(const Matrix &h, const char *who) {
    require_square(h, who);
    if (!is_hermitian(h, tol::kGate)) {
        throw std::domain_error(std::string(who) + ": matrix is not Hermitian");
    }
}

/// Row-major strides for big-endian digit order.
std::vector<std::size_t> strides_of(const DimensionSpec &dims) {
    std::vector<std::size_t> strides(dims.count(), 1);
    for (std::size_t i = dims.count(); i-- > 1;) {
        strides[i - 1] = strides[i] * dims[i];
    }
    return strides;
}

} // namespace

// ---------------------------------------------------------------------------
// DimensionSpec

DimensionSpec::DimensionSpec(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    for (std::size_t d : dims_) {
        if (d < 2) {
            throw std::invalid_argument("DimensionSpec: every subsystem dimension must be >= 2");
        }
    }
}

DimensionSpec DimensionSpec::uniform(std::size_t d, std::size_t n) {
    return DimensionSpec(std::vector<std::size_t>(n, d));
}

std::size_t DimensionSpec::total() const {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1},
                           std::multiplies<>());
}

DimensionSpec DimensionSpec::concat(const DimensionSpec &other) const {
    std::vector<std::size_t> out = dims_;
    out.insert(out.end(), other.dims_.begin(), other.dims_.end());
    return DimensionSpec(std::move(out));
}

std::vector<std::size_t> DimensionSpec::digits(std::size_t index) const {
    if (index >= total()) {
        throw std::out_of_range("DimensionSpec::digits: index out of range");
    }
    std::vector<std::size_t> out(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
        out[i] = index % dims_[i];
        index /= dims_[i];
    }
    return out;
}

std::size_t DimensionSpec::index(std::span<const std::size_t> digits) const {
    if (digits.size() != dims_.size()) {
        throw std::invalid_argument("DimensionSpec::index: digit count mismatch");
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (digits[i] >= dims_[i]) {
            throw std::out_of_range("DimensionSpec::index: digit out of range");
        }
        idx = idx * dims_[i] + digits[i];
    }
    return idx;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, CVector entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("Matrix: entry count does not equal rows*cols");
    }
    for (const Complex &z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("Matrix: non-finite entry");
        }
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const Complex> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    CVector data;
    data.reserve(r * c);
    for (const auto &row : rows) {
        if (row.size() != c) {
            throw std::invalid_argument("Matrix::from_rows: ragged rows");
        }
        data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(data));
}

CVector Matrix::column(std::size_t c) const {
    CVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

Complex Matrix::trace() const {
    require_square(*this, "trace");
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

Matrix &Matrix::operator+=(const Matrix &rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("Matrix +: shape mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += rhs.data_[i];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("Matrix -: shape mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= rhs.data_[i];
    }
    return *this;
}

Matrix &Matrix::operator*=(Complex s) {
    for (Complex &z : data_) {
        z *= s;
    }
    return *this;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("Matrix *: inner dimension mismatch");
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(DimensionSpec dims, CVector amplitudes, Normalization mode)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)), mode_(mode) {
    if (amps_.size() != dims_.total()) {
        throw std::invalid_argument("StateVector: amplitude count " +
                                    std::to_string(amps_.size()) +
                                    " does not match dimension product " +
                                    std::to_string(dims_.total()));
    }
    for (const Complex &z : amps_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("StateVector: non-finite amplitude");
        }
    }
    if (mode_ == Normalization::Required && std::abs(norm() - 1.0) > tol::kGate) {
        throw std::invalid_argument("StateVector: state is not normalized (norm " +
                                    std::to_string(norm()) + ")");
    }
}

double StateVector::norm() const { return std::sqrt(norm2(amps_)); }

Matrix StateVector::projector() const {
    const std::size_t n = amps_.size();
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            p(i, j) = amps_[i] * std::conj(amps_[j]);
        }
    }
    return p;
}

StateVector StateVector::tensor(const StateVector &other) const {
    CVector out;
    out.reserve(amps_.size() * other.amps_.size());
    for (const Complex &a : amps_) {
        for (const Complex &b : other.amps_) {
            out.push_back(a * b);
        }
    }
    const Normalization mode = normalized() && other.normalized() ? Normalization::Required
                                                                  : Normalization::Unnormalized;
    return StateVector(dims_.concat(other.dims_), std::move(out), mode);
}

// ---------------------------------------------------------------------------
// Helpers

double norm2(std::span<const Complex> v) {
    double s = 0.0;
    for (const Complex &z : v) {
        s += std::norm(z);
    }
    return s;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner: length mismatch");
    }
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

double max_abs(const Matrix &m) {
    double best = 0.0;
    for (const Complex &z : m.entries()) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    return max_abs_diff(a.entries(), b.entries());
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("max_abs_diff: length mismatch");
    }
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        best = std::max(best, std::abs(a[i] - b[i]));
    }
    return best;
}

bool is_unitary(const Matrix &u, double tol) {
    if (!u.is_square()) {
        return false;
    }
    return max_abs_diff(dagger(u) * u, Matrix::identity(u.rows())) <= tol;
}

bool is_hermitian(const Matrix &h, double tol) {
    if (!h.is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t j = i; j < h.cols(); ++j) {
            if (std::abs(h(i, j) - std::conj(h(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Kernel operations

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

Matrix kron_power(const Matrix &m, std::size_t n) {
    if (n == 0) {
        return Matrix::identity(1);
    }
    Matrix out = m;
    for (std::size_t i = 1; i < n; ++i) {
        out = kron(out, m);
    }
    return out;
}

Matrix dagger(const Matrix &a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

CVector apply(const Matrix &u, std::span<const Complex> v) {
    if (u.cols() != v.size()) {
        throw std::invalid_argument("apply: matrix has " + std::to_string(u.cols()) +
                                    " columns but vector has length " +
                                    std::to_string(v.size()));
    }
    CVector out(u.rows(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < u.rows(); ++i) {
        Complex s{0.0, 0.0};
        for (std::size_t j = 0; j < u.cols(); ++j) {
            s += u(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

StateVector apply(const Matrix &u, const StateVector &psi) {
    require_square(u, "apply");
    const Normalization mode =
        psi.normalized() ? Normalization::Required : Normalization::Unnormalized;
    return StateVector(psi.dims(), emguard::apply(u, psi.amplitudes()), mode);
}

StateVector apply_local(const Matrix &u, const StateVector &psi,
                        std::span<const std::size_t> wires) {
    const DimensionSpec &dims = psi.dims();
    std::vector<bool> used(dims.count(), false);
    std::size_t local_dim = 1;
    for (std::size_t w : wires) {
        if (w >= dims.count() || used[w]) {
            throw std::invalid_argument("apply_local: wire out of range or repeated");
        }
        used[w] = true;
        local_dim *= dims[w];
    }
    require_square(u, "apply_local");
    if (u.rows() != local_dim) {
        throw std::invalid_argument("apply_local: operator side " + std::to_string(u.rows()) +
                                    " does not match wire dimension " +
                                    std::to_string(local_dim));
    }

    const std::vector<std::size_t> strides = strides_of(dims);
    // Flat offset contributed by each local basis index.
    std::vector<std::size_t> local_offset(local_dim, 0);
    for (std::size_t l = 0; l < local_dim; ++l) {
        std::size_t rem = l;
        std::size_t off = 0;
        for (std::size_t k = wires.size(); k-- > 0;) {
            const std::size_t d = dims[wires[k]];
            off += (rem % d) * strides[wires[k]];
            rem /= d;
        }
        local_offset[l] = off;
    }

    const CVector &in = psi.amplitudes();
    CVector out(in.size(), Complex{0.0, 0.0});
    CVector gathered(local_dim);
    for (std::size_t base = 0; base < in.size(); ++base) {
        bool is_base = true;
        for (std::size_t w : wires) {
            if ((base / strides[w]) % dims[w] != 0) {
                is_base = false;
                break;
            }
        }
        if (!is_base) {
            continue;
        }
        for (std::size_t l = 0; l < local_dim; ++l) {
            gathered[l] = in[base + local_offset[l]];
        }
        for (std::size_t r = 0; r < local_dim; ++r) {
            Complex s{0.0, 0.0};
            for (std::size_t c = 0; c < local_dim; ++c) {
                s += u(r, c) * gathered[c];
            }
            out[base + local_offset[r]] = s;
        }
    }
    const Normalization mode =
        psi.normalized() ? Normalization::Required : Normalization::Unnormalized;
    return StateVector(dims, std::move(out), mode);
}

Matrix partial_trace(const Matrix &rho, const DimensionSpec &dims,
                     std::span<const std::size_t> keep) {
    require_square(rho, "partial_trace");
    if (rho.rows() != dims.total()) {
        throw std::invalid_argument("partial_trace: matrix side does not match dimensions");
    }
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= dims.count() || (i > 0 && keep[i] <= keep[i - 1])) {
            throw std::invalid_argument(
                "partial_trace: keep must be strictly increasing subsystem indices");
        }
    }

    std::vector<bool> kept(dims.count(), false);
    for (std::size_t k : keep) {
        kept[k] = true;
    }
    std::size_t keep_dim = 1;
    std::size_t trace_dim = 1;
    for (std::size_t i = 0; i < dims.count(); ++i) {
        (kept[i] ? keep_dim : trace_dim) *= dims[i];
    }

    // full[t * keep_dim + k] is the flat index with kept digits k, traced digits t.
    std::vector<std::size_t> full(dims.total());
    for (std::size_t idx = 0; idx < dims.total(); ++idx) {
        const std::vector<std::size_t> dg = dims.digits(idx);
        std::size_t k = 0;
        std::size_t t = 0;
        for (std::size_t i = 0; i < dims.count(); ++i) {
            if (kept[i]) {
                k = k * dims[i] + dg[i];
            } else {
                t = t * dims[i] + dg[i];
            }
        }
        full[t * keep_dim + k] = idx;
    }

    Matrix out(keep_dim, keep_dim);
    for (std::size_t t = 0; t < trace_dim; ++t) {
        const std::size_t *row = &full[t * keep_dim];
        for (std::size_t a = 0; a < keep_dim; ++a) {
            for (std::size_t b = 0; b < keep_dim; ++b) {
                out(a, b) += rho(row[a], row[b]);
            }
        }
    }
    return out;
}

EigenDecomposition hermitian_eigs(const Matrix &h) {
    require_hermitian(h, "hermitian_eigs");
    EMatrix e = to_eigen(h);
    // Symmetrize so the solver sees an exactly Hermitian input.
    const EMatrix sym = 0.5 * (e + e.adjoint());
    Eigen::SelfAdjointEigenSolver<EMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigs: eigensolver did not converge");
    }
    EigenDecomposition out;
    const auto &vals = solver.eigenvalues();
    out.values.assign(vals.data(), vals.data() + vals.size());
    out.vectors = from_eigen(solver.eigenvectors());
    return out;
}

double vn_entropy(const Matrix &rho) {
    const EigenDecomposition eig = hermitian_eigs(rho);
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > tol::kDecomposition) {
        throw std::domain_error("vn_entropy: trace is " + std::to_string(tr) + ", expected 1");
    }
    double s = 0.0;
    for (double lambda : eig.values) {
        if (lambda < -tol::kDecomposition) {
            throw std::domain_error("vn_entropy: negative eigenvalue " + std::to_string(lambda));
        }
        if (lambda > 0.0) {
            s -= lambda * std::log2(lambda);
        }
    }
    return std::max(s, 0.0);
}

Matrix expm_hermitian(const Matrix &h) {
    const EigenDecomposition eig = hermitian_eigs(h);
    const std::size_t n = h.rows();
    Matrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex phase = std::polar(1.0, eig.values[k]);
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = eig.vectors(i, k) * phase;
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += vik * std::conj(eig.vectors(j, k));
            }
        }
    }
    return out;
}

Matrix haar_unitary(std::size_t dim, RngStream &rng) {
    if (dim == 0) {
        throw std::invalid_argument("haar_unitary: dimension must be >= 1");
    }
    const auto n = static_cast<Eigen::Index>(dim);
    EMatrix z(n, n);
    const double scale = 1.0 / std::sqrt(2.0);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double re = standard_normal(rng);
            const double im = standard_normal(rng);
            z(i, j) = Complex{re, im} * scale;
        }
    }
    Eigen::HouseholderQR<EMatrix> qr(z);
    EMatrix q = qr.householderQ() * EMatrix::Identity(n, n);
    const EMatrix &r = qr.matrixQR();
    // Fix the phase freedom of QR so the distribution is Haar.
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        const Complex phase = mag > 0.0 ? rjj / mag : Complex{1.0, 0.0};
        q.col(j) *= phase;
    }
    return from_eigen(q);
}

Complex det(const Matrix &m) {
    require_square(m, "det");
    if (m.rows() == 0) {
        return {1.0, 0.0};
    }
    return Eigen::PartialPivLU<EMatrix>(to_eigen(m)).determinant();
}

std::size_t rank(const Matrix &m, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("rank: tolerance must be positive");
    }
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<EMatrix> svd(to_eigen(m));
    const auto &sv = svd.singularValues();
    const double top = sv.size() > 0 ? sv(0) : 0.0;
    if (top == 0.0) {
        return 0;
    }
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > tol * top) {
            ++r;
        }
    }
    return r;
}

std::vector<CVector> nullspace(const Matrix &m, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("nullspace: tolerance must be positive");
    }
    const std::size_t cols = m.cols();
    std::vector<CVector> basis;
    if (cols == 0) {
        return basis;
    }
    if (m.rows() == 0) {
        for (std::size_t j = 0; j < cols; ++j) {
            CVector e(cols, Complex{0.0, 0.0});
            e[j] = 1.0;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    Eigen::JacobiSVD<EMatrix> svd(to_eigen(m), Eigen::ComputeFullV);
    const std::size_t r = rank(m, tol);
    const auto &v = svd.matrixV();
    for (std::size_t j = r; j < cols; ++j) {
        CVector col(cols);
        for (std::size_t i = 0; i < cols; ++i) {
            col[i] = v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
        basis.push_back(std::move(col));
    }
    return basis;
}

} // namespace emguard
