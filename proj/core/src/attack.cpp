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
#include "emguard/attack.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace emguard {

namespace {
double distance(std::span<const Complex> a, std::span<const Complex> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::norm(a[i] - b[i]);
    }
    return std::sqrt(s);
}
} // namespace

// ---------------------------------------------------------------------------
// AttackUnitary

AttackUnitary::AttackUnitary(std::size_t d_sys, std::size_t d_anc, Matrix u,
                             StateVector anc_init)
    : d_sys_(d_sys), d_anc_(d_anc), u_(std::move(u)), anc_init_(std::move(anc_init)) {
    if (d_sys_ < 2 || d_anc_ < 2) {
        throw std::invalid_argument("AttackUnitary: d_sys and d_anc must be >= 2");
    }
    const std::size_t side = d_sys_ * d_anc_;
    if (u_.rows() != side || u_.cols() != side) {
        throw std::invalid_argument("AttackUnitary: unitary must be " + std::to_string(side) +
                                    "x" + std::to_string(side));
    }
    if (!is_unitary(u_, tol::kGate)) {
        throw std::invalid_argument("AttackUnitary: matrix is not unitary within 1e-10");
    }
    if (anc_init_.dims() != DimensionSpec{d_anc_} || !anc_init_.normalized()) {
        throw std::invalid_argument(
            "AttackUnitary: ancilla initial state must be a normalized d_anc-level state");
    }
}

CVector AttackUnitary::act_on(std::span<const Complex> system_state) const {
    if (system_state.size() != d_sys_) {
        throw std::invalid_argument("AttackUnitary::act_on: system state has wrong length");
    }
    CVector joint;
    joint.reserve(d_sys_ * d_anc_);
    for (const Complex &s : system_state) {
        for (const Complex &a : anc_init_.amplitudes()) {
            joint.push_back(s * a);
        }
    }
    return emguard::apply(u_, joint);
}

// ---------------------------------------------------------------------------
// AttackDecomposition

AttackDecomposition::AttackDecomposition(std::size_t d_sys, std::size_t d_anc,
                                         std::vector<CVector> e)
    : d_sys_(d_sys), d_anc_(d_anc), e_(std::move(e)) {
    if (e_.size() != d_sys_ * d_sys_) {
        throw std::invalid_argument("AttackDecomposition: expected d_sys^2 ancilla vectors");
    }
    for (const CVector &v : e_) {
        if (v.size() != d_anc_) {
            throw std::invalid_argument("AttackDecomposition: ancilla vector has wrong length");
        }
    }
}

CVector AttackDecomposition::reassemble(std::size_t l) const {
    CVector out;
    out.reserve(d_sys_ * d_anc_);
    for (std::size_t m = 0; m < d_sys_; ++m) {
        const CVector &v = e(l, m);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

AttackDecomposition decompose(const AttackUnitary &atk) {
    const std::size_t d = atk.d_sys();
    const std::size_t da = atk.d_anc();
    std::vector<CVector> e;
    e.reserve(d * d);
    for (std::size_t l = 0; l < d; ++l) {
        const CVector out = atk.act_on(basis_state(d, l).amplitudes());
        for (std::size_t m = 0; m < d; ++m) {
            e.emplace_back(out.begin() + static_cast<std::ptrdiff_t>(m * da),
                           out.begin() + static_cast<std::ptrdiff_t>((m + 1) * da));
        }
    }
    return AttackDecomposition(d, da, std::move(e));
}

UndetectabilityMargins undetectability_margins(const AttackDecomposition &dec) {
    UndetectabilityMargins out;
    const std::size_t d = dec.d_sys();
    for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t m = 0; m < d; ++m) {
            if (l != m) {
                out.max_off_diagonal =
                    std::max(out.max_off_diagonal, std::sqrt(norm2(dec.e(l, m))));
            }
        }
        out.max_diagonal_spread =
            std::max(out.max_diagonal_spread, distance(dec.e(l, l), dec.e(0, 0)));
    }
    return out;
}

bool is_undetectable(const AttackDecomposition &dec, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("is_undetectable: tolerance must be positive");
    }
    const UndetectabilityMargins m = undetectability_margins(dec);
    return m.max_off_diagonal <= tol && m.max_diagonal_spread <= tol;
}

// ---------------------------------------------------------------------------
// Canonical attacks

AttackUnitary identity_attack(std::size_t d, std::size_t d_anc) {
    return AttackUnitary(d, d_anc, Matrix::identity(d * d_anc), basis_state(d_anc, 0));
}

AttackUnitary controlled_shift_attack(std::size_t d) {
    if (d < 2) {
        throw std::invalid_argument("controlled_shift_attack: d must be >= 2");
    }
    Matrix u(d * d, d * d);
    for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t a = 0; a < d; ++a) {
            u(l * d + (a + l) % d, l * d + a) = 1.0;
        }
    }
    return AttackUnitary(d, d, std::move(u), basis_state(d, 0));
}

AttackUnitary ancilla_only_attack(std::size_t d, const Matrix &w) {
    if (!w.is_square()) {
        throw std::invalid_argument("ancilla_only_attack: ancilla unitary must be square");
    }
    return AttackUnitary(d, w.rows(), kron(Matrix::identity(d), w), basis_state(w.rows(), 0));
}

AttackUnitary random_attack(std::size_t d, std::size_t d_anc, RngStream &rng) {
    return AttackUnitary(d, d_anc, haar_unitary(d * d_anc, rng), basis_state(d_anc, 0));
}

// ---------------------------------------------------------------------------
// Parameterization

std::size_t attack_param_count(std::size_t d, std::size_t d_anc) {
    const std::size_t side = d * d_anc;
    return side * side;
}

Matrix hermitian_from_params(std::size_t side, std::span<const double> params) {
    if (params.size() != side * side) {
        throw std::invalid_argument("hermitian_from_params: expected " +
                                    std::to_string(side * side) + " parameters, got " +
                                    std::to_string(params.size()));
    }
    for (double p : params) {
        if (!std::isfinite(p)) {
            throw std::invalid_argument("hermitian_from_params: non-finite parameter");
        }
    }
    Matrix h(side, side);
    std::size_t next = 0;
    for (std::size_t i = 0; i < side; ++i) {
        h(i, i) = params[next++];
    }
    for (std::size_t j = 0; j < side; ++j) {
        for (std::size_t k = j + 1; k < side; ++k) {
            const Complex z{params[next], params[next + 1]};
            next += 2;
            h(j, k) = z;
            h(k, j) = std::conj(z);
        }
    }
    return h;
}

std::vector<double> params_from_hermitian(const Matrix &h) {
    if (!is_hermitian(h, tol::kGate)) {
        throw std::invalid_argument("params_from_hermitian: matrix is not Hermitian");
    }
    const std::size_t side = h.rows();
    std::vector<double> params;
    params.reserve(side * side);
    for (std::size_t i = 0; i < side; ++i) {
        params.push_back(h(i, i).real());
    }
    for (std::size_t j = 0; j < side; ++j) {
        for (std::size_t k = j + 1; k < side; ++k) {
            params.push_back(h(j, k).real());
            params.push_back(h(j, k).imag());
        }
    }
    return params;
}

AttackUnitary parameterized_attack(std::size_t d, std::size_t d_anc,
                                   std::span<const double> params) {
    const Matrix h = hermitian_from_params(d * d_anc, params);
    return AttackUnitary(d, d_anc, expm_hermitian(h), basis_state(d_anc, 0));
}

// ---------------------------------------------------------------------------
// Carrier attacks

StateVector attack_bell_carrier(const AttackUnitary &a1, const AttackUnitary &a2, unsigned b,
                                BellSign sign) {
    if (a1.d_sys() != 2 || a2.d_sys() != 2) {
        throw std::invalid_argument("attack_bell_carrier: both attacks must act on qubits");
    }
    StateVector psi = bell_state(b, sign).tensor(a1.anc_init()).tensor(a2.anc_init());
    const std::size_t w1[] = {0, 2};
    const std::size_t w2[] = {1, 3};
    psi = apply_local(a1.u(), psi, w1);
    return apply_local(a2.u(), psi, w2);
}

StateVector attack_ghz_per_particle(std::span<const AttackUnitary> attacks, std::size_t d,
                                    std::size_t n) {
    if (attacks.size() != n) {
        throw std::invalid_argument("attack_ghz_per_particle: need exactly one attack per particle");
    }
    std::size_t total = ghz_state(d, n).size();
    for (const AttackUnitary &a : attacks) {
        if (a.d_sys() != d) {
            throw std::invalid_argument("attack_ghz_per_particle: attack system level != d");
        }
        total *= a.d_anc();
        if (total > statevector_size_cap()) {
            throw std::length_error("attack_ghz_per_particle: joint state exceeds size cap");
        }
    }
    StateVector psi = ghz_state(d, n);
    for (const AttackUnitary &a : attacks) {
        psi = psi.tensor(a.anc_init());
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t wires[] = {i, n + i};
        psi = apply_local(attacks[i].u(), psi, wires);
    }
    return psi;
}

JointAncillaState ghz_joint_ancilla(std::size_t d, std::size_t n, std::span<const CVector> eps) {
    const StateVector ghz = ghz_state(d, n);
    if (eps.size() != d) {
        throw std::invalid_argument("ghz_joint_ancilla: need exactly d ancilla vectors");
    }
    const std::size_t d_anc = eps.front().size();
    double total = 0.0;
    for (const CVector &v : eps) {
        if (v.size() != d_anc) {
            throw std::invalid_argument("ghz_joint_ancilla: ancilla vectors differ in length");
        }
        total += norm2(v);
    }
    if (std::abs(total - static_cast<double>(d)) > 1e-8) {
        throw std::invalid_argument("ghz_joint_ancilla: sum of squared ancilla norms is " +
                                    std::to_string(total) + ", expected d = " +
                                    std::to_string(d));
    }
    const DimensionSpec dims = DimensionSpec::uniform(d, n).concat(DimensionSpec{d_anc});
    if (dims.total() > statevector_size_cap()) {
        throw std::length_error("ghz_joint_ancilla: joint state exceeds size cap");
    }
    CVector amps(dims.total(), Complex{0.0, 0.0});
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    const std::size_t step = (ghz.size() - 1) / (d - 1);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t a = 0; a < d_anc; ++a) {
            amps[(j * step) * d_anc + a] = s * eps[j][a];
        }
    }
    // The 1e-8 input slack exceeds StateVector's 1e-10 gate; renormalize.
    const double nrm = std::sqrt(norm2(amps));
    for (Complex &z : amps) {
        z /= nrm;
    }
    return JointAncillaState{d, n, d_anc, StateVector(dims, std::move(amps))};
}

JointAncillaState joint_ancilla_from_state(std::size_t d, std::size_t n, StateVector psi) {
    if (n < 2 || psi.dims().count() != n + 1) {
        throw std::invalid_argument("joint_ancilla_from_state: expected n carriers plus one ancilla");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (psi.dims()[i] != d) {
            throw std::invalid_argument("joint_ancilla_from_state: carrier level mismatch");
        }
    }
    if (!psi.normalized()) {
        throw std::invalid_argument("joint_ancilla_from_state: state must be normalized");
    }
    const std::size_t d_anc = psi.dims()[n];
    return JointAncillaState{d, n, d_anc, std::move(psi)};
}

} // namespace emguard
