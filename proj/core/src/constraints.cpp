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
#include "emguard/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "emguard/states.hpp"

namespace emguard {

namespace {

constexpr double kRankTol = 1e-10;
constexpr double kKernelTol = 1e-9;

void require_level(std::size_t d) {
    if (d < 2) {
        throw std::invalid_argument("constraint system: d must be >= 2");
    }
}

long long signed_power(ExponentSign s, std::size_t p) {
    return static_cast<long long>(to_int(s)) * static_cast<long long>(p);
}

} // namespace

int to_int(ExponentSign s) { return static_cast<int>(s); }

ConstraintSystem build_system(std::size_t d, ExponentSign sign) {
    require_level(d);
    ConstraintSystem sys{d, sign, Matrix(d - 1, d), Matrix(d - 1, d - 1)};
    for (std::size_t t = 1; t < d; ++t) {
        for (std::size_t m = 0; m < d; ++m) {
            // Exponents are reduced mod d inside root_of_unity.
            sys.a(t - 1, m) = root_of_unity(d, signed_power(sign, (t * m) % d));
            if (m >= 1) {
                sys.b(t - 1, m - 1) = sys.a(t - 1, m);
            }
        }
    }
    return sys;
}

Complex det_b_numeric(const ConstraintSystem &sys) { return det(sys.b); }

Complex det_b_closed_form(std::size_t d, ExponentSign sign, DetConvention convention) {
    require_level(d);
    const int node_sign = convention == DetConvention::Corrected ? to_int(sign) : 1;
    Complex prod = root_of_unity(d, signed_power(sign, (d * (d - 1) / 2) % d));
    for (std::size_t i = 1; i < d; ++i) {
        for (std::size_t j = 1; j < i; ++j) {
            prod *= root_of_unity(d, node_sign * static_cast<long long>(i)) -
                    root_of_unity(d, node_sign * static_cast<long long>(j));
        }
    }
    return prod;
}

std::size_t verify_rank(const ConstraintSystem &sys) { return rank(sys.a, kRankTol); }

StateVector kernel_vector(const ConstraintSystem &sys) {
    const std::vector<CVector> basis = nullspace(sys.a, kRankTol);
    if (basis.size() != 1) {
        throw std::runtime_error("kernel_vector: kernel dimension is " +
                                 std::to_string(basis.size()) + ", expected 1");
    }
    CVector v = basis.front();
    // Fix the global phase so v[0] is real and positive.
    const Complex phase = std::abs(v[0]) > 0.0 ? std::conj(v[0]) / std::abs(v[0]) : 1.0;
    for (Complex &z : v) {
        z *= phase;
    }
    const double expected = 1.0 / std::sqrt(static_cast<double>(sys.d));
    double deviation = 0.0;
    for (const Complex &z : v) {
        deviation = std::max(deviation, std::abs(z - expected));
    }
    if (deviation > kKernelTol) {
        throw std::runtime_error("kernel_vector: kernel deviates from all-ones by " +
                                 std::to_string(deviation));
    }
    return StateVector(DimensionSpec{sys.d}, std::move(v));
}

double residual(const ConstraintSystem &sys, std::span<const Complex> x) {
    if (x.size() != sys.d) {
        throw std::invalid_argument("residual: expected " + std::to_string(sys.d) + " entries");
    }
    double worst = 0.0;
    for (std::size_t t = 0; t + 1 < sys.d; ++t) {
        Complex s{0.0, 0.0};
        for (std::size_t m = 0; m < sys.d; ++m) {
            s += sys.a(t, m) * x[m];
        }
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

double residual(const ConstraintSystem &sys, std::span<const CVector> x) {
    if (x.size() != sys.d) {
        throw std::invalid_argument("residual: expected " + std::to_string(sys.d) + " entries");
    }
    const std::size_t len = x.front().size();
    for (const CVector &v : x) {
        if (v.size() != len) {
            throw std::invalid_argument("residual: ancilla vectors differ in length");
        }
    }
    double worst = 0.0;
    CVector acc(len);
    for (std::size_t t = 0; t + 1 < sys.d; ++t) {
        std::fill(acc.begin(), acc.end(), Complex{0.0, 0.0});
        for (std::size_t m = 0; m < sys.d; ++m) {
            for (std::size_t a = 0; a < len; ++a) {
                acc[a] += sys.a(t, m) * x[m][a];
            }
        }
        worst = std::max(worst, std::sqrt(norm2(acc)));
    }
    return worst;
}

ConstraintReport analyze_constraints(std::size_t d, ExponentSign sign) {
    const ConstraintSystem sys = build_system(d, sign);
    ConstraintReport r;
    r.d = d;
    r.sign = sign;
    r.rank_a = verify_rank(sys);
    r.rank_b = rank(sys.b, kRankTol);
    r.det_numeric = det_b_numeric(sys);
    r.det_closed_corrected = det_b_closed_form(d, sign, DetConvention::Corrected);
    r.det_closed_printed = det_b_closed_form(d, sign, DetConvention::AsPrinted);
    try {
        (void)kernel_vector(sys);
        r.kernel_is_all_ones = true;
    } catch (const std::runtime_error &) {
        r.kernel_is_all_ones = false;
    }
    const CVector ones(d, Complex{1.0, 0.0});
    r.max_residual_all_ones = residual(sys, std::span<const Complex>(ones));
    return r;
}

} // namespace emguard
