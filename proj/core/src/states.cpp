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
#include "emguard/states.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace emguard {

namespace {

constexpr std::size_t kDefaultSizeCap = std::size_t{1} << 20U;

void require_level(std::size_t d, const char *who) {
    if (d < 2) {
        throw std::invalid_argument(std::string(who) + ": level d must be >= 2");
    }
}

std::size_t checked_power(std::size_t d, std::size_t n, const char *who) {
    const std::size_t cap = statevector_size_cap();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > cap / d) {
            throw std::length_error(std::string(who) + ": " + std::to_string(d) + "^" +
                                    std::to_string(n) + " exceeds the statevector size cap " +
                                    std::to_string(cap));
        }
        total *= d;
    }
    return total;
}

} // namespace

std::size_t statevector_size_cap() {
    const char *env = std::getenv("EMGUARD_SIZE_CAP");
    if (env == nullptr || *env == '\0') {
        return kDefaultSizeCap;
    }
    char *end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
        throw std::invalid_argument(std::string("EMGUARD_SIZE_CAP is not a positive integer: ") +
                                    env);
    }
    return static_cast<std::size_t>(v);
}

Complex root_of_unity(std::size_t d, long long power) {
    const auto dd = static_cast<long long>(d);
    // Reduce first so large exponents do not lose phase accuracy.
    const long long r = ((power % dd) + dd) % dd;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
    return std::polar(1.0, angle);
}

StateVector basis_state(std::size_t d, std::size_t k) {
    require_level(d, "basis_state");
    if (k >= d) {
        throw std::out_of_range("basis_state: label " + std::to_string(k) +
                                " out of range for d=" + std::to_string(d));
    }
    CVector amps(d, Complex{0.0, 0.0});
    amps[k] = 1.0;
    return StateVector(DimensionSpec{d}, std::move(amps));
}

Matrix qft_matrix(std::size_t d) {
    require_level(d, "qft_matrix");
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    Matrix f(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) {
            f(r, k) = root_of_unity(d, static_cast<long long>((k * r) % d)) * s;
        }
    }
    return f;
}

StateVector fourier_state(std::size_t d, std::size_t k) {
    require_level(d, "fourier_state");
    if (k >= d) {
        throw std::out_of_range("fourier_state: label " + std::to_string(k) +
                                " out of range for d=" + std::to_string(d));
    }
    return StateVector(DimensionSpec{d}, qft_matrix(d).column(k));
}

StateVector bell_state(unsigned b, BellSign sign) {
    if (b > 1) {
        throw std::invalid_argument("bell_state: b must be 0 or 1");
    }
    const double s = 1.0 / std::numbers::sqrt2;
    const double sgn = sign == BellSign::Plus ? 1.0 : -1.0;
    CVector amps(4, Complex{0.0, 0.0});
    amps[0 * 2 + b] = s;                // |0 b>
    amps[1 * 2 + (1 - b)] = sgn * s;    // |1 b̄>
    return StateVector(DimensionSpec{2, 2}, std::move(amps));
}

StateVector ghz_state(std::size_t d, std::size_t n) {
    require_level(d, "ghz_state");
    if (n < 2) {
        throw std::invalid_argument("ghz_state: particle count n must be >= 2");
    }
    const std::size_t total = checked_power(d, n, "ghz_state");
    // Stride between |j..j> and |j+1..j+1> is (d^n - 1)/(d - 1).
    const std::size_t step = (total - 1) / (d - 1);
    CVector amps(total, Complex{0.0, 0.0});
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t j = 0; j < d; ++j) {
        amps[j * step] = a;
    }
    return StateVector(DimensionSpec::uniform(d, n), std::move(amps));
}

StateVector ghz_fourier(std::size_t d, std::size_t n) {
    StateVector psi = ghz_state(d, n);
    const Matrix f = qft_matrix(d);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t wire[] = {i};
        psi = apply_local(f, psi, wire);
    }
    return psi;
}

OutcomeDistribution outcome_distribution(const StateVector &psi) {
    const double n2 = norm2(psi.amplitudes());
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-8) {
        throw std::invalid_argument("outcome_distribution: state is not normalized (norm " +
                                    std::to_string(std::sqrt(n2)) + ")");
    }
    OutcomeDistribution out{psi.dims(), std::vector<double>(psi.size())};
    for (std::size_t i = 0; i < psi.size(); ++i) {
        out.probabilities[i] = std::norm(psi[i]);
    }
    return out;
}

std::size_t sample_index(std::span<const double> probabilities, RngStream &rng) {
    if (probabilities.empty()) {
        throw std::invalid_argument("sample_index: empty distribution");
    }
    double total = 0.0;
    for (double p : probabilities) {
        total += p;
    }
    const double u = uniform_unit(rng) * total;
    double acc = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] <= 0.0) {
            continue;
        }
        acc += probabilities[i];
        last_nonzero = i;
        if (u < acc) {
            return i;
        }
    }
    // Rounding can leave u just above the final partial sum.
    return last_nonzero;
}

std::vector<std::size_t> sample_outcome(const StateVector &psi, RngStream &rng) {
    const OutcomeDistribution dist = outcome_distribution(psi);
    return psi.dims().digits(sample_index(dist.probabilities, rng));
}

} // namespace emguard
