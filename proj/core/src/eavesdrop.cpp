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
#include "emguard/eavesdrop.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace emguard {

namespace {

constexpr double kBranchFloor = 1e-14;

double clamp_unit(double p) { return std::clamp(p, 0.0, 1.0); }

/// Run count_range over [0, n) split into contiguous chunks and sum.
std::uint64_t parallel_count(std::uint64_t n, unsigned threads,
                             const std::function<std::uint64_t(std::uint64_t, std::uint64_t)> &count_range) {
    const std::uint64_t workers =
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads == 0 ? 1 : threads, n));
    if (workers == 1) {
        return count_range(0, n);
    }
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = n * w / workers;
        const std::uint64_t end = n * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] { partial[w] = count_range(begin, end); });
    }
    for (auto &t : pool) {
        t.join();
    }
    std::uint64_t total = 0;
    for (std::uint64_t p : partial) {
        total += p;
    }
    return total;
}

/// Marginal distribution of the n carrier digits (ancilla traced out).
std::vector<double> carrier_marginal(const StateVector &psi, std::size_t d_anc) {
    std::vector<double> out(psi.size() / d_anc, 0.0);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        out[i / d_anc] += std::norm(psi[i]);
    }
    return out;
}

StateVector fourier_on_carriers(const JointAncillaState &state) {
    const Matrix f = qft_matrix(state.d);
    StateVector psi = state.psi;
    for (std::size_t i = 0; i < state.n; ++i) {
        const std::size_t wire[] = {i};
        psi = apply_local(f, psi, wire);
    }
    return psi;
}

bool check_fails(CheckMode mode, std::span<const std::size_t> digits, std::size_t d) {
    if (mode == CheckMode::AllEqual) {
        return std::adjacent_find(digits.begin(), digits.end(), std::not_equal_to<>()) !=
               digits.end();
    }
    std::size_t sum = 0;
    for (std::size_t b : digits) {
        sum += b;
    }
    return sum % d != 0;
}

/// Carrier outcome table for one check mode, plus which outcomes fail it.
struct CheckTable {
    std::vector<double> probs;
    std::vector<bool> fails;
    double p_fail = 0.0;
};

CheckTable build_check_table(const JointAncillaState &state, CheckMode mode) {
    const StateVector psi = mode == CheckMode::AllEqual ? state.psi : fourier_on_carriers(state);
    CheckTable t;
    t.probs = carrier_marginal(psi, state.d_anc);
    t.fails.resize(t.probs.size());
    const DimensionSpec carriers = DimensionSpec::uniform(state.d, state.n);
    for (std::size_t c = 0; c < t.probs.size(); ++c) {
        t.fails[c] = check_fails(mode, carriers.digits(c), state.d);
        if (t.fails[c]) {
            t.p_fail += t.probs[c];
        }
    }
    t.p_fail = clamp_unit(t.p_fail);
    return t;
}

} // namespace

std::string to_string(DecoyBasis basis) {
    return basis == DecoyBasis::Computational ? "computational" : "fourier";
}

std::string to_string(CheckMode mode) {
    return mode == CheckMode::AllEqual ? "all_equal" : "sum_mod_zero";
}

StateVector decoy_state(std::size_t d, DecoyBasis basis, std::size_t k) {
    return basis == DecoyBasis::Computational ? basis_state(d, k) : fourier_state(d, k);
}

std::vector<double> decoy_outcome_probs(const AttackUnitary &atk, DecoyBasis basis,
                                        std::size_t k) {
    const std::size_t d = atk.d_sys();
    const std::size_t da = atk.d_anc();
    const CVector out = atk.act_on(decoy_state(d, basis, k).amplitudes());
    std::vector<double> probs(d, 0.0);
    for (std::size_t r = 0; r < d; ++r) {
        const StateVector br = decoy_state(d, basis, r);
        double p = 0.0;
        for (std::size_t a = 0; a < da; ++a) {
            Complex w{0.0, 0.0};
            for (std::size_t s = 0; s < d; ++s) {
                w += std::conj(br[s]) * out[s * da + a];
            }
            p += std::norm(w);
        }
        probs[r] = p;
    }
    return probs;
}

double decoy_detection_prob(const AttackUnitary &atk, DecoyBasis basis, std::size_t k) {
    const std::size_t d = atk.d_sys();
    if (k >= d) {
        throw std::out_of_range("decoy_detection_prob: value " + std::to_string(k) +
                                " out of range for d=" + std::to_string(d));
    }
    // Summing the wrong-outcome weights equals 1 − P(k) for a complete basis
    // and does not cancel, so silent attacks report values at rounding level.
    const std::vector<double> probs = decoy_outcome_probs(atk, basis, k);
    double wrong = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        wrong += r == k ? 0.0 : probs[r];
    }
    return clamp_unit(wrong);
}

double decoy_average_detection(const AttackUnitary &atk) {
    double s = 0.0;
    for (DecoyBasis basis : {DecoyBasis::Computational, DecoyBasis::Fourier}) {
        for (std::size_t k = 0; k < atk.d_sys(); ++k) {
            s += decoy_detection_prob(atk, basis, k);
        }
    }
    return s / static_cast<double>(2 * atk.d_sys());
}

double decoy_max_detection(const AttackUnitary &atk) {
    double best = 0.0;
    for (DecoyBasis basis : {DecoyBasis::Computational, DecoyBasis::Fourier}) {
        for (std::size_t k = 0; k < atk.d_sys(); ++k) {
            best = std::max(best, decoy_detection_prob(atk, basis, k));
        }
    }
    return best;
}

DetectionReport simulate_decoy_round(const AttackUnitary &atk, std::uint64_t n_decoys,
                                     std::uint64_t seed, unsigned threads) {
    if (n_decoys == 0) {
        throw std::invalid_argument("simulate_decoy_round: need at least one decoy");
    }
    const std::size_t d = atk.d_sys();
    DetectionReport report;
    report.trials = n_decoys;
    report.seed = seed;

    // tables[basis][k] = Bob's outcome distribution.
    std::vector<std::vector<double>> tables;
    for (DecoyBasis basis : {DecoyBasis::Computational, DecoyBasis::Fourier}) {
        for (std::size_t k = 0; k < d; ++k) {
            tables.push_back(decoy_outcome_probs(atk, basis, k));
            report.per_case[to_string(basis) + "/" + std::to_string(k)] =
                decoy_detection_prob(atk, basis, k);
        }
    }
    report.p_exact = decoy_average_detection(atk);
    report.leakage_bits = decoy_leakage(atk);

    report.detections = parallel_count(n_decoys, threads, [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t hits = 0;
        for (std::uint64_t i = b; i < e; ++i) {
            RngStream rng = derive_stream(seed, i);
            const std::size_t basis = uniform_index(rng, 2);
            const std::size_t k = uniform_index(rng, d);
            const std::size_t r = sample_index(tables[basis * d + k], rng);
            hits += r != k ? 1 : 0;
        }
        return hits;
    });
    return report;
}

double ghz_check_detection(const JointAncillaState &state, CheckMode mode) {
    return build_check_table(state, mode).p_fail;
}

DetectionReport simulate_ghz_round(const JointAncillaState &state, std::uint64_t n_rounds,
                                   ModePolicy policy, std::uint64_t seed, unsigned threads) {
    if (n_rounds == 0) {
        throw std::invalid_argument("simulate_ghz_round: need at least one round");
    }
    const CheckTable all_equal = build_check_table(state, CheckMode::AllEqual);
    const CheckTable sum_mod = build_check_table(state, CheckMode::SumModZero);

    DetectionReport report;
    report.trials = n_rounds;
    report.seed = seed;
    report.per_case[to_string(CheckMode::AllEqual)] = all_equal.p_fail;
    report.per_case[to_string(CheckMode::SumModZero)] = sum_mod.p_fail;
    if (policy) {
        report.p_exact = *policy == CheckMode::AllEqual ? all_equal.p_fail : sum_mod.p_fail;
    } else {
        report.p_exact = 0.5 * (all_equal.p_fail + sum_mod.p_fail);
    }
    report.leakage_bits = holevo_leakage(state);

    report.detections = parallel_count(n_rounds, threads, [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t hits = 0;
        for (std::uint64_t i = b; i < e; ++i) {
            RngStream rng = derive_stream(seed, i);
            CheckMode mode = policy.value_or(CheckMode::AllEqual);
            if (!policy) {
                mode = uniform_index(rng, 2) == 0 ? CheckMode::AllEqual : CheckMode::SumModZero;
            }
            const CheckTable &t = mode == CheckMode::AllEqual ? all_equal : sum_mod;
            hits += t.fails[sample_index(t.probs, rng)] ? 1 : 0;
        }
        return hits;
    });
    return report;
}

double holevo_quantity(std::span<const double> probs, std::span<const Matrix> states) {
    if (probs.size() != states.size() || probs.empty()) {
        throw std::invalid_argument("holevo_quantity: need one probability per state");
    }
    const std::size_t dim = states.front().rows();
    Matrix average(dim, dim);
    double conditional = 0.0;
    for (std::size_t j = 0; j < probs.size(); ++j) {
        average += states[j] * Complex{probs[j], 0.0};
        conditional += probs[j] * vn_entropy(states[j]);
    }
    return std::max(0.0, vn_entropy(average) - conditional);
}

double holevo_leakage(const JointAncillaState &state) {
    const std::size_t d = state.d;
    const std::size_t da = state.d_anc;
    // Carrier strings with first digit j occupy a contiguous block of flat
    // carrier indices.
    const std::size_t block = state.psi.size() / (d * da);
    std::vector<double> probs;
    std::vector<Matrix> conditionals;
    double total = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        Matrix rho(da, da);
        for (std::size_t c = j * block; c < (j + 1) * block; ++c) {
            for (std::size_t a = 0; a < da; ++a) {
                const Complex x = state.psi[c * da + a];
                if (x == Complex{0.0, 0.0}) {
                    continue;
                }
                for (std::size_t b = 0; b < da; ++b) {
                    rho(a, b) += x * std::conj(state.psi[c * da + b]);
                }
            }
        }
        const double p = rho.trace().real();
        total += p;
        if (p < kBranchFloor) {
            continue;
        }
        probs.push_back(p);
        conditionals.push_back(rho * Complex{1.0 / p, 0.0});
    }
    if (total < kBranchFloor) {
        throw std::invalid_argument("holevo_leakage: all ancilla branches are zero");
    }
    for (double &p : probs) {
        p /= total;
    }
    return holevo_quantity(probs, conditionals);
}

double decoy_leakage(const AttackUnitary &atk) {
    const AttackDecomposition dec = decompose(atk);
    const std::size_t d = atk.d_sys();
    const std::size_t da = atk.d_anc();
    std::vector<Matrix> conditionals;
    conditionals.reserve(d);
    for (std::size_t l = 0; l < d; ++l) {
        Matrix rho(da, da);
        for (std::size_t m = 0; m < d; ++m) {
            const CVector &e = dec.e(l, m);
            for (std::size_t a = 0; a < da; ++a) {
                for (std::size_t b = 0; b < da; ++b) {
                    rho(a, b) += e[a] * std::conj(e[b]);
                }
            }
        }
        conditionals.push_back(std::move(rho));
    }
    const std::vector<double> probs(d, 1.0 / static_cast<double>(d));
    return holevo_quantity(probs, conditionals);
}

} // namespace emguard
