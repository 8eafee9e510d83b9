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
#include "emguard/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <stdexcept>

#include "emguard/attack.hpp"
#include "emguard/attack_io.hpp"
#include "emguard/constraints.hpp"
#include "emguard/eavesdrop.hpp"
#include "emguard/optimizer.hpp"
#include "emguard/states.hpp"
#include "json_writer.hpp"

namespace emguard {

namespace {

/// A check returns an empty string on success, otherwise what went wrong.
using CheckFn = std::function<std::string()>;

std::string exceeds(const char *what, double value, double limit) {
    if (value <= limit) {
        return {};
    }
    return std::string(what) + " = " + detail::format_double(value) + " exceeds " +
           detail::format_double(limit);
}

Matrix random_hermitian(std::size_t n, RngStream &rng) {
    Matrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = standard_normal(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex z{standard_normal(rng), standard_normal(rng)};
            h(i, j) = z;
            h(j, i) = std::conj(z);
        }
    }
    return h;
}

/// U·diag(w)·U† with a random positive spectrum summing to 1.
Matrix random_density(std::size_t n, RngStream &rng) {
    const Matrix u = haar_unitary(n, rng);
    CVector w(n);
    double total = 0.0;
    for (Complex &x : w) {
        x = uniform_unit(rng) + 1e-3;
        total += x.real();
    }
    for (Complex &x : w) {
        x /= total;
    }
    return u * Matrix::diagonal(w) * dagger(u);
}

/// First non-empty failure message, or empty.
std::string first_failure(std::initializer_list<std::string> failures) {
    for (const std::string &f : failures) {
        if (!f.empty()) {
            return f;
        }
    }
    return {};
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions &opts) {
    if (opts.d_max < 2) {
        throw std::invalid_argument("verify: d_max must be >= 2");
    }
    const std::size_t d_max = opts.d_max;
    const std::size_t d_attack_max = std::min<std::size_t>(d_max, 4);
    std::vector<std::pair<std::string, CheckFn>> checks;

    checks.emplace_back("qft_unitarity", [&] {
        double worst = 0.0;
        for (std::size_t d = 2; d <= d_max; ++d) {
            Matrix f = qft_matrix(d);
            if (opts.corrupt_qft) {
                f(0, 0) += 1e-3;
            }
            worst = std::max(worst, max_abs_diff(dagger(f) * f, Matrix::identity(d)));
        }
        return exceeds("max |F^dag F - I|", worst, tol::kExact);
    });

    checks.emplace_back("qft_square_reflection", [&] {
        double worst = 0.0;
        for (std::size_t d = 2; d <= d_max; ++d) {
            const Matrix f2 = qft_matrix(d) * qft_matrix(d);
            for (std::size_t k = 0; k < d; ++k) {
                const CVector out = emguard::apply(f2, basis_state(d, k).amplitudes());
                worst = std::max(worst, max_abs_diff(out, basis_state(d, (d - k) % d).amplitudes()));
            }
        }
        return exceeds("max |F^2|k> - |-k>|", worst, tol::kExact);
    });

    checks.emplace_back("ghz_fourier_support", [&] {
        double worst = 0.0;
        for (std::size_t d = 2; d <= std::min<std::size_t>(d_max, 5); ++d) {
            for (std::size_t n = 2; n <= 4; ++n) {
                const StateVector psi = ghz_fourier(d, n);
                const double mag = std::pow(static_cast<double>(d), (1.0 - static_cast<double>(n)) / 2.0);
                for (std::size_t i = 0; i < psi.size(); ++i) {
                    std::size_t sum = 0;
                    for (std::size_t digit : psi.dims().digits(i)) {
                        sum += digit;
                    }
                    const double expect = sum % d == 0 ? mag : 0.0;
                    worst = std::max(worst, std::abs(std::abs(psi[i]) - expect));
                }
            }
        }
        return exceeds("max amplitude deviation", worst, tol::kExact);
    });

    checks.emplace_back("ghz_fourier_matches_kron_power", [&] {
        double worst = 0.0;
        for (std::size_t d = 2; d <= std::min<std::size_t>(d_max, 4); ++d) {
            for (std::size_t n = 2; n <= 3; ++n) {
                const StateVector direct = emguard::apply(kron_power(qft_matrix(d), n), ghz_state(d, n));
                worst = std::max(worst,
                                 max_abs_diff(direct.amplitudes(), ghz_fourier(d, n).amplitudes()));
            }
        }
        return exceeds("max |F^n ghz - ghz_fourier|", worst, tol::kExact);
    });

    checks.emplace_back("bell_orthonormal", [] {
        std::vector<StateVector> bells;
        for (unsigned b : {0U, 1U}) {
            for (BellSign s : {BellSign::Plus, BellSign::Minus}) {
                bells.push_back(bell_state(b, s));
            }
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                const double expect = i == j ? 1.0 : 0.0;
                worst = std::max(
                    worst, std::abs(inner(bells[i].amplitudes(), bells[j].amplitudes()) - expect));
            }
        }
        return exceeds("max |<b_i|b_j> - delta|", worst, tol::kExact);
    });

    checks.emplace_back("kron_associativity", [&] {
        RngStream rng = derive_stream(opts.seed, 1);
        const Matrix a = haar_unitary(2, rng);
        const Matrix b = random_hermitian(3, rng);
        const Matrix c = haar_unitary(2, rng);
        return exceeds("max |(a x b) x c - a x (b x c)|",
                       max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), tol::kExact);
    });

    checks.emplace_back("apply_preserves_norm", [&] {
        RngStream rng = derive_stream(opts.seed, 2);
        double worst = 0.0;
        for (std::size_t n : {2U, 5U, 16U}) {
            const Matrix u = haar_unitary(n, rng);
            CVector v(n);
            for (auto &z : v) {
                z = {standard_normal(rng), standard_normal(rng)};
            }
            const double nv = std::sqrt(norm2(v));
            for (auto &z : v) {
                z /= nv;
            }
            worst = std::max(worst, std::abs(std::sqrt(norm2(emguard::apply(u, v))) - 1.0));
        }
        return exceeds("max norm drift", worst, tol::kExact);
    });

    checks.emplace_back("partial_trace_product", [&] {
        RngStream rng = derive_stream(opts.seed, 3);
        const Matrix rs = random_density(3, rng);
        const Matrix ra = random_density(2, rng);
        const std::size_t keep[] = {0};
        const Matrix reduced = partial_trace(kron(rs, ra), DimensionSpec{3, 2}, keep);
        return exceeds("max |Tr_a(rs x ra) - rs|", max_abs_diff(reduced, rs), tol::kExact);
    });

    checks.emplace_back("hermitian_eigs_reconstruction", [&] {
        RngStream rng = derive_stream(opts.seed, 4);
        double worst = 0.0;
        for (std::size_t n : {2U, 7U, 32U, 64U}) {
            const Matrix h = random_hermitian(n, rng);
            const EigenDecomposition e = hermitian_eigs(h);
            CVector lam(e.values.begin(), e.values.end());
            const Matrix rebuilt = e.vectors * Matrix::diagonal(lam) * dagger(e.vectors);
            worst = std::max(worst, max_abs_diff(rebuilt, h));
            if (!std::is_sorted(e.values.begin(), e.values.end())) {
                return std::string("eigenvalues not ascending");
            }
        }
        return exceeds("max reconstruction error", worst, tol::kDecomposition);
    });

    checks.emplace_back("expm_unitarity", [&] {
        RngStream rng = derive_stream(opts.seed, 5);
        double worst = 0.0;
        for (std::size_t n : {2U, 4U, 9U}) {
            const Matrix u = expm_hermitian(random_hermitian(n, rng));
            worst = std::max(worst, max_abs_diff(u * dagger(u), Matrix::identity(n)));
        }
        return exceeds("max |UU^dag - I|", worst, tol::kGate);
    });

    checks.emplace_back("haar_unitarity", [&] {
        RngStream rng = derive_stream(opts.seed, 6);
        double worst = 0.0;
        for (std::size_t n : {1U, 2U, 8U, 16U}) {
            const Matrix u = haar_unitary(n, rng);
            worst = std::max(worst, max_abs_diff(dagger(u) * u, Matrix::identity(n)));
        }
        return exceeds("max |U^dag U - I|", worst, tol::kGate);
    });

    checks.emplace_back("rank_nullity", [&] {
        RngStream rng = derive_stream(opts.seed, 7);
        for (std::size_t d = 2; d <= d_max; ++d) {
            const ConstraintSystem sys = build_system(d, ExponentSign::Negative);
            if (rank(sys.a) + nullspace(sys.a).size() != sys.a.cols()) {
                return "rank + nullity != cols for d=" + std::to_string(d);
            }
        }
        const Matrix low = kron(random_hermitian(2, rng), Matrix(1, 3, CVector(3, 1.0)));
        if (rank(low) + nullspace(low).size() != low.cols()) {
            return std::string("rank + nullity != cols for a low-rank product");
        }
        return std::string();
    });

    checks.emplace_back("constraint_rank", [&] {
        for (std::size_t d = 2; d <= d_max; ++d) {
            for (ExponentSign s : {ExponentSign::Negative, ExponentSign::Positive}) {
                const ConstraintSystem sys = build_system(d, s);
                if (verify_rank(sys) != d - 1 || rank(sys.b, 1e-10) != d - 1) {
                    return "rank(A) or rank(B) != d-1 for d=" + std::to_string(d);
                }
            }
        }
        return std::string();
    });

    checks.emplace_back("constraint_kernel_all_ones", [&] {
        for (std::size_t d = 2; d <= d_max; ++d) {
            for (ExponentSign s : {ExponentSign::Negative, ExponentSign::Positive}) {
                try {
                    (void)kernel_vector(build_system(d, s));
                } catch (const std::exception &e) {
                    return "d=" + std::to_string(d) + ": " + e.what();
                }
            }
        }
        return std::string();
    });

    checks.emplace_back("det_closed_form_corrected", [&] {
        double worst = 0.0;
        for (std::size_t d = 2; d <= d_max; ++d) {
            for (ExponentSign s : {ExponentSign::Negative, ExponentSign::Positive}) {
                const Complex num = det_b_numeric(build_system(d, s));
                const Complex closed = det_b_closed_form(d, s, DetConvention::Corrected);
                worst = std::max(worst, std::abs(num - closed) / std::abs(num));
            }
        }
        return exceeds("max relative |det - closed form|", worst, tol::kDecomposition);
    });

    checks.emplace_back("det_printed_sign_factor", [&] {
        double worst = 0.0;
        for (std::size_t d = 2; d <= d_max; ++d) {
            const Complex num = det_b_numeric(build_system(d, ExponentSign::Negative));
            const Complex printed = det_b_closed_form(d, ExponentSign::Negative, DetConvention::AsPrinted);
            const double expect = ((d - 1) * (d - 2) / 2) % 2 == 0 ? 1.0 : -1.0;
            worst = std::max(worst, std::abs(printed / num - expect));
        }
        return exceeds("max |printed/numeric - (-1)^((d-1)(d-2)/2)|", worst, tol::kDecomposition);
    });

    checks.emplace_back("residual_equivalence", [&] {
        RngStream rng = derive_stream(opts.seed, 8);
        for (std::size_t d = 2; d <= std::min<std::size_t>(d_max, 6); ++d) {
            const ConstraintSystem sys = build_system(d, ExponentSign::Negative);
            const Complex c{standard_normal(rng), standard_normal(rng)};
            const CVector prop(d, c);
            CVector generic(d);
            for (auto &z : generic) {
                z = {standard_normal(rng), standard_normal(rng)};
            }
            if (residual(sys, std::span<const Complex>(prop)) > 1e-10) {
                return "proportional-to-ones vector has nonzero residual, d=" + std::to_string(d);
            }
            if (residual(sys, std::span<const Complex>(generic)) <= 1e-10) {
                return "generic vector has zero residual, d=" + std::to_string(d);
            }
        }
        return std::string();
    });

    checks.emplace_back("decompose_roundtrip", [&] {
        RngStream rng = derive_stream(opts.seed, 9);
        double worst = 0.0;
        double row_drift = 0.0;
        for (std::size_t d = 2; d <= d_attack_max; ++d) {
            const AttackUnitary atk = random_attack(d, 3, rng);
            const AttackDecomposition dec = decompose(atk);
            for (std::size_t l = 0; l < d; ++l) {
                worst = std::max(worst, max_abs_diff(dec.reassemble(l),
                                                     atk.act_on(basis_state(d, l).amplitudes())));
                double row = 0.0;
                for (std::size_t m = 0; m < d; ++m) {
                    row += norm2(dec.e(l, m));
                }
                row_drift = std::max(row_drift, std::abs(row - 1.0));
            }
        }
        return first_failure({exceeds("max reassembly error", worst, tol::kExact),
                              exceeds("max |sum_m |e_lm|^2 - 1|", row_drift, tol::kGate)});
    });

    checks.emplace_back("undetectable_zero_detection_and_leakage", [&] {
        RngStream rng = derive_stream(opts.seed, 10);
        for (std::size_t d = 2; d <= d_attack_max; ++d) {
            const AttackUnitary atk = ancilla_only_attack(d, haar_unitary(3, rng));
            if (!is_undetectable(decompose(atk))) {
                return "I x W not classified undetectable, d=" + std::to_string(d);
            }
            if (auto e = exceeds("decoy detection", decoy_average_detection(atk), tol::kExact);
                !e.empty()) {
                return e;
            }
            if (auto e = exceeds("decoy leakage", decoy_leakage(atk), tol::kDecomposition);
                !e.empty()) {
                return e;
            }
        }
        return std::string();
    });

    checks.emplace_back("undetectable_carrier_purity", [&] {
        RngStream rng = derive_stream(opts.seed, 11);
        const AttackUnitary a1 = ancilla_only_attack(2, haar_unitary(2, rng));
        const AttackUnitary a2 = ancilla_only_attack(2, haar_unitary(3, rng));
        const StateVector joint = attack_bell_carrier(a1, a2, 1, BellSign::Minus);
        const std::size_t keep[] = {0, 1};
        const Matrix rho = partial_trace(joint.projector(), joint.dims(), keep);
        double worst = max_abs_diff(rho, bell_state(1, BellSign::Minus).projector());
        const std::size_t d = std::min<std::size_t>(d_max, 3);
        std::vector<AttackUnitary> attacks;
        for (std::size_t i = 0; i < 2; ++i) {
            attacks.push_back(ancilla_only_attack(d, haar_unitary(2, rng)));
        }
        const StateVector g = attack_ghz_per_particle(attacks, d, 2);
        const Matrix rg = partial_trace(g.projector(), g.dims(), keep);
        worst = std::max(worst, max_abs_diff(rg, ghz_state(d, 2).projector()));
        return exceeds("max |rho_carrier - original|", worst, tol::kDecomposition);
    });

    checks.emplace_back("controlled_shift_detection", [] {
        const AttackUnitary atk = controlled_shift_attack(2);
        double worst = std::abs(decoy_detection_prob(atk, DecoyBasis::Fourier, 0) - 0.5);
        worst = std::max(worst, std::abs(decoy_detection_prob(atk, DecoyBasis::Fourier, 1) - 0.5));
        worst = std::max(worst, decoy_detection_prob(atk, DecoyBasis::Computational, 0));
        worst = std::max(worst, std::abs(decoy_average_detection(atk) - 0.25));
        return first_failure({exceeds("max deviation from 0.5/0/0.25", worst, tol::kExact),
                              exceeds("|leakage - 1 bit|", std::abs(decoy_leakage(atk) - 1.0),
                                      tol::kDecomposition)});
    });

    checks.emplace_back("ghz_check_equal_eps", [&] {
        RngStream rng = derive_stream(opts.seed, 12);
        const std::size_t d = std::min<std::size_t>(d_max, 3);
        CVector v(2);
        v[0] = {standard_normal(rng), standard_normal(rng)};
        v[1] = {standard_normal(rng), standard_normal(rng)};
        const double nv = std::sqrt(norm2(v));
        for (auto &z : v) {
            z /= nv;
        }
        const std::vector<CVector> eps(d, v);
        const JointAncillaState s = ghz_joint_ancilla(d, 3, eps);
        double worst = ghz_check_detection(s, CheckMode::AllEqual);
        worst = std::max(worst, ghz_check_detection(s, CheckMode::SumModZero));
        return first_failure({exceeds("max detection", worst, tol::kExact),
                              exceeds("leakage", holevo_leakage(s), tol::kDecomposition)});
    });

    checks.emplace_back("ghz_orthogonal_eps_values", [] {
        const std::vector<CVector> eps = {{1.0, 0.0}, {0.0, 1.0}};
        const JointAncillaState s = ghz_joint_ancilla(2, 2, eps);
        double worst = ghz_check_detection(s, CheckMode::AllEqual);
        worst = std::max(worst, std::abs(ghz_check_detection(s, CheckMode::SumModZero) - 0.5));
        return first_failure({exceeds("max deviation from 0/0.5", worst, tol::kExact),
                              exceeds("|leakage - 1 bit|", std::abs(holevo_leakage(s) - 1.0),
                                      tol::kDecomposition)});
    });

    checks.emplace_back("phase_gauge_invariance", [&] {
        RngStream rng = derive_stream(opts.seed, 13);
        std::vector<CVector> eps = {{1.0, 0.0, 0.0}, {0.0, 0.6, 0.8}, {0.0, 0.0, 1.0}};
        const Complex phase = std::polar(1.0, 2.0 * uniform_unit(rng) * 3.14159);
        std::vector<CVector> rotated = eps;
        for (auto &v : rotated) {
            for (auto &z : v) {
                z *= phase;
            }
        }
        const JointAncillaState a = ghz_joint_ancilla(3, 2, eps);
        const JointAncillaState b = ghz_joint_ancilla(3, 2, rotated);
        double worst = 0.0;
        for (CheckMode m : {CheckMode::AllEqual, CheckMode::SumModZero}) {
            worst = std::max(worst, std::abs(ghz_check_detection(a, m) - ghz_check_detection(b, m)));
        }
        worst = std::max(worst, std::abs(holevo_leakage(a) - holevo_leakage(b)));
        return exceeds("max change under global phase", worst, tol::kDecomposition);
    });

    checks.emplace_back("predicate_equivalence", [&] {
        RngStream rng = derive_stream(opts.seed, 14);
        for (int i = 0; i < 40; ++i) {
            const std::size_t d = 2 + static_cast<std::size_t>(i % 2);
            const AttackUnitary atk = i % 2 == 0 ? ancilla_only_attack(d, haar_unitary(2, rng))
                                                 : random_attack(d, 2, rng);
            const bool pred = is_undetectable(decompose(atk), kUndetectableTol);
            const bool quiet = decoy_max_detection(atk) <= 10.0 * kUndetectableTol;
            if (pred != quiet) {
                return "predicate and decoy detection disagree on sample " + std::to_string(i);
            }
        }
        return std::string();
    });

    checks.emplace_back("parameterized_zero_is_identity", [&] {
        double worst = 0.0;
        for (std::size_t d = 2; d <= 3; ++d) {
            const std::vector<double> zeros(attack_param_count(d, 2), 0.0);
            worst = std::max(worst, max_abs_diff(parameterized_attack(d, 2, zeros).u(),
                                                 Matrix::identity(2 * d)));
        }
        return exceeds("max |U(0) - I|", worst, tol::kExact);
    });

    checks.emplace_back("monte_carlo_consistency", [&] {
        const AttackUnitary atk = controlled_shift_attack(2);
        const DetectionReport r = simulate_decoy_round(atk, 10000, opts.seed, 1);
        const double freq = static_cast<double>(r.detections) / static_cast<double>(r.trials);
        const double sigma = std::sqrt(r.p_exact * (1.0 - r.p_exact) / static_cast<double>(r.trials));
        return exceeds("|freq - p_exact| / sigma", std::abs(freq - r.p_exact) / sigma, 3.0);
    });

    checks.emplace_back("attack_json_roundtrip", [&] {
        RngStream rng = derive_stream(opts.seed, 15);
        const AttackUnitary atk = random_attack(3, 2, rng);
        const AttackUnitary back = attack_from_json(attack_to_json(atk));
        double worst = max_abs_diff(atk.u(), back.u());
        worst = std::max(worst, std::abs(decoy_average_detection(atk) - decoy_average_detection(back)));
        worst = std::max(worst, std::abs(decoy_leakage(atk) - decoy_leakage(back)));
        return exceeds("max round-trip drift", worst, tol::kExact);
    });

    checks.emplace_back("objective_phase_invariance", [&] {
        RngStream rng = derive_stream(opts.seed, 16);
        OptimizerConfig cfg;
        cfg.detection_cap = 0.1;
        std::vector<double> p(attack_param_count(cfg.d, cfg.d_anc));
        for (double &x : p) {
            x = standard_normal(rng);
        }
        std::vector<double> shifted = p;
        for (std::size_t i = 0; i < cfg.d * cfg.d_anc; ++i) {
            shifted[i] += 2.0 * 3.141592653589793;
        }
        return exceeds("|objective(p) - objective(p + 2pi I)|",
                       std::abs(objective(p, cfg) - objective(shifted, cfg)), tol::kDecomposition);
    });

    std::vector<CheckResult> results;
    results.reserve(checks.size());
    for (const auto &[name, fn] : checks) {
        CheckResult r{name, false, {}};
        try {
            r.detail = fn();
            r.passed = r.detail.empty();
        } catch (const std::exception &e) {
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

std::string verification_to_json(const std::vector<CheckResult> &results) {
    nlohmann::ordered_json j;
    std::size_t passed = 0;
    auto failed_names = nlohmann::ordered_json::array();
    auto arr = nlohmann::ordered_json::array();
    for (const CheckResult &r : results) {
        passed += r.passed ? 1 : 0;
        if (!r.passed) {
            failed_names.push_back(r.name);
        }
        nlohmann::ordered_json o;
        o["name"] = r.name;
        o["pass"] = r.passed;
        if (!r.detail.empty()) {
            o["detail"] = r.detail;
        }
        arr.push_back(std::move(o));
    }
    j["passed"] = passed;
    j["failed"] = results.size() - passed;
    j["failed_checks"] = std::move(failed_names);
    j["checks"] = std::move(arr);
    return detail::dump_json(j) + "\n";
}

} // namespace emguard
