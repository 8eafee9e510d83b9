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
 * Search for attacks that maximize Eve's decoy leakage while keeping the
 * average decoy detection probability under a cap.
 *
 * The search runs Nelder-Mead on the (d·d_anc)² real parameters of the
 * Hermitian generator, from `restarts` random starts, with a quadratic
 * penalty on detection above the cap. Restart r draws its start from
 * derive_stream(seed, r) and the winner is chosen by (objective desc,
 * restart asc), so the result does not depend on the thread count.
 *
 * The resulting tradeoff curve is an empirical probe, not a bound.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace emguard {

struct OptimizerConfig {
    std::size_t d = 2;
    std::size_t d_anc = 2;
    double detection_cap = 1.0;
    double penalty_weight = 1e3;
    std::size_t restarts = 8;
    std::size_t max_evals = 2000; ///< per restart
    double simplex_scale = 0.5;
    /// Starting parameters are uniform in [-start_range, start_range].
    double start_range = 3.141592653589793;
    std::uint64_t seed = 0;
};

/// Throws std::invalid_argument on counts < 1, cap outside [0,1], μ <= 0,
/// or d·d_anc > 16.
void validate(const OptimizerConfig &cfg);

/// Slack allowed when deciding whether a point satisfies its cap.
inline constexpr double kFeasibilitySlack = 1e-6;

struct ObjectiveValue {
    double objective = 0.0;
    double leakage_bits = 0.0;
    double detection = 0.0;
};

/// leakage − μ·max(0, detection − cap)², with all three parts reported.
[[nodiscard]] ObjectiveValue evaluate_objective(std::span<const double> params,
                                                const OptimizerConfig &cfg);

[[nodiscard]] double objective(std::span<const double> params, const OptimizerConfig &cfg);

struct TradeoffPoint {
    double detection_cap = 0.0;
    double achieved_detection = 0.0;
    double achieved_leakage_bits = 0.0;
    std::vector<double> params;
    std::size_t evals_used = 0;
    bool feasible = false;
    double objective = 0.0;
    std::size_t restart = 0; ///< restart index that produced the point

    friend bool operator==(const TradeoffPoint &, const TradeoffPoint &) = default;
};

/**
 * @brief Best feasible point over all restarts, or the best-objective point
 * flagged infeasible when no evaluation met the cap.
 *
 * Every evaluation is a candidate, not just the final simplex vertex.
 */
[[nodiscard]] TradeoffPoint optimize_attack(const OptimizerConfig &cfg, unsigned threads = 1);

/**
 * @brief One optimize_attack per cap, then a running maximum from the
 * smallest cap upward so reported leakage never increases as the cap
 * tightens. A point found under a tighter cap also satisfies every looser
 * one, so it may replace a weaker point there.
 */
[[nodiscard]] std::vector<TradeoffPoint> tradeoff_curve(const OptimizerConfig &cfg,
                                                        std::span<const double> caps,
                                                        unsigned threads = 1);

} // namespace emguard
