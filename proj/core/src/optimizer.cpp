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
#include "emguard/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include "emguard/attack.hpp"
#include "emguard/eavesdrop.hpp"
#include "emguard/nelder_mead.hpp"
#include "emguard/rng.hpp"

namespace emguard {

namespace {

struct RestartOutcome {
    std::optional<TradeoffPoint> best_feasible;
    TradeoffPoint best_any;
};

/// (objective desc, restart asc)
bool better(const TradeoffPoint &a, const TradeoffPoint &b) {
    if (a.objective != b.objective) {
        return a.objective > b.objective;
    }
    return a.restart < b.restart;
}

RestartOutcome run_restart(const OptimizerConfig &cfg, std::size_t restart) {
    RngStream rng = derive_stream(cfg.seed, restart);
    std::vector<double> x0(attack_param_count(cfg.d, cfg.d_anc));
    for (double &x : x0) {
        x = (2.0 * uniform_unit(rng) - 1.0) * cfg.start_range;
    }

    RestartOutcome out;
    bool have_any = false;
    const auto consider = [&](std::span<const double> x, const ObjectiveValue &v) {
        TradeoffPoint p;
        p.detection_cap = cfg.detection_cap;
        p.achieved_detection = v.detection;
        p.achieved_leakage_bits = v.leakage_bits;
        p.objective = v.objective;
        p.restart = restart;
        p.feasible = v.detection <= cfg.detection_cap + kFeasibilitySlack;
        if (!have_any || p.objective > out.best_any.objective) {
            p.params.assign(x.begin(), x.end());
            out.best_any = p;
            have_any = true;
        }
        if (p.feasible &&
            (!out.best_feasible || p.objective > out.best_feasible->objective)) {
            p.params.assign(x.begin(), x.end());
            out.best_feasible = p;
        }
    };

    NelderMeadOptions opts;
    opts.max_evals = cfg.max_evals;
    opts.initial_step = cfg.simplex_scale;
    const NelderMeadResult res = nelder_mead_minimize(
        [&](std::span<const double> x) {
            const ObjectiveValue v = evaluate_objective(x, cfg);
            consider(x, v);
            return -v.objective;
        },
        std::move(x0), opts);

    out.best_any.evals_used = res.evals;
    if (out.best_feasible) {
        out.best_feasible->evals_used = res.evals;
    }
    return out;
}

} // namespace

void validate(const OptimizerConfig &cfg) {
    if (cfg.d < 2 || cfg.d_anc < 2) {
        throw std::invalid_argument("optimizer: d and d_anc must be >= 2");
    }
    if (cfg.d * cfg.d_anc > 16) {
        throw std::invalid_argument("optimizer: d*d_anc must be <= 16");
    }
    if (!(cfg.detection_cap >= 0.0 && cfg.detection_cap <= 1.0)) {
        throw std::invalid_argument("optimizer: detection cap must lie in [0, 1]");
    }
    if (!(cfg.penalty_weight > 0.0)) {
        throw std::invalid_argument("optimizer: penalty weight must be positive");
    }
    if (cfg.restarts < 1 || cfg.max_evals < 1) {
        throw std::invalid_argument("optimizer: restarts and max_evals must be >= 1");
    }
    if (!(cfg.simplex_scale > 0.0) || !(cfg.start_range >= 0.0)) {
        throw std::invalid_argument("optimizer: simplex scale must be positive");
    }
}

ObjectiveValue evaluate_objective(std::span<const double> params, const OptimizerConfig &cfg) {
    const AttackUnitary atk = parameterized_attack(cfg.d, cfg.d_anc, params);
    ObjectiveValue v;
    v.leakage_bits = decoy_leakage(atk);
    v.detection = decoy_average_detection(atk);
    const double excess = std::max(0.0, v.detection - cfg.detection_cap);
    v.objective = v.leakage_bits - cfg.penalty_weight * excess * excess;
    return v;
}

double objective(std::span<const double> params, const OptimizerConfig &cfg) {
    return evaluate_objective(params, cfg).objective;
}

TradeoffPoint optimize_attack(const OptimizerConfig &cfg, unsigned threads) {
    validate(cfg);
    std::vector<RestartOutcome> outcomes(cfg.restarts);
    const std::size_t workers =
        std::clamp<std::size_t>(threads == 0 ? 1 : threads, 1, cfg.restarts);
    if (workers == 1) {
        for (std::size_t r = 0; r < cfg.restarts; ++r) {
            outcomes[r] = run_restart(cfg, r);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t r = w; r < cfg.restarts; r += workers) {
                    outcomes[r] = run_restart(cfg, r);
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    std::size_t total_evals = 0;
    std::optional<TradeoffPoint> best_feasible;
    std::optional<TradeoffPoint> best_any;
    for (const RestartOutcome &o : outcomes) {
        total_evals += o.best_any.evals_used;
        if (o.best_feasible && (!best_feasible || better(*o.best_feasible, *best_feasible))) {
            best_feasible = o.best_feasible;
        }
        if (!best_any || better(o.best_any, *best_any)) {
            best_any = o.best_any;
        }
    }
    TradeoffPoint result = best_feasible ? *best_feasible : *best_any;
    result.evals_used = total_evals;
    return result;
}

std::vector<TradeoffPoint> tradeoff_curve(const OptimizerConfig &cfg, std::span<const double> caps,
                                          unsigned threads) {
    if (caps.empty()) {
        throw std::invalid_argument("tradeoff_curve: caps must be nonempty");
    }
    std::vector<TradeoffPoint> points;
    points.reserve(caps.size());
    for (double cap : caps) {
        OptimizerConfig c = cfg;
        c.detection_cap = cap;
        points.push_back(optimize_attack(c, threads));
    }

    // Running maximum from the tightest cap upward.
    std::vector<std::size_t> order(caps.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return caps[a] < caps[b]; });
    std::optional<TradeoffPoint> carry;
    for (std::size_t i : order) {
        TradeoffPoint &p = points[i];
        if (carry && carry->achieved_leakage_bits > p.achieved_leakage_bits) {
            const std::size_t evals = p.evals_used;
            p = *carry;
            p.detection_cap = caps[i];
            p.evals_used = evals;
            p.feasible = p.achieved_detection <= caps[i] + kFeasibilitySlack;
        }
        if (!carry || p.achieved_leakage_bits > carry->achieved_leakage_bits) {
            carry = p;
        }
    }
    return points;
}

} // namespace emguard
