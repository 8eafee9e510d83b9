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
#include "emguard/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace emguard {

namespace {

struct Vertex {
    std::vector<double> x;
    double f;
};

} // namespace

NelderMeadResult nelder_mead_minimize(const Objective &f, std::vector<double> x0,
                                      const NelderMeadOptions &opts) {
    const std::size_t n = x0.size();
    if (n == 0) {
        throw std::invalid_argument("nelder_mead_minimize: empty parameter vector");
    }
    if (opts.max_evals == 0) {
        throw std::invalid_argument("nelder_mead_minimize: max_evals must be >= 1");
    }
    const double dn = static_cast<double>(n);
    const double alpha = 1.0;
    const double gamma = opts.adaptive ? 1.0 + 2.0 / dn : 2.0;
    const double rho = opts.adaptive ? 0.75 - 1.0 / (2.0 * dn) : 0.5;
    const double sigma = opts.adaptive ? 1.0 - 1.0 / dn : 0.5;

    std::size_t evals = 0;
    NelderMeadResult best{x0, 0.0, 0};
    bool have_best = false;
    const auto eval = [&](const std::vector<double> &x) {
        double v = f(x);
        ++evals;
        if (std::isnan(v)) {
            v = HUGE_VAL;
        }
        if (!have_best || v < best.value) {
            best.x = x;
            best.value = v;
            have_best = true;
        }
        return v;
    };
    const auto budget_left = [&] { return evals < opts.max_evals; };

    std::vector<double> start = std::move(x0);
    while (budget_left()) {
        std::vector<Vertex> simplex;
        simplex.reserve(n + 1);
        simplex.push_back({start, eval(start)});
        for (std::size_t i = 0; i < n && budget_left(); ++i) {
            std::vector<double> x = start;
            x[i] += opts.initial_step;
            simplex.push_back({x, eval(x)});
        }
        if (simplex.size() < n + 1) {
            break;
        }

        std::vector<double> centroid(n);
        std::vector<double> trial(n);
        const auto along = [&](double t) {
            // centroid + t * (centroid - worst)
            const std::vector<double> &w = simplex.back().x;
            for (std::size_t i = 0; i < n; ++i) {
                trial[i] = centroid[i] + t * (centroid[i] - w[i]);
            }
            return trial;
        };

        while (budget_left()) {
            std::stable_sort(simplex.begin(), simplex.end(),
                             [](const Vertex &a, const Vertex &b) { return a.f < b.f; });

            double diameter = 0.0;
            for (std::size_t v = 1; v <= n; ++v) {
                for (std::size_t i = 0; i < n; ++i) {
                    diameter = std::max(diameter, std::abs(simplex[v].x[i] - simplex[0].x[i]));
                }
            }
            if (simplex.back().f - simplex.front().f <= opts.f_tol && diameter <= opts.x_tol) {
                break;
            }

            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (std::size_t v = 0; v < n; ++v) {
                for (std::size_t i = 0; i < n; ++i) {
                    centroid[i] += simplex[v].x[i] / dn;
                }
            }

            const std::vector<double> xr = along(alpha);
            const double fr = eval(xr);
            if (fr < simplex.front().f) {
                if (!budget_left()) {
                    simplex.back() = {xr, fr};
                    break;
                }
                const std::vector<double> xe = along(alpha * gamma);
                const double fe = eval(xe);
                simplex.back() = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
                continue;
            }
            if (fr < simplex[n - 1].f) {
                simplex.back() = {xr, fr};
                continue;
            }
            if (!budget_left()) {
                break;
            }
            // Outside contraction when the reflection beat the worst vertex,
            // inside contraction otherwise.
            const bool outside = fr < simplex.back().f;
            const std::vector<double> xc = along(outside ? alpha * rho : -rho);
            const double fc = eval(xc);
            if (fc < (outside ? fr : simplex.back().f)) {
                simplex.back() = {xc, fc};
                continue;
            }
            // Shrink toward the best vertex.
            for (std::size_t v = 1; v <= n && budget_left(); ++v) {
                for (std::size_t i = 0; i < n; ++i) {
                    simplex[v].x[i] =
                        simplex[0].x[i] + sigma * (simplex[v].x[i] - simplex[0].x[i]);
                }
                simplex[v].f = eval(simplex[v].x);
            }
        }
        start = best.x;
    }
    best.evals = evals;
    return best;
}

} // namespace emguard
