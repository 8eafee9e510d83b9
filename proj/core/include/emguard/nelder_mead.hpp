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
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace emguard {

struct NelderMeadOptions {
    std::size_t max_evals = 2000;
    /// Edge length of the initial axis-aligned simplex.
    double initial_step = 0.5;
    /// Dimension-dependent coefficients (Gao & Han), better above ~10 dims.
    bool adaptive = true;
    /// Converged when both the value spread and the simplex diameter fall
    /// below these; remaining budget is spent on a fresh simplex at the best
    /// vertex.
    double f_tol = 1e-12;
    double x_tol = 1e-9;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t evals = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimize f from x0. Deterministic: no internal randomness.
[[nodiscard]] NelderMeadResult nelder_mead_minimize(const Objective &f, std::vector<double> x0,
                                                    const NelderMeadOptions &opts);

} // namespace emguard
