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
#include <cstdint>
#include <random>

namespace emguard {

using RngStream = std::mt19937_64;

/// Stream for a top-level seed.
[[nodiscard]] RngStream make_stream(std::uint64_t seed);

/// Independent stream for task `index` under `seed`. Used so Monte-Carlo
/// trials and optimizer restarts give the same result for any worker count.
[[nodiscard]] RngStream derive_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [0, n).
[[nodiscard]] std::size_t uniform_index(RngStream &rng, std::size_t n);

/// Uniform real in [0, 1).
[[nodiscard]] double uniform_unit(RngStream &rng);

/// Standard normal deviate (Box-Muller; consumes two draws).
[[nodiscard]] double standard_normal(RngStream &rng);

} // namespace emguard
