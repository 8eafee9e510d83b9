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
#include "emguard/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace emguard {

namespace {
std::uint32_t lo32(std::uint64_t v) { return static_cast<std::uint32_t>(v); }
std::uint32_t hi32(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32U); }
} // namespace

RngStream make_stream(std::uint64_t seed) {
    std::seed_seq seq{lo32(seed), hi32(seed)};
    return RngStream(seq);
}

RngStream derive_stream(std::uint64_t seed, std::uint64_t index) {
    // The trailing constant keeps derived streams apart from make_stream(seed).
    std::seed_seq seq{lo32(seed), hi32(seed), lo32(index), hi32(index), 0x5eedU};
    return RngStream(seq);
}

std::size_t uniform_index(RngStream &rng, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_index: empty range");
    }
    // Rejection sampling keeps this independent of the standard library's
    // distribution implementation.
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = RngStream::max() - (RngStream::max() % bound);
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return static_cast<std::size_t>(x % bound);
}

double uniform_unit(RngStream &rng) {
    // 53 random mantissa bits.
    return static_cast<double>(rng() >> 11U) * 0x1.0p-53;
}

double standard_normal(RngStream &rng) {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    const double u1 = 1.0 - uniform_unit(rng); // (0, 1]
    const double u2 = uniform_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

} // namespace emguard
