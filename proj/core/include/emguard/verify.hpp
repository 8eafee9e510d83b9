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
 * Cross-module invariant sweep behind `emguard verify`.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace emguard {

struct VerifyOptions {
    /// Largest qudit level swept (QFT and constraint checks). Must be >= 2.
    std::size_t d_max = 9;
    std::uint64_t seed = 1;
    /// Test hook: perturb the Fourier matrix inside the unitarity check.
    bool corrupt_qft = false;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

[[nodiscard]] std::vector<CheckResult> run_verification(const VerifyOptions &opts);

/// {"passed": n, "failed": m, "failed_checks": [...], "checks": [...]}
[[nodiscard]] std::string verification_to_json(const std::vector<CheckResult> &results);

} // namespace emguard
