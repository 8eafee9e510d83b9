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
 * Attack matrix files:
 *
 *     {"d_sys": 2, "d_anc": 2,
 *      "u": [[re, im], ...],          // row-major, (d_sys*d_anc)^2 entries
 *      "anc_init": [[re, im], ...]}   // d_anc entries
 */
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "emguard/attack.hpp"

namespace emguard {

/// A file could not be read or written.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] std::string attack_to_json(const AttackUnitary &atk);

/// Throws std::invalid_argument on schema violations.
[[nodiscard]] AttackUnitary attack_from_json(std::string_view text);

void save_attack(const std::filesystem::path &path, const AttackUnitary &atk);

/// Throws IoError naming the path when the file cannot be read.
[[nodiscard]] AttackUnitary load_attack(const std::filesystem::path &path);

/// Ancilla vectors for ghz_joint_ancilla: {"eps": [[[re, im], ...], ...]}.
[[nodiscard]] std::vector<CVector> eps_from_json(std::string_view text);
[[nodiscard]] std::vector<CVector> load_eps(const std::filesystem::path &path);

/// Whole-file read that throws IoError on failure.
[[nodiscard]] std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

} // namespace emguard
