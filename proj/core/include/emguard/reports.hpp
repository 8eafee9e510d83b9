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
 * JSON and CSV renderings of the analysis results. Floating-point values are
 * printed with 17 significant digits so outputs are byte-stable and
 * round-trip exactly.
 */
#pragma once

#include <span>
#include <string>
#include <string_view>

#include "emguard/constraints.hpp"
#include "emguard/eavesdrop.hpp"
#include "emguard/optimizer.hpp"

namespace emguard {

/// Fields: p_exact, trials, detections, per_case, leakage_bits, seed.
[[nodiscard]] std::string to_json(const DetectionReport &report);
[[nodiscard]] DetectionReport detection_report_from_json(std::string_view text);
/// Two columns, field,value; per-case rows are named per_case.<case>.
[[nodiscard]] std::string to_csv(const DetectionReport &report);

/// Fields: d, sign, rank_a, rank_b, det_numeric, det_closed_corrected,
/// det_closed_printed, kernel_is_all_ones, max_residual_all_ones. Complex
/// values are [re, im].
[[nodiscard]] std::string to_json(const ConstraintReport &report);

/// {"config": {...}, "points": [TradeoffPoint fields...]}
[[nodiscard]] std::string curve_to_json(const OptimizerConfig &cfg,
                                        std::span<const TradeoffPoint> points);
/// Columns cap, achieved_detection, leakage_bits, evals; the config and seed
/// are echoed in leading '#' comment lines.
[[nodiscard]] std::string curve_to_csv(const OptimizerConfig &cfg,
                                       std::span<const TradeoffPoint> points);

} // namespace emguard
