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

#include <string>

#include <json.hpp>

#include "emguard/linalg.hpp"

namespace emguard::detail {

/// Serialize with every floating-point value printed as %.17g, so output is
/// byte-stable and round-trips exactly. Object keys keep insertion order.
std::string dump_json(const nlohmann::ordered_json &value, int indent = 2);

/// %.17g
std::string format_double(double v);

nlohmann::ordered_json complex_to_json(Complex z);
nlohmann::ordered_json cvector_to_json(std::span<const Complex> v);
Complex complex_from_json(const nlohmann::json &j);
CVector cvector_from_json(const nlohmann::json &j);

} // namespace emguard::detail
