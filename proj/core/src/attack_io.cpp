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
#include "emguard/attack_io.hpp"

#include <fstream>
#include <sstream>

#include "json_writer.hpp"

namespace emguard {

namespace {

nlohmann::json parse(std::string_view text, const char *what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string(what) + ": malformed JSON: " + e.what());
    }
}

std::size_t positive_field(const nlohmann::json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
        throw std::invalid_argument(std::string("attack JSON: missing or invalid \"") + key + "\"");
    }
    return j[key].get<std::size_t>();
}

} // namespace

std::string attack_to_json(const AttackUnitary &atk) {
    nlohmann::ordered_json j;
    j["d_sys"] = atk.d_sys();
    j["d_anc"] = atk.d_anc();
    j["u"] = detail::cvector_to_json(atk.u().entries());
    j["anc_init"] = detail::cvector_to_json(atk.anc_init().amplitudes());
    return detail::dump_json(j) + "\n";
}

AttackUnitary attack_from_json(std::string_view text) {
    const nlohmann::json j = parse(text, "attack JSON");
    if (!j.is_object()) {
        throw std::invalid_argument("attack JSON: top level must be an object");
    }
    const std::size_t d_sys = positive_field(j, "d_sys");
    const std::size_t d_anc = positive_field(j, "d_anc");
    if (!j.contains("u") || !j.contains("anc_init")) {
        throw std::invalid_argument("attack JSON: requires \"u\" and \"anc_init\"");
    }
    const std::size_t side = d_sys * d_anc;
    CVector u = detail::cvector_from_json(j["u"]);
    if (u.size() != side * side) {
        throw std::invalid_argument("attack JSON: \"u\" must have (d_sys*d_anc)^2 entries");
    }
    CVector anc = detail::cvector_from_json(j["anc_init"]);
    if (anc.size() != d_anc) {
        throw std::invalid_argument("attack JSON: \"anc_init\" must have d_anc entries");
    }
    return AttackUnitary(d_sys, d_anc, Matrix(side, side, std::move(u)),
                         StateVector(DimensionSpec{d_anc}, std::move(anc)));
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file for reading: " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("error while reading file: " + path.string());
    }
    return ss.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open file for writing: " + path.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw IoError("error while writing file: " + path.string());
    }
}

void save_attack(const std::filesystem::path &path, const AttackUnitary &atk) {
    write_text_file(path, attack_to_json(atk));
}

AttackUnitary load_attack(const std::filesystem::path &path) {
    return attack_from_json(read_text_file(path));
}

std::vector<CVector> eps_from_json(std::string_view text) {
    const nlohmann::json j = parse(text, "eps JSON");
    if (!j.is_object() || !j.contains("eps") || !j["eps"].is_array()) {
        throw std::invalid_argument("eps JSON: expected {\"eps\": [[[re, im], ...], ...]}");
    }
    std::vector<CVector> out;
    for (const auto &v : j["eps"]) {
        out.push_back(detail::cvector_from_json(v));
        if (out.back().size() != out.front().size()) {
            throw std::invalid_argument("eps JSON: all eps vectors must have the same length");
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("eps JSON: \"eps\" must list one vector per level");
    }
    return out;
}

std::vector<CVector> load_eps(const std::filesystem::path &path) {
    return eps_from_json(read_text_file(path));
}

} // namespace emguard
