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
#include "json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace emguard::detail {

namespace {

void write(const nlohmann::ordered_json &v, int indent, int depth, std::string &out) {
    const auto newline = [&](int level) {
        if (indent >= 0) {
            out.push_back('\n');
            out.append(static_cast<std::size_t>(indent * level), ' ');
        }
    };
    switch (v.type()) {
    case nlohmann::json::value_t::object: {
        if (v.empty()) {
            out += "{}";
            return;
        }
        out.push_back('{');
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) {
                out.push_back(',');
            }
            first = false;
            newline(depth + 1);
            out += nlohmann::ordered_json(it.key()).dump();
            out += indent >= 0 ? ": " : ":";
            write(it.value(), indent, depth + 1, out);
        }
        newline(depth);
        out.push_back('}');
        return;
    }
    case nlohmann::json::value_t::array: {
        if (v.empty()) {
            out += "[]";
            return;
        }
        // Arrays of scalars stay on one line.
        bool scalars = true;
        for (const auto &e : v) {
            scalars = scalars && !e.is_structured();
        }
        out.push_back('[');
        bool first = true;
        for (const auto &e : v) {
            if (!first) {
                out += scalars && indent >= 0 ? ", " : ",";
            }
            first = false;
            if (!scalars) {
                newline(depth + 1);
            }
            write(e, indent, depth + 1, out);
        }
        if (!scalars) {
            newline(depth);
        }
        out.push_back(']');
        return;
    }
    case nlohmann::json::value_t::number_float:
        out += format_double(v.get<double>());
        return;
    default:
        out += v.dump();
        return;
    }
}

} // namespace

std::string format_double(double v) {
    if (!std::isfinite(v)) {
        return "null";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string dump_json(const nlohmann::ordered_json &value, int indent) {
    std::string out;
    write(value, indent, 0, out);
    return out;
}

nlohmann::ordered_json complex_to_json(Complex z) {
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

nlohmann::ordered_json cvector_to_json(std::span<const Complex> v) {
    auto arr = nlohmann::ordered_json::array();
    for (const Complex &z : v) {
        arr.push_back(complex_to_json(z));
    }
    return arr;
}

Complex complex_from_json(const nlohmann::json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("expected a complex number encoded as [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

CVector cvector_from_json(const nlohmann::json &j) {
    if (!j.is_array()) {
        throw std::invalid_argument("expected an array of [re, im] pairs");
    }
    CVector out;
    out.reserve(j.size());
    for (const auto &e : j) {
        out.push_back(complex_from_json(e));
    }
    return out;
}

} // namespace emguard::detail
