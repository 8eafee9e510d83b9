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
#include "emguard/reports.hpp"

#include <sstream>
#include <stdexcept>

#include "json_writer.hpp"

namespace emguard {

using detail::format_double;
using ojson = nlohmann::ordered_json;

namespace {

ojson config_json(const OptimizerConfig &cfg) {
    ojson c;
    c["d"] = cfg.d;
    c["d_anc"] = cfg.d_anc;
    c["penalty_weight"] = cfg.penalty_weight;
    c["restarts"] = cfg.restarts;
    c["max_evals"] = cfg.max_evals;
    c["simplex_scale"] = cfg.simplex_scale;
    c["start_range"] = cfg.start_range;
    c["seed"] = cfg.seed;
    return c;
}

} // namespace

std::string to_json(const DetectionReport &report) {
    ojson j;
    j["p_exact"] = report.p_exact;
    j["trials"] = report.trials;
    j["detections"] = report.detections;
    ojson cases = ojson::object();
    for (const auto &[k, v] : report.per_case) {
        cases[k] = v;
    }
    j["per_case"] = cases;
    j["leakage_bits"] = report.leakage_bits;
    j["seed"] = report.seed;
    return detail::dump_json(j) + "\n";
}

DetectionReport detection_report_from_json(std::string_view text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    DetectionReport r;
    r.p_exact = j.at("p_exact").get<double>();
    r.trials = j.at("trials").get<std::uint64_t>();
    r.detections = j.at("detections").get<std::uint64_t>();
    for (const auto &[k, v] : j.at("per_case").items()) {
        r.per_case[k] = v.get<double>();
    }
    r.leakage_bits = j.at("leakage_bits").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

std::string to_csv(const DetectionReport &report) {
    std::ostringstream out;
    out << "field,value\n";
    out << "p_exact," << format_double(report.p_exact) << "\n";
    out << "trials," << report.trials << "\n";
    out << "detections," << report.detections << "\n";
    for (const auto &[k, v] : report.per_case) {
        out << "per_case." << k << "," << format_double(v) << "\n";
    }
    out << "leakage_bits," << format_double(report.leakage_bits) << "\n";
    out << "seed," << report.seed << "\n";
    return out.str();
}

std::string to_json(const ConstraintReport &report) {
    ojson j;
    j["d"] = report.d;
    j["sign"] = to_int(report.sign);
    j["rank_a"] = report.rank_a;
    j["rank_b"] = report.rank_b;
    j["det_numeric"] = detail::complex_to_json(report.det_numeric);
    j["det_closed_corrected"] = detail::complex_to_json(report.det_closed_corrected);
    j["det_closed_printed"] = detail::complex_to_json(report.det_closed_printed);
    j["kernel_is_all_ones"] = report.kernel_is_all_ones;
    j["max_residual_all_ones"] = report.max_residual_all_ones;
    return detail::dump_json(j) + "\n";
}

std::string curve_to_json(const OptimizerConfig &cfg, std::span<const TradeoffPoint> points) {
    ojson j;
    j["config"] = config_json(cfg);
    ojson arr = ojson::array();
    for (const TradeoffPoint &p : points) {
        ojson o;
        o["detection_cap"] = p.detection_cap;
        o["achieved_detection"] = p.achieved_detection;
        o["achieved_leakage_bits"] = p.achieved_leakage_bits;
        o["params"] = p.params;
        o["evals_used"] = p.evals_used;
        o["feasible"] = p.feasible;
        arr.push_back(std::move(o));
    }
    j["points"] = std::move(arr);
    j["note"] = "empirical search result; not a proven bound";
    return detail::dump_json(j) + "\n";
}

std::string curve_to_csv(const OptimizerConfig &cfg, std::span<const TradeoffPoint> points) {
    std::ostringstream out;
    out << "# emguard optimize: empirical search result, not a proven bound\n";
    out << "# config " << detail::dump_json(config_json(cfg), -1) << "\n";
    out << "cap,achieved_detection,leakage_bits,evals\n";
    for (const TradeoffPoint &p : points) {
        out << format_double(p.detection_cap) << "," << format_double(p.achieved_detection) << ","
            << format_double(p.achieved_leakage_bits) << "," << p.evals_used << "\n";
    }
    return out.str();
}

} // namespace emguard
