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
#include <gtest/gtest.h>

#include <filesystem>
#include <json.hpp>

#include "emguard/attack_io.hpp"
#include "emguard/reports.hpp"
#include "emguard/verify.hpp"

using namespace emguard;

namespace {

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("emguard_test_" + name);
}

} // namespace

TEST(AttackJson, RoundTripIsExact) {
    RngStream rng = make_stream(149);
    for (int t = 0; t < 5; ++t) {
        const AttackUnitary atk = random_attack(3, 2, rng);
        const AttackUnitary back = attack_from_json(attack_to_json(atk));
        EXPECT_EQ(back.d_sys(), 3U);
        EXPECT_EQ(back.d_anc(), 2U);
        EXPECT_EQ(max_abs_diff(back.u(), atk.u()), 0.0);
        EXPECT_EQ(max_abs_diff(back.anc_init().amplitudes(), atk.anc_init().amplitudes()), 0.0);
    }
}

TEST(AttackJson, FileRoundTrip) {
    const std::filesystem::path path = temp_path("attack.json");
    const AttackUnitary atk = controlled_shift_attack(3);
    save_attack(path, atk);
    const AttackUnitary back = load_attack(path);
    EXPECT_EQ(max_abs_diff(back.u(), atk.u()), 0.0);
    std::filesystem::remove(path);
}

TEST(AttackJson, Errors) {
    EXPECT_THROW((void)load_attack("/nonexistent/emguard/attack.json"), IoError);
    EXPECT_THROW((void)attack_from_json("{not json"), std::invalid_argument);
    EXPECT_THROW((void)attack_from_json(R"({"d_sys": 2, "d_anc": 2})"), std::invalid_argument);
    nlohmann::json bad = nlohmann::json::parse(attack_to_json(identity_attack(2, 2)));
    bad["u"][0] = {2.0, 0.0};
    EXPECT_THROW((void)attack_from_json(bad.dump()), std::invalid_argument);
    bad = nlohmann::json::parse(attack_to_json(identity_attack(2, 2)));
    bad["anc_init"] = {{1.0, 0.0}, {1.0, 0.0}};
    EXPECT_THROW((void)attack_from_json(bad.dump()), std::invalid_argument);
}

TEST(EpsJson, Parse) {
    const std::vector<CVector> eps = eps_from_json(R"({"eps": [[[1,0],[0,0]], [[0,0],[0,1]]]})");
    ASSERT_EQ(eps.size(), 2U);
    EXPECT_EQ(eps[1][1], Complex(0.0, 1.0));
    EXPECT_THROW((void)eps_from_json(R"({"eps": []})"), std::invalid_argument);
    EXPECT_THROW((void)load_eps("/nonexistent/emguard/eps.json"), IoError);
}

TEST(Reports, DetectionJsonRoundTrip) {
    const DetectionReport r = simulate_decoy_round(controlled_shift_attack(2), 500, 3);
    const std::string text = to_json(r);
    EXPECT_EQ(detection_report_from_json(text), r);
    const nlohmann::json j = nlohmann::json::parse(text);
    for (const char *key : {"p_exact", "trials", "detections", "per_case", "leakage_bits", "seed"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
}

TEST(Reports, SeventeenDigits) {
    DetectionReport r;
    r.p_exact = 0.1;
    r.trials = 1;
    EXPECT_NE(to_json(r).find("0.10000000000000001"), std::string::npos);
    EXPECT_NE(to_csv(r).find("p_exact,0.10000000000000001"), std::string::npos);
}

TEST(Reports, ConstraintSchema) {
    const nlohmann::json j = nlohmann::json::parse(to_json(analyze_constraints(3, ExponentSign::Negative)));
    EXPECT_EQ(j.at("d"), 3);
    EXPECT_EQ(j.at("sign"), -1);
    EXPECT_EQ(j.at("rank_a"), 2);
    EXPECT_TRUE(j.at("kernel_is_all_ones").get<bool>());
    EXPECT_EQ(j.at("det_numeric").size(), 2U);
}

TEST(Reports, CurveCsvHeader) {
    OptimizerConfig cfg;
    TradeoffPoint p;
    p.detection_cap = 1.0;
    p.achieved_leakage_bits = 0.5;
    p.evals_used = 7;
    const std::vector<TradeoffPoint> pts{p};
    const std::string csv = curve_to_csv(cfg, pts);
    EXPECT_EQ(csv.rfind("# ", 0), 0U);
    EXPECT_NE(csv.find("\"seed\":0"), std::string::npos);
    EXPECT_NE(csv.find("cap,achieved_detection,leakage_bits,evals\n1,0,0.5,7\n"), std::string::npos);
    const nlohmann::json j = nlohmann::json::parse(curve_to_json(cfg, pts));
    EXPECT_EQ(j.at("points").size(), 1U);
    EXPECT_EQ(j.at("config").at("restarts"), 8);
}

TEST(Verify, DefaultSweepPasses) {
    VerifyOptions opts;
    opts.d_max = 5;
    const std::vector<CheckResult> results = run_verification(opts);
    EXPECT_GE(results.size(), 20U);
    for (const CheckResult &r : results) {
        EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
    }
    const nlohmann::json j = nlohmann::json::parse(verification_to_json(results));
    EXPECT_EQ(j.at("failed"), 0);
}

TEST(Verify, CorruptedQftIsReported) {
    VerifyOptions opts;
    opts.d_max = 3;
    opts.corrupt_qft = true;
    bool found = false;
    for (const CheckResult &r : run_verification(opts)) {
        if (r.name == "qft_unitarity") {
            EXPECT_FALSE(r.passed);
            found = true;
        }
    }
    EXPECT_TRUE(found);
}
