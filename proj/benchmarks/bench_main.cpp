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
 * Microbenchmarks for the hot paths: local gates, partial traces, Haar
 * sampling, the optimizer objective and Monte-Carlo decoy rounds.
 */
#include <benchmark/benchmark.h>

#include <vector>

#include "emguard/attack.hpp"
#include "emguard/eavesdrop.hpp"
#include "emguard/optimizer.hpp"
#include "emguard/states.hpp"

using namespace emguard;

static void BM_QftOnEveryWire(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ghz_fourier(d, n));
    }
}
BENCHMARK(BM_QftOnEveryWire)->Args({2, 10})->Args({3, 6})->Args({5, 4});

static void BM_PartialTrace(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const StateVector psi = ghz_state(d, 3).tensor(basis_state(d, 0));
    const Matrix rho = psi.projector();
    const std::vector<std::size_t> keep{0, 1, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace(rho, psi.dims(), keep));
    }
}
BENCHMARK(BM_PartialTrace)->Arg(2)->Arg(3);

static void BM_HaarUnitary(benchmark::State &state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    RngStream rng = make_stream(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(haar_unitary(dim, rng));
    }
}
BENCHMARK(BM_HaarUnitary)->Arg(4)->Arg(16)->Arg(64);

static void BM_ObjectiveEval(benchmark::State &state) {
    OptimizerConfig cfg;
    cfg.d = static_cast<std::size_t>(state.range(0));
    cfg.d_anc = 2;
    cfg.detection_cap = 0.01;
    RngStream rng = make_stream(2);
    std::vector<double> params(attack_param_count(cfg.d, cfg.d_anc));
    for (double &p : params) {
        p = standard_normal(rng);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(objective(params, cfg));
    }
}
BENCHMARK(BM_ObjectiveEval)->Arg(2)->Arg(3);

static void BM_DecoyRound(benchmark::State &state) {
    const AttackUnitary atk = controlled_shift_attack(3);
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_decoy_round(atk, 10000, 7, threads));
    }
}
BENCHMARK(BM_DecoyRound)->Arg(1)->Arg(4);
BENCHMARK_MAIN();
