/*
   Copyright 2026 The ovpbench Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "ovp/distributions.hpp"
#include "ovp/evaluation.hpp"

namespace {

using namespace ovp;

const Prices kBase(2.0, 1.0);

LocalizationSample make_loc(std::size_t m) {
    RngStream rng(99, 1);
    return sample_localization(NormalLocalization{20.0, 1.0}, m, rng);
}

Dataset make_data(std::size_t n) {
    RngStream rng(99, 2);
    Dataset data(n);
    for (double& d : data) {
        d = sample_exponential(20.0, rng);
    }
    return data;
}

void BM_SolveOvp(benchmark::State& state) {
    const auto loc = make_loc(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_ovp(20.0, 10, loc, kBase));
    }
}
BENCHMARK(BM_SolveOvp)->Arg(20)->Arg(50)->Arg(200);

void BM_SolveDroWasserstein(benchmark::State& state) {
    const auto data = make_data(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_dro_wasserstein(data, 0.5, kBase));
    }
}
BENCHMARK(BM_SolveDroWasserstein)->Arg(10)->Arg(50);

void BM_SolveDroKl(benchmark::State& state) {
    const auto data = make_data(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_dro_kl(data, 0.1, kBase));
    }
}
BENCHMARK(BM_SolveDroKl)->Arg(10)->Arg(50);

void BM_EvaluatePolicyOvp(benchmark::State& state) {
    ExperimentConfig cfg;
    cfg.n_bar = static_cast<std::size_t>(state.range(0));
    const auto loc = make_loc(cfg.m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            evaluate_policy(PolicySpec{PolicyKind::kOvp}, 20.0, 0, cfg, loc));
    }
}
BENCHMARK(BM_EvaluatePolicyOvp)->Arg(50)->Arg(200);

} // namespace

BENCHMARK_MAIN();
