/* Copyright 2026 The pump Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "pump/analysis.hpp"
#include "pump/bathtub.hpp"
#include "pump/matcore.hpp"
#include "pump/models.hpp"
#include "pump/optimal.hpp"
#include "pump/shift.hpp"
#include "pump/transport.hpp"

namespace {

pump::ModelConfig random_path(std::size_t samples, int n) {
  pump::ModelConfig c;
  c.model = "random-smooth-path";
  c.params = {{"seed", 7.0}, {"n", static_cast<double>(n)}};
  c.cycle = {1.0, samples};
  return c;
}

void BM_Fft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<pump::Complex> data(n, pump::Complex(0.5, -0.25));
  for (auto _ : state) {
    pump::fft(data);
    benchmark::DoNotOptimize(data.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fft)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oNLogN);

void BM_EnergyShiftCycle(benchmark::State& state) {
  const auto c = random_path(static_cast<std::size_t>(state.range(0)), 3);
  const pump::PumpModel m = pump::build_model(c);
  const pump::CycleGrid grid = pump::make_grid(c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pump::energy_shift_cycle(m, 1.0, grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EnergyShiftCycle)->RangeMultiplier(2)->Range(64, 1024);

void BM_EnergyShiftChannels(benchmark::State& state) {
  const auto c = random_path(256, static_cast<int>(state.range(0)));
  const pump::PumpModel m = pump::build_model(c);
  const pump::CycleGrid grid = pump::make_grid(c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pump::energy_shift_cycle(m, 1.0, grid));
  }
}
BENCHMARK(BM_EnergyShiftChannels)->DenseRange(2, 8, 2);

void BM_CycleCharge(benchmark::State& state) {
  pump::ModelConfig c;
  c.model = "perturbed-flux-loop";
  c.params = {{"k_ell", 1.0}, {"delta", 0.1}};
  c.cycle = {1.0, static_cast<std::size_t>(state.range(0))};
  const pump::PumpModel m = pump::build_model(c);
  const pump::CycleGrid grid = pump::make_grid(c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pump::cycle_charge(m, 1.0, grid));
  }
}
BENCHMARK(BM_CycleCharge)->Arg(256)->Arg(1024);

void BM_OptimalityVerdict(benchmark::State& state) {
  pump::ModelConfig c;
  c.model = "diagonal-times-constant";
  c.params = {{"n", 4.0}, {"mix", 0.5}, {"cos_2_1", 0.3}};
  c.cycle = {1.0, 256};
  const pump::PumpModel m = pump::build_model(c);
  const pump::CycleGrid grid = pump::make_grid(c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pump::optimality_verdict(m, 1.0, grid));
  }
}
BENCHMARK(BM_OptimalityVerdict);

void BM_Analyze(benchmark::State& state) {
  pump::ModelConfig c;
  c.model = "flux-loop";
  c.params = {{"k_ell", 1.0}};
  c.cycle = {1.0, static_cast<std::size_t>(state.range(0))};
  c.beta = 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pump::analyze(c));
  }
}
BENCHMARK(BM_Analyze)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_GreedyMinimize(benchmark::State& state) {
  const auto g = pump::bathtub::make_dispersion_grid(pump::bathtub::DispersionKind::Quadratic, 2.0,
                                                     static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pump::bathtub::greedy_minimize(g, 1.0 / (2.0 * pump::kPi)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyMinimize)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oNLogN);

void BM_VerifyBound(benchmark::State& state) {
  const auto g =
      pump::bathtub::make_dispersion_grid(pump::bathtub::DispersionKind::Linear, 2.0, 1024);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pump::bathtub::verify_bound(g, 100, 0));
  }
}
BENCHMARK(BM_VerifyBound)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
