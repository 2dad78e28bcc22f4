// Copyright 2026 The discord-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels. Set DISCORD_KIT_THREADS to cap threads.

#include <benchmark/benchmark.h>

#include "discord/correlations.hpp"
#include "discord/dynamics.hpp"
#include "discord/measurement.hpp"
#include "discord/validation.hpp"

namespace {

using discord::Exec;

const discord::XState kState{0.4875, 0.1625, 0.0875, 0.2625, 0.3354, 0.1118};

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

void BM_ChiCurves(benchmark::State& st) {
  const discord::ChiCurveOptions opts{static_cast<int>(st.range(1)), true, exec_of(st)};
  for (auto _ : st) benchmark::DoNotOptimize(discord::chi_curves(kState, opts));
  label(st);
}
BENCHMARK(BM_ChiCurves)->ArgsProduct({{0, 1}, {512, 4096}})->Unit(benchmark::kMillisecond);

void BM_Trajectory(benchmark::State& st) {
  const auto spec = discord::DampingSpec::uniform(0.01, 400.0, static_cast<int>(st.range(1)));
  for (auto _ : st) {
    benchmark::DoNotOptimize(discord::correlation_trajectory(kState, spec, {}, {}, exec_of(st)));
  }
  label(st);
}
BENCHMARK(BM_Trajectory)->ArgsProduct({{0, 1}, {200, 1000}})->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& st) {
  discord::BruteForceOptions opts;
  opts.restarts = static_cast<int>(st.range(1));
  opts.exec = exec_of(st);
  const auto r = discord::to_pauli_rep(discord::to_density(kState));
  for (auto _ : st) benchmark::DoNotOptimize(discord::brute_force_optimize(r, opts));
  label(st);
}
BENCHMARK(BM_BruteForce)->ArgsProduct({{0, 1}, {200}})->Unit(benchmark::kMillisecond);

void BM_Validation(benchmark::State& st) {
  discord::ValidationOptions opts;
  opts.states = static_cast<int>(st.range(1));
  opts.exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(discord::run_validation(opts));
  label(st);
}
BENCHMARK(BM_Validation)->ArgsProduct({{0, 1}, {1000}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
