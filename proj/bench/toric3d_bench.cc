// Copyright 2026 The toric3d Authors
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

// Serial reference against the OpenMP sweep kernel, and the two cut-set
// strategies inside a full decode. Thread counts above the core count only
// measure scheduling overhead.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "toric3d/decoder_periodic.h"
#include "toric3d/sim.h"
#include "toric3d/stabilizer.h"

namespace toric3d {
namespace {

constexpr double kNearThreshold = 0.12;
constexpr std::uint64_t kTrialsPerPoint = 200;

SweepConfig point_config(int threads) {
  SweepConfig config;
  config.seed = 7;
  config.stop = {kTrialsPerPoint, kTrialsPerPoint, kTrialsPerPoint};
  config.threads = threads;
  return config;
}

const TrialContext& torus(int L, CutStrategy cut = CutStrategy::kIncremental) {
  static std::vector<std::pair<std::pair<int, CutStrategy>, TrialContext>> cache;
  for (const auto& [key, ctx] : cache) {
    if (key == std::make_pair(L, cut)) return ctx;
  }
  DecoderOptions options;
  options.cut_strategy = cut;
  cache.emplace_back(std::make_pair(L, cut),
                     TrialContext::for_family({LatticeFamily::kCubicTorus, {L, L, L}}, options));
  return cache.back().second;
}

void BM_PointSerial(benchmark::State& state) {
  const auto& ctx = torus(static_cast<int>(state.range(0)));
  const auto config = point_config(1);
  for (auto _ : state) benchmark::DoNotOptimize(run_point_serial(ctx, kNearThreshold, config));
  state.SetItemsProcessed(state.iterations() * kTrialsPerPoint);
}
BENCHMARK(BM_PointSerial)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_PointParallel(benchmark::State& state) {
  const auto& ctx = torus(static_cast<int>(state.range(0)));
  const auto config = point_config(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(run_point(ctx, kNearThreshold, config));
  state.SetItemsProcessed(state.iterations() * kTrialsPerPoint);
}
BENCHMARK(BM_PointParallel)
    ->ArgsProduct({{4, 6, 8}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_Decode(benchmark::State& state, CutStrategy cut) {
  const auto& ctx = torus(static_cast<int>(state.range(0)), cut);
  const auto& c = ctx.complex();
  std::mt19937_64 rng(3);
  std::vector<EdgeSet> syndromes;
  for (int i = 0; i < 64; ++i) syndromes.push_back(syndrome(c, sample_error(c.face_count(), kNearThreshold, rng)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.decode(syndromes[i++ % syndromes.size()]));
  }
}
BENCHMARK_CAPTURE(BM_Decode, incremental, CutStrategy::kIncremental)
    ->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Decode, fresh, CutStrategy::kFreshTraversal)
    ->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace toric3d

BENCHMARK_MAIN();
