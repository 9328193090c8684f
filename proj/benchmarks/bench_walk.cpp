// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <memory>

#include "qwalk/observables.hpp"
#include "qwalk/ops.hpp"
#include "qwalk/spectral.hpp"

namespace {

using namespace qwalk;

std::shared_ptr<const Graph> graph_for(int which) {
  switch (which) {
    case 0: return std::make_shared<const Graph>(circular_ladder_graph(4));
    case 1: return std::make_shared<const Graph>(kite_graph());
    default: return std::make_shared<const Graph>(random_regular_graph(3, 12, 1));
  }
}

PureState start(const std::shared_ptr<const Graph>& g) {
  const BasisKet ket{0, 0, 0};
  return initial_state(g, std::span(&ket, 1));
}

void BM_Step(benchmark::State& state) {
  auto g = graph_for(static_cast<int>(state.range(0)));
  const Walk walk(g, CoinFamily::kGrover, CzMode::kEdgeList);
  PureState psi = start(g);
  for (auto _ : state) {
    walk.step_in_place(psi);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(psi.size()));
}
BENCHMARK(BM_Step)->Arg(0)->Arg(1)->Arg(2);

void BM_StepPure(benchmark::State& state) {
  auto g = graph_for(0);
  PureState psi = start(g);
  for (auto _ : state) {
    psi = step(std::move(psi), CoinFamily::kFourier, CzMode::kIncident);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
}
BENCHMARK(BM_StepPure);

void BM_BuildUnitary(benchmark::State& state) {
  auto g = graph_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto op = build_unitary(g, CoinFamily::kFourier, CzMode::kEdgeList);
    benchmark::DoNotOptimize(op.matrix().nonZeros());
  }
}
BENCHMARK(BM_BuildUnitary)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ReducedDensity(benchmark::State& state) {
  auto g = graph_for(0);
  PureState psi = start(g);
  const Walk walk(g, CoinFamily::kGrover, CzMode::kEdgeList);
  for (int t = 0; t < 50; ++t) walk.step_in_place(psi);
  const auto part = static_cast<Part>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_density(psi, part).data());
}
BENCHMARK(BM_ReducedDensity)->Arg(0)->Arg(1)->Arg(2);

void BM_SpinEntropy(benchmark::State& state) {
  auto g = graph_for(0);
  PureState psi = start(g);
  const Walk walk(g, CoinFamily::kGrover, CzMode::kEdgeList);
  for (int t = 0; t < 50; ++t) walk.step_in_place(psi);
  for (auto _ : state) benchmark::DoNotOptimize(entanglement_entropy(psi, Part::kSpin));
}
BENCHMARK(BM_SpinEntropy)->Unit(benchmark::kMillisecond);

void BM_DiagonalizeBull(benchmark::State& state) {
  const auto op = build_unitary(std::make_shared<const Graph>(bull_graph()), CoinFamily::kGrover, CzMode::kEdgeList);
  DiagonalizeOptions opt;
  opt.eigenvectors = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(op, opt).quasienergies.data());
}
BENCHMARK(BM_DiagonalizeBull)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
