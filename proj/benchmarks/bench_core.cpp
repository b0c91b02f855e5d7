// Copyright 2026 The mhqmo Authors
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

#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "mhqmo/charfn.hpp"
#include "mhqmo/compat.hpp"
#include "mhqmo/eigen.hpp"
#include "mhqmo/scenarios.hpp"

namespace {

mhqmo::CMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  mhqmo::CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = {g(rng), g(rng)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

void BM_EigHermitian(benchmark::State& state) {
  const auto m = random_hermitian(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(mhqmo::eig_hermitian(m));
}
BENCHMARK(BM_EigHermitian)->Arg(2)->Arg(3)->Arg(4)->Arg(8)->Arg(16);

void BM_Threshold(benchmark::State& state) {
  const auto kind = static_cast<mhqmo::ScenarioKind>(state.range(0));
  auto build = std::make_shared<mhqmo::ScenarioBuild>(mhqmo::build_scenario(kind));
  const mhqmo::FamilyBuilder builder = [build](double eta) {
    return mhqmo::scenario_family(*build, eta);
  };
  for (auto _ : state) benchmark::DoNotOptimize(mhqmo::threshold(builder));
  state.SetLabel(std::string(mhqmo::scenario_name(kind)));
}
BENCHMARK(BM_Threshold)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ScenarioFamily(benchmark::State& state) {
  const auto build = mhqmo::build_scenario(static_cast<mhqmo::ScenarioKind>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mhqmo::scenario_family(build, 0.6));
}
BENCHMARK(BM_ScenarioFamily)->DenseRange(0, 2);

void BM_QmoFromCharfn(benchmark::State& state) {
  const auto build = mhqmo::build_scenario(static_cast<mhqmo::ScenarioKind>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        mhqmo::qmo_from_charfn(build.scenario.observables, build.scenario.grouping));
}
BENCHMARK(BM_QmoFromCharfn)->DenseRange(0, 2);

}  // namespace

BENCHMARK_MAIN();
