// Copyright 2026 The hw Authors
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

#include "hw/characters.hpp"
#include "hw/diameter.hpp"
#include "hw/group.hpp"
#include "hw/measure.hpp"
#include "hw/spectra.hpp"
#include "hw/su2.hpp"

namespace {

using namespace hw;

Measure walk(const GroupTable& t) {
  return Measure::uniform_on(t, GenSet::from_matrices(t, standard_generators(t, "std"), false).members);
}

void BM_GapDense(benchmark::State& state) {
  const auto t = GroupTable::special_linear(2, static_cast<std::uint32_t>(state.range(0)));
  const auto mu = walk(t);
  GapOptions o;
  o.method = GapOptions::Method::kDense;
  for (auto _ : state) benchmark::DoNotOptimize(spectral_gap(mu, o).gap);
  state.counters["order"] = static_cast<double>(t.order());
}
BENCHMARK(BM_GapDense)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_GapIterative(benchmark::State& state) {
  const auto t = GroupTable::special_linear(2, static_cast<std::uint32_t>(state.range(0)));
  const auto mu = walk(t);
  GapOptions o;
  o.method = GapOptions::Method::kIterative;
  for (auto _ : state) benchmark::DoNotOptimize(spectral_gap(mu, o).gap);
  state.counters["order"] = static_cast<double>(t.order());
}
BENCHMARK(BM_GapIterative)->Arg(11)->Arg(17)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_Convolve(benchmark::State& state) {
  const auto t = GroupTable::special_linear(2, static_cast<std::uint32_t>(state.range(0)));
  const auto mu = random_measure(t, 1);
  const auto nu = walk(t);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(mu, nu));
}
BENCHMARK(BM_Convolve)->Arg(7)->Arg(13)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_CharacterTable(benchmark::State& state) {
  const auto t = GroupTable::special_linear(2, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(t).num_irreps());
}
BENCHMARK(BM_CharacterTable)->Arg(5)->Arg(7)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_Diameter(benchmark::State& state) {
  const auto t = GroupTable::special_linear(2, static_cast<std::uint32_t>(state.range(0)));
  const auto s = GenSet::from_matrices(t, standard_generators(t, "std"), false);
  for (auto _ : state) benchmark::DoNotOptimize(diameter(t, s).diameter);
}
BENCHMARK(BM_Diameter)->Arg(11)->Arg(23)->Arg(37)->Unit(benchmark::kMillisecond);

void BM_IrrepMatrix(benchmark::State& state) {
  const auto g = SU2Element::from_quaternion(0.3, 0.5, -0.1, 0.806225774829855);
  for (auto _ : state) benchmark::DoNotOptimize(irrep_matrix(static_cast<int>(state.range(0)), g));
}
BENCHMARK(BM_IrrepMatrix)->Arg(10)->Arg(50)->Arg(200);

void BM_DiamEps(benchmark::State& state) {
  const double eps = static_cast<double>(state.range(0)) / 100.0;
  const auto gates = five_adic_gates();
  for (auto _ : state) benchmark::DoNotOptimize(diam_eps(gates, eps).nominal);
}
BENCHMARK(BM_DiamEps)->Arg(80)->Arg(40)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
