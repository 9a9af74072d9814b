/* Copyright (C) 2026 The pembed Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

// Serial reference vs OpenMP kernels. The second argument selects the path:
// 0 = serial, 1 = parallel.

#include <pembed/cohomology.hpp>
#include <pembed/kernels.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace pembed;

Exec exec_of(const benchmark::State &state) {
  return state.range(1) ? Exec::parallel : Exec::serial;
}

void BM_PreimageSearch(benchmark::State &state) {
  auto F = FiniteField::make(3, 1);
  auto c = [&](std::int64_t v, std::int64_t e) {
    return LaurentPoly::monomial(F, F->from_int(v), e);
  };
  const AdditivePoly f(F, {c(-1, 0), c(1, 0)});
  // Not in the image, so every candidate is visited.
  const LaurentPoly a = c(1, -2);
  const auto bound = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::find_preimage_index(f, a, bound, exec_of(state)));
}
BENCHMARK(BM_PreimageSearch)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_HomEnumeration(benchmark::State &state) {
  const auto dom = state.range(0) == 0 ? symmetric(3) : elementary_abelian(2, 3);
  const auto cod = symmetric(4);
  const auto gens = dom->generating_set();
  std::vector<std::vector<int>> cands(gens.size());
  for (auto &cand : cands)
    for (int x = 0; x < cod->order(); ++x)
      cand.push_back(x);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kernels::enumerate_hom_maps(*dom, *cod, gens, cands, exec_of(state)));
}
BENCHMARK(BM_HomEnumeration)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_CocycleOracle(benchmark::State &state) {
  const auto action = PGroupAction::trivial(
      state.range(0) == 0 ? cyclic(8) : elementary_abelian(2, 3), 2, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::enumerate_cocycles(action, exec_of(state)));
}
BENCHMARK(BM_CocycleOracle)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
