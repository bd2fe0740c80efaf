// Copyright 2026 The joincert Authors.
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

#include "joincert/cscsolver.hpp"
#include "joincert/exactalg.hpp"
#include "joincert/extremality.hpp"
#include "joincert/fiberjoin.hpp"
#include "joincert/moments.hpp"

namespace {

using namespace joincert;

FiberJoinSpec surface(long g, long k1, long k2) {
  return {BaseManifold::surface(g), {{Rational(k1)}, {Rational(k2)}}, 1};
}

FiberJoinSpec product_template(long g1, long g2) {
  return {BaseManifold::surface_product(g1, g2),
          {{Rational(10 * g1), Rational(100 * g2)}, {Rational(2 * g1), Rational(g2)}},
          1};
}

void BM_MomentIntegral(benchmark::State& state) {
  const IntegralSpec spec = IntegralSpec::dim7(1, 5, Rational(2, 3), Rational(-3, 7));
  const Rational c(-299, 301);
  for (auto _ : state) benchmark::DoNotOptimize(alpha(spec, c));
}
BENCHMARK(BM_MomentIntegral);

void BM_SturmCount(benchmark::State& state) {
  Poly p = Poly{Rational(-1), Rational(0), Rational(1)};
  for (int i = 0; i < state.range(0); ++i) p = p * Poly{Rational(-1, i + 3), Rational(1)};
  for (auto _ : state) benchmark::DoNotOptimize(sturm_count(p, Rational(-2), Rational(2)));
}
BENCHMARK(BM_SturmCount)->Arg(2)->Arg(6)->Arg(12);

void BM_RayVerdictDim5(benchmark::State& state) {
  const AdmissibleData data = validate(surface(7, 2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(is_extremal_ray({data, Rational(-299, 301)}).extremal);
}
BENCHMARK(BM_RayVerdictDim5);

void BM_WholeConeDim5(benchmark::State& state) {
  const AdmissibleData data = validate(surface(state.range(0), 7, 1));
  for (auto _ : state) benchmark::DoNotOptimize(certify_whole_cone(data).index());
}
BENCHMARK(BM_WholeConeDim5)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_WholeConeProductTemplate(benchmark::State& state) {
  const AdmissibleData data = validate(product_template(state.range(0), state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify_whole_cone(data).index());
}
BENCHMARK(BM_WholeConeProductTemplate)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CscRaysDim5(benchmark::State& state) {
  const AdmissibleData data = validate(surface(3, 5, 2));
  for (auto _ : state) benchmark::DoNotOptimize(find_csc_rays(data).rays.size());
}
BENCHMARK(BM_CscRaysDim5)->Unit(benchmark::kMillisecond);

void BM_CscRaysProductTemplate(benchmark::State& state) {
  const AdmissibleData data = validate(product_template(2, 2));
  for (auto _ : state) benchmark::DoNotOptimize(find_csc_rays(data).rays.size());
}
BENCHMARK(BM_CscRaysProductTemplate)->Unit(benchmark::kMillisecond);

void BM_Equivalence(benchmark::State& state) {
  const KMatrix k{{Rational(3), Rational(5)}, {Rational(1), Rational(2)}};
  for (auto _ : state) benchmark::DoNotOptimize(check_equivalence(k).holds);
}
BENCHMARK(BM_Equivalence)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
