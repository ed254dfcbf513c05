// SPDX-License-Identifier: Apache-2.0
//
// hetf: heterogeneous F composite fading channel and resource allocation library
// Copyright (C) 2026 The hetf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "hetf/specfun.hpp"

namespace {

void BM_Gauss2F1(benchmark::State& state) {
  const double z = -static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hetf::specfun::gauss_2f1(48.0, 96.0, 49.0, z));
}
BENCHMARK(BM_Gauss2F1)->Arg(1)->Arg(10)->Arg(1000);

void BM_LnGauss2F1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hetf::specfun::ln_gauss_2f1(480.0, 960.0, 481.0, -50.0));
}
BENCHMARK(BM_LnGauss2F1);

void BM_MeijerDensityPattern(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hetf::specfun::meijer_g_2212(0.8, -48.0, 0.0, 47.0, 0.0));
}
BENCHMARK(BM_MeijerDensityPattern);

}  // namespace
