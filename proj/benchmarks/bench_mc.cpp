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

#include "hetf/energy.hpp"
#include "hetf/numerics.hpp"

namespace {

using namespace hetf;

void BM_McExpectation(benchmark::State& state) {
  numerics::McConfig mc;
  mc.samples = 100000;
  mc.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto est = numerics::mc_expectation(
        2, [](numerics::Stream& s, std::span<double> x) { x[0] = s.gamma(2.0), x[1] = s.gamma(3.0); },
        [](std::span<const double> x) { return x[0] / x[1]; }, mc);
    benchmark::DoNotOptimize(est.mean);
  }
  state.SetItemsProcessed(state.iterations() * mc.samples);
}
BENCHMARK(BM_McExpectation)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_EnergyEfficiencyIrs(benchmark::State& state) {
  energy::EeScenario sc;
  sc.channel = channel::ChannelParams::homogeneous(3, {});
  numerics::McConfig mc;
  mc.samples = 20000;
  mc.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(energy::energy_efficiency(sc, energy::Link::kIrs, mc).value);
}
BENCHMARK(BM_EnergyEfficiencyIrs)->Unit(benchmark::kMillisecond);

}  // namespace
