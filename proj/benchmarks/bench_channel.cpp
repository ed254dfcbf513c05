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

#include "hetf/channel.hpp"

namespace {

hetf::channel::ChannelParams reference(int K) {
  hetf::channel::SubchannelParams sc;
  return hetf::channel::ChannelParams::homogeneous(K, sc);
}

void BM_PdfComposite(benchmark::State& state) {
  const auto cp = reference(static_cast<int>(state.range(0)));
  double h = 0.5 * cp.mode();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hetf::channel::pdf_composite(h, cp));
    h = h < 4 * cp.mode() ? h * 1.001 : 0.5 * cp.mode();
  }
}
BENCHMARK(BM_PdfComposite)->Arg(1)->Arg(3)->Arg(8);

void BM_PdfCompositeMeijer(benchmark::State& state) {
  const auto cp = reference(3);
  const double h = cp.mode();
  for (auto _ : state) benchmark::DoNotOptimize(hetf::channel::pdf_composite_meijer(h, cp));
}
BENCHMARK(BM_PdfCompositeMeijer);

void BM_CompositeMass(benchmark::State& state) {
  const auto cp = reference(3);
  for (auto _ : state) benchmark::DoNotOptimize(hetf::channel::composite_mass(cp).value);
}
BENCHMARK(BM_CompositeMass)->Unit(benchmark::kMicrosecond);

void BM_SampleComposite(benchmark::State& state) {
  const auto cp = reference(3);
  hetf::numerics::Stream s(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(hetf::channel::sample_composite(cp, s));
}
BENCHMARK(BM_SampleComposite);

}  // namespace
