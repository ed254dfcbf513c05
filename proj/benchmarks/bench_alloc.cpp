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

#include "hetf/joint_alloc.hpp"
#include "hetf/power_alloc.hpp"

namespace {

using namespace hetf;

void BM_ThresholdClosedForm(benchmark::State& state) {
  const auto cp = channel::ChannelParams::homogeneous(3, {});
  const power_alloc::PowerBudget pb;
  for (auto _ : state) benchmark::DoNotOptimize(power_alloc::threshold_closed_form(cp, pb));
}
BENCHMARK(BM_ThresholdClosedForm);

void BM_ThresholdExact(benchmark::State& state) {
  const auto cp = channel::ChannelParams::homogeneous(3, {});
  const power_alloc::PowerBudget pb;
  for (auto _ : state) benchmark::DoNotOptimize(power_alloc::threshold_exact(cp, pb));
}
BENCHMARK(BM_ThresholdExact)->Unit(benchmark::kMillisecond);

void BM_CapacityP1(benchmark::State& state) {
  const auto cp = channel::ChannelParams::homogeneous(3, {});
  const power_alloc::PowerBudget pb;
  const auto pol = power_alloc::make_policy(cp, pb, power_alloc::ThresholdMethod::kClosedForm);
  for (auto _ : state) benchmark::DoNotOptimize(power_alloc::ergodic_capacity_p1(cp, pb, pol));
}
BENCHMARK(BM_CapacityP1)->Unit(benchmark::kMicrosecond);

void BM_JointSolve(benchmark::State& state) {
  joint_alloc::JointProblem pr;
  pr.gains = state.range(0) == 0 ? std::vector<double>{5, 5, 5} : std::vector<double>{4, 5, 6};
  joint_alloc::SolverConfig cfg;
  cfg.record_trace = false;
  for (auto _ : state) benchmark::DoNotOptimize(joint_alloc::solve(pr, cfg).state.iteration);
}
BENCHMARK(BM_JointSolve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_JointStep(benchmark::State& state) {
  joint_alloc::JointProblem pr;
  pr.gains = {4, 5, 6};
  const joint_alloc::SolverConfig cfg;
  auto st = joint_alloc::initial_state(pr, cfg);
  for (auto _ : state) {
    st = joint_alloc::step(pr, st, cfg);
    benchmark::DoNotOptimize(st.omega);
  }
}
BENCHMARK(BM_JointStep);

}  // namespace
