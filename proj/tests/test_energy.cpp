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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hetf/energy.hpp"
#include "hetf/errors.hpp"
#include "oracle_values.hpp"

using namespace hetf;
using namespace hetf::energy;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

EeScenario scenario(int K, int N, double m = 2, double ms = 2) {
  channel::SubchannelParams sc;
  sc.fading = {m, ms, 5.0};
  sc.n_reflectors = N;
  EeScenario s;
  s.channel = channel::ChannelParams::homogeneous(K, sc);
  s.node.n_pins = N;
  return s;
}

numerics::McConfig mc(long n, std::uint64_t seed) {
  numerics::McConfig c;
  c.samples = n;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("node power arithmetic", "[energy]") {
  CHECK_THAT(relay_power(NodePowerModel{}, CircuitPowerModel{}), WithinRel(11.25, 1e-15));
  NodePowerModel node;
  node.eta = 1.0;
  node.p_fpga_relay = 0.0;
  node.p_pa = 1.0;
  CircuitPowerModel zero;
  zero.aggregate = 0.0;
  CHECK(relay_power(node, zero) == 1.0);
  node = {};
  node.n_pins = 0;
  CHECK_THAT(irs_power(node), WithinRel(0.5 / 0.8, 1e-15));
  node.n_pins = 8;
  CHECK_THAT(irs_power(node), WithinRel((0.5 + 8 * 0.0085) / 0.8, 1e-15));
}

TEST_CASE("circuit component sum", "[energy]") {
  CircuitPowerModel c;
  const double want = (0.0 + 0.0303 + 2.5) + 2 * 0.05 + (0.02 + 0.0303 + 0.003 + 2.5 + 0.0);
  CHECK_THAT(c.component_sum(), WithinRel(want, 1e-15));
  CHECK(c.total() == 3.0);
  c.aggregate.reset();
  CHECK(c.total() == c.component_sum());
  c.m_t = 2;
  CHECK_THAT(c.total(), WithinRel(want + 0.0303 + 2.5, 1e-15));
  c.p_lna = -1.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("node validation", "[energy]") {
  NodePowerModel n;
  n.eta = 1.2;
  CHECK_THROWS_AS(n.validate(), DomainError);
  auto s = scenario(3, 8);
  s.node.n_pins = 4;
  CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("hop SNRs", "[energy]") {
  channel::SubchannelParams sc;
  sc.dist_sr = sc.dist_rd = 1.0;
  const auto unit = relay_hop_snrs(sc, 1.0, 1.0, 1.0, 1.0);
  CHECK(unit.first == 1.0);
  CHECK(unit.second == 1.0);
  CHECK(relay_hop_snrs(sc, 1.0, 1.0, 1.0, 0.0).second == 0.0);
  sc = {};
  const auto s = relay_hop_snrs(sc, 0.5, 5.0, 2e-4, 3.0);
  CHECK_THAT(s.first, WithinRel(0.5 / std::sqrt(20.0) / 2e-4, 1e-15));
  CHECK_THAT(s.second, WithinRel(5.0 * 3.0 / std::sqrt(15.0) / 2e-4, 1e-15));
}

TEST_CASE("relay rate limits and bound", "[energy]") {
  const double B = 200e6;
  CHECK(relay_rate({0.0, 10.0}, B, 3) == 0.0);
  CHECK_THAT(relay_rate({1e15, 7.0}, B, 2), WithinRel(B / 4 * std::log2(1 + 14.0), 1e-9));
  std::mt19937_64 rng(3);
  std::lognormal_distribution<double> d(0.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double g1 = d(rng), g2 = d(rng);
    CHECK(relay_rate({g1, g2}, B, 3) <= B / 6 * std::log2(1 + 2 * g2) * (1 + 1e-14));
  }
}

TEST_CASE("relay capacity: single hop pair matches high-precision value", "[energy][oracle][mc]") {
  auto s = scenario(1, 8, 2, 2);
  s.source_power = 0.1;
  s.relay_mean_gain = 1.0;
  const auto est = relay_capacity(s, mc(400000, 31));
  CHECK_THAT(est.mean, WithinAbs(oracle::kRelayCapacityK1, 3.0 * est.std_error));
}

TEST_CASE("relay capacity with no source power is zero", "[energy][mc]") {
  auto s = scenario(3, 8);
  s.source_power = 0.0;
  CHECK(relay_capacity(s, mc(1000, 1)).mean == 0.0);
  const auto ee = energy_efficiency(s, Link::kRelay, mc(1000, 1));
  CHECK(ee.value == 0.0);
  CHECK_THAT(ee.denominator, WithinRel(3 * 11.25, 1e-15));
}

TEST_CASE("IRS power per gain", "[energy]") {
  auto s = scenario(3, 8);
  CHECK(irs_power_at(s, 0.0) == 0.0);
  CHECK(irs_power_at(s, 1e-12) == 0.0);
  const double big = irs_power_at(s, 1e12);
  CHECK(big > 0.0);
  CHECK(big <= s.budgets.peak_power);
  double prev = 0.0;
  for (double h = 1e-3; h < 1e4; h *= 1.7) {
    const double p = irs_power_at(s, h);
    CHECK(p >= prev);
    prev = p;
  }
}

TEST_CASE("IRS capacity for one path and one reflector equals the P1 capacity over M", "[energy][mc]") {
  auto s = scenario(1, 1, 2, 2);
  const auto pol = power_alloc::make_policy(s.channel, s.budgets, power_alloc::ThresholdMethod::kClosedForm);
  const double p1 = power_alloc::ergodic_capacity_p1(s.channel, s.budgets, pol);
  const auto est = irs_capacity(s, mc(200000, 5));
  CHECK_THAT(est.mean, WithinAbs(p1 / s.channel.prefactor(), 3.0 * est.std_error));
}

TEST_CASE("IRS capacity grows with the reflector count", "[energy][mc]") {
  double prev = 0.0;
  for (int N : {4, 8, 16}) {
    const auto est = irs_capacity(scenario(3, N), mc(50000, 9));
    CHECK(est.mean > prev);
    prev = est.mean;
  }
}

TEST_CASE("energy efficiency arithmetic", "[energy][mc]") {
  const auto s = scenario(3, 8);
  const auto c = mc(20000, 2);
  const auto r = energy_efficiency(s, Link::kRelay, c);
  CHECK_THAT(r.denominator, WithinRel(3 * (11.25 + 0.5 / 0.8), 1e-15));
  CHECK_THAT(r.value, WithinRel(r.capacity.mean / r.denominator, 1e-15));
  CHECK_THAT(r.std_error, WithinRel(r.capacity.std_error / r.denominator, 1e-15));
  const auto i = energy_efficiency(s, Link::kIrs, c);
  CHECK_THAT(i.denominator, WithinRel(3 * ((0.5 + 8 * 0.0085) / 0.8 + 0.5 / 0.8), 1e-15));
  CHECK(i.value > r.value);
}
