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

#include "hetf/energy.hpp"

#include <algorithm>
#include <cmath>

#include "hetf/errors.hpp"

namespace hetf::energy {

void CircuitPowerModel::validate() const {
  for (double p : {p_dac, p_mix, p_filt, p_filr, p_syn, p_lna, p_ifa, p_adc})
    if (!(p >= 0.0)) throw DomainError("CircuitPowerModel: block powers must be >= 0");
  if (m_t < 0 || m_r < 0) throw DomainError("CircuitPowerModel: antenna counts must be >= 0");
  if (aggregate && !(*aggregate >= 0.0)) throw DomainError("CircuitPowerModel: aggregate must be >= 0");
}

double CircuitPowerModel::component_sum() const {
  return m_t * (p_dac + p_mix + p_filt) + 2.0 * p_syn + m_r * (p_lna + p_mix + p_ifa + p_filr + p_adc);
}

double CircuitPowerModel::total() const { return aggregate ? *aggregate : component_sum(); }

void NodePowerModel::validate() const {
  if (!(p_fpga_relay >= 0.0 && p_pa >= 0.0 && p_fpga_irs >= 0.0 && p_pin >= 0.0))
    throw DomainError("NodePowerModel: powers must be >= 0");
  if (n_pins < 0) throw DomainError("NodePowerModel: PIN count must be >= 0");
  if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("NodePowerModel: eta must lie in (0, 1]");
}

void EeScenario::validate() const {
  channel.validate();
  budgets.validate();
  node.validate();
  circuit.validate();
  if (!(source_power >= 0.0)) throw DomainError("EeScenario: source power must be >= 0");
  if (!(relay_mean_gain > 0.0)) throw DomainError("EeScenario: relay mean gain must be > 0");
  if (node.n_pins != channel.N()) throw DomainError("EeScenario: PIN count must equal the reflector count N");
}

double relay_power(const NodePowerModel& node, const CircuitPowerModel& circuit) {
  return (circuit.total() + node.p_fpga_relay + node.p_pa) / node.eta;
}

double irs_power(const NodePowerModel& node) { return (node.p_fpga_irs + node.n_pins * node.p_pin) / node.eta; }

HopSnrs relay_hop_snrs(const channel::SubchannelParams& sc, double p_s, double p_pa, double noise_power,
                       double g) {
  const double a = sc.pathloss_exp;
  return {p_s * std::pow(sc.dist_sr, -a) / noise_power, p_pa * std::pow(sc.dist_rd, -a) * g / noise_power};
}

double relay_rate(const HopSnrs& s, double bandwidth, int K) {
  const double eff = 4.0 * s.first * s.second / (1.0 + 2.0 * s.first + 2.0 * s.second);
  return bandwidth / (2.0 * K) * std::log2(1.0 + eff);
}

double irs_power_at(const EeScenario& sc, double h) {
  const auto& cp = sc.channel;
  const double K = cp.K();
  const double M = cp.prefactor();
  const double d2 = sc.budgets.noise_power();
  if (h <= 0.0) return 0.0;
  const double level = (sc.budgets.avg_power + cp.epsilon() * cp.lambda() * d2 * M / (K * K)) / M;
  const double p = std::max(0.0, level - d2 / (K * h));
  return std::min(p, sc.budgets.peak_power);
}

numerics::McEstimate relay_capacity(const EeScenario& sc, const numerics::McConfig& mc) {
  sc.validate();
  const auto& subs = sc.channel.subchannels;
  const int K = sc.channel.K();
  const double d2 = sc.budgets.noise_power();
  return numerics::mc_expectation(
      K,
      [&](numerics::Stream& s, std::span<double> x) {
        for (int k = 0; k < K; ++k) {
          const channel::FadingParams f{subs[k].fading.m, subs[k].fading.m_s, sc.relay_mean_gain};
          x[k] = channel::sample_gain(f, s);
        }
      },
      [&](std::span<const double> x) {
        double c = 0.0;
        for (int k = 0; k < K; ++k)
          c += relay_rate(relay_hop_snrs(subs[k], sc.source_power, sc.node.p_pa, d2, x[k]), sc.budgets.bandwidth, K);
        return c;
      },
      mc);
}

numerics::McEstimate irs_capacity(const EeScenario& sc, const numerics::McConfig& mc) {
  sc.validate();
  const int K = sc.channel.K();
  const double d2 = sc.budgets.noise_power();
  return numerics::mc_expectation(
      1, [&](numerics::Stream& s, std::span<double> x) { x[0] = channel::sample_composite(sc.channel, s); },
      [&](std::span<const double> x) {
        const double h = x[0];
        const double snr = irs_power_at(sc, h) * K * h / d2;
        // Every subchannel sees the same composite gain, so the K terms coincide.
        return K * (sc.budgets.bandwidth / K) * std::log2(1.0 + snr);
      },
      mc);
}

EeResult energy_efficiency(const EeScenario& sc, Link which, const numerics::McConfig& mc) {
  EeResult r;
  const double node = which == Link::kRelay ? relay_power(sc.node, sc.circuit) : irs_power(sc.node);
  r.capacity = which == Link::kRelay ? relay_capacity(sc, mc) : irs_capacity(sc, mc);
  r.denominator = sc.channel.K() * (node + sc.source_power / sc.node.eta);
  r.value = r.capacity.mean / r.denominator;
  r.std_error = r.capacity.std_error / r.denominator;
  return r;
}

}  // namespace hetf::energy
