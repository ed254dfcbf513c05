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

#pragma once

// Power consumption and energy efficiency of relay-assisted versus IRS-assisted links.

#include <optional>

#include "hetf/channel.hpp"
#include "hetf/numerics.hpp"
#include "hetf/power_alloc.hpp"

namespace hetf::energy {

// Transceiver circuit blocks. When `aggregate` is set it replaces the component sum.
struct CircuitPowerModel {
  double p_dac = 0.0;
  double p_mix = 0.0303;
  double p_filt = 2.5;
  double p_filr = 2.5;
  double p_syn = 0.05;
  double p_lna = 0.02;
  double p_ifa = 0.003;
  double p_adc = 0.0;
  int m_t = 1;
  int m_r = 1;
  std::optional<double> aggregate = 3.0;

  void validate() const;
  // M_t (P_DAC + P_MIX + P_FILT) + 2 P_SYN + M_r (P_LNA + P_MIX + P_IFA + P_FILR + P_ADC)
  double component_sum() const;
  double total() const;
};

struct NodePowerModel {
  double p_fpga_relay = 1.0;
  double p_pa = 5.0;
  double p_fpga_irs = 0.5;
  double p_pin = 0.0085;
  int n_pins = 8;
  double eta = 0.8;

  void validate() const;
};

struct EeScenario {
  channel::ChannelParams channel;
  double source_power = 0.5;     // P_S, W
  power_alloc::PowerBudget budgets;
  NodePowerModel node;
  CircuitPowerModel circuit;
  double relay_mean_gain = 1.0;  // gbar of the relay-hop F law

  void validate() const;
};

double relay_power(const NodePowerModel& node, const CircuitPowerModel& circuit);
double irs_power(const NodePowerModel& node);

struct HopSnrs {
  double first = 0.0;   // source to relay
  double second = 0.0;  // relay to user
};

HopSnrs relay_hop_snrs(const channel::SubchannelParams& sc, double p_s, double p_pa, double noise_power,
                       double g);

// (B/2K) log2(1 + 4 g1 g2 / (1 + 2 g1 + 2 g2)) for one subchannel.
double relay_rate(const HopSnrs& s, double bandwidth, int K);

// Transmit power assigned to composite gain h by the IRS link:
//   min{[ (Pbar + eps Lam N0 B M / K^2) / M - N0 B / (K h) ]^+, Ph}.
double irs_power_at(const EeScenario& sc, double h);

// K-fold averages over independent per-subchannel draws.
numerics::McEstimate relay_capacity(const EeScenario& sc, const numerics::McConfig& mc);
numerics::McEstimate irs_capacity(const EeScenario& sc, const numerics::McConfig& mc);

enum class Link { kRelay, kIrs };

struct EeResult {
  numerics::McEstimate capacity;  // bit/s
  double denominator = 0.0;       // K (P_node + P_S / eta), W
  double value = 0.0;             // bit/J
  double std_error = 0.0;
};

EeResult energy_efficiency(const EeScenario& sc, Link which, const numerics::McConfig& mc);

}  // namespace hetf::energy
