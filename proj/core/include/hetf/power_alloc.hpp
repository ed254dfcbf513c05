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

// Ergodic-capacity water-filling over the composite gain density.
//
// The average-power constraint is taken against the composite density as defined in
// channel.hpp, whose total mass is M = prod L_k^a. With that convention the small-threshold
// balance has the closed form
//     h0 = M / (Pbar/d2 + eps (Lam/K) M),   eps = KN ms / (KN m - 1),   d2 = N0 B,
// and the policy is P(h) = min(d2/h0 - d2/h, Ph) for h >= h0, 0 below.

#include <functional>

#include "hetf/channel.hpp"
#include "hetf/numerics.hpp"

namespace hetf::power_alloc {

struct PowerBudget {
  double avg_power = 0.5;    // W
  double peak_power = 1.0;   // W
  double noise_psd = 1e-12;  // W/Hz
  double bandwidth = 200e6;  // Hz

  void validate() const;
  double noise_power() const { return noise_psd * bandwidth; }
};

enum class ThresholdMethod { kClosedForm, kExact };

struct PowerPolicy {
  double threshold = 0.0;    // h0; +inf means the policy never transmits
  double water_level = 0.0;  // d2 / h0, W
  double peak = 0.0;         // W
  double noise_power = 0.0;  // d2, W

  static PowerPolicy from_threshold(double h0, const PowerBudget& pb);
};

// Gain density used by the balance equation, with a length scale for the quadrature map.
struct GainDensity {
  std::function<double(double)> pdf;
  double scale = 1.0;
};

GainDensity composite_density(const channel::ChannelParams& cp);
// Exponential density with the normalized composite mean and total mass M.
GainDensity matched_exponential_density(const channel::ChannelParams& cp);

double threshold_closed_form(const channel::ChannelParams& cp, const PowerBudget& pb);

// Average power spent by a threshold policy under `dens`:
//   int_{h0}^inf min(d2/h0 - d2/h, Ph) f(h) dh    (clamped)
// or without the peak clamp when clamp == false.
double average_power(double h0, const GainDensity& dens, const PowerBudget& pb, bool clamp,
                     const numerics::QuadratureConfig& qcfg = {});

// Root of int_{h0}^inf (d2/h0 - d2/h) f(h) dh = Pbar in h0 by bisection on log h0.
// The peak clamp is not part of the balance; it is applied by the policy afterwards.
// Returns +inf for Pbar = 0.
double threshold_for_density(const GainDensity& dens, const PowerBudget& pb,
                             const numerics::QuadratureConfig& qcfg = {});

double threshold_exact(const channel::ChannelParams& cp, const PowerBudget& pb,
                       const numerics::QuadratureConfig& qcfg = {});

PowerPolicy make_policy(const channel::ChannelParams& cp, const PowerBudget& pb, ThresholdMethod method,
                        const numerics::QuadratureConfig& qcfg = {});

double policy_eval(const PowerPolicy& pol, double h);

// Gain at which the closed-form water-filling branch reaches the peak; +inf if never.
double crossover_gain(const channel::ChannelParams& cp, const PowerBudget& pb, double eps);

// Three-branch policy with the Gamma ratio replaced by a free eps.
double policy_eval_asymptotic(const channel::ChannelParams& cp, const PowerBudget& pb, double h, double eps);

// |dC/dP - lambda| / lambda at h on the unclamped branch, lambda = B h0 / (d2 ln 2).
double stationarity_residual(const PowerPolicy& pol, const PowerBudget& pb, double h);

// int_{h0}^inf B log2(1 + P(h) h / d2) f(h) dh with the composite density (mass M).
double ergodic_capacity_p1(const channel::ChannelParams& cp, const PowerBudget& pb, const PowerPolicy& pol,
                           const numerics::QuadratureConfig& qcfg = {});

// Monte Carlo counterpart: M * E[B log2(1 + P(h) h / d2)] with h drawn from the normalized
// composite density.
numerics::McEstimate ergodic_capacity_p1_mc(const channel::ChannelParams& cp, const PowerBudget& pb,
                                            const PowerPolicy& pol, const numerics::McConfig& mc);

struct BaselineResult {
  double threshold = 0.0;
  double capacity = 0.0;      // evaluated under the composite density
  double power_spent = 0.0;   // clamped average power under the composite density
};

// Water-filling designed for an exponential gain with the same normalized mean, then
// evaluated under the composite density.
BaselineResult rayleigh_baseline(const channel::ChannelParams& cp, const PowerBudget& pb,
                                 const numerics::QuadratureConfig& qcfg = {});

}  // namespace hetf::power_alloc
