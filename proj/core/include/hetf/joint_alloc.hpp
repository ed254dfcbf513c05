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

// Joint bandwidth/power allocation over K subchannels with known gains:
//
//   max  sum_k B_k log2(1 + P_k h_k / (N0 B_k))   s.t.  sum B_k <= B,  sum P_k <= P,  B_k, P_k >= 0
//
// solved by a projected primal-dual gradient iteration on the Lagrangian
//   C - omega (sum P - P) - chi (sum B - B) + sum lambda_k P_k + sum mu_k B_k.
//
// The iteration runs in solver units (SolverConfig::bandwidth_unit, power_unit) so that one
// constant step size suits both primal blocks. Multipliers are reported in those units.

#include <string>
#include <vector>

#include "hetf/channel.hpp"
#include "hetf/numerics.hpp"

namespace hetf::joint_alloc {

struct JointProblem {
  std::vector<double> gains;         // h_k
  double total_bandwidth = 200e6;    // Hz
  double total_power = 0.03;         // W
  double noise_psd = 1e-12;          // W/Hz

  void validate() const;
  int K() const { return static_cast<int>(gains.size()); }
};

enum class Initialization {
  kFixedBandwidthKkt,  // B/K split, exact water-filling, multipliers from its KKT point
  kUniform,            // B/K, P/K, every multiplier 0.1
};

enum class MultiplierRule {
  kProjectedDescent,  // mu <- [mu - beta B]^+, lambda <- [lambda - beta P]^+
  kAscent,            // mu <- [mu + beta B]^+, lambda <- [lambda + beta P]^+
};

struct SolverConfig {
  double step = 0.01;        // beta
  double stop_delta = 0.01;  // Delta, bit/s
  int max_iter = 8000;
  double bandwidth_unit = 5e6;  // Hz per solver unit
  double power_unit = 1e-3;     // W per solver unit
  Initialization init = Initialization::kFixedBandwidthKkt;
  MultiplierRule rule = MultiplierRule::kProjectedDescent;
  bool record_trace = true;

  void validate() const;
};

struct JointAllocState {
  std::vector<double> bandwidth;  // Hz
  std::vector<double> power;      // W
  std::vector<double> lambda;     // solver units
  std::vector<double> mu;         // solver units
  double omega = 0.0;
  double chi = 0.0;
  int iteration = 0;
  bool converged = false;
};

struct TraceRow {
  int iteration = 0;
  std::vector<double> bandwidth;
  std::vector<double> power;
  double capacity = 0.0;
};

struct SolveResult {
  JointAllocState state;         // feasibility-restored final allocation
  JointAllocState last_iterate;  // raw iterate at termination
  std::vector<TraceRow> trace;   // iteration 0 is the initial point
};

struct KktReport {
  double stationarity_power = 0.0;      // max |dL/dP_k| over P_k > active_tol
  double stationarity_bandwidth = 0.0;  // max |dL/dB_k| over B_k > active_tol
  double complementary_slackness = 0.0;
  double primal_feasibility = 0.0;      // solver units
  double dual_feasibility = 0.0;
  double max() const;
};

double objective(const JointProblem& pr, const std::vector<double>& bandwidth, const std::vector<double>& power);
double objective(const JointProblem& pr, const JointAllocState& st);

JointAllocState initial_state(const JointProblem& pr, const SolverConfig& cfg);

// One sweep of the update rules in order B, P (with fresh B), chi, mu, omega, lambda.
JointAllocState step(const JointProblem& pr, const JointAllocState& st, const SolverConfig& cfg);

// Iterates while the capacity improvement is >= stop_delta and fewer than max_iter steps
// have run. converged is true when the improvement test ended the loop. The returned state
// is rescaled onto sum B_k = B and its powers re-water-filled for that split.
SolveResult solve(const JointProblem& pr, const SolverConfig& cfg = {});

// B_k = B/K and exact water-filling of the powers.
JointAllocState solve_fixed_bandwidth(const JointProblem& pr, const SolverConfig& cfg = {});

// Exact water-filling of P over fixed bandwidths: P_k = B_k (L - N0/h_k)^+.
std::vector<double> water_fill(const JointProblem& pr, const std::vector<double>& bandwidth,
                               double* water_level = nullptr);

KktReport kkt_residual(const JointProblem& pr, const JointAllocState& st, const SolverConfig& cfg = {},
                       double active_tol = 1e-9);

struct P2Capacity {
  numerics::McEstimate adaptive;
  numerics::McEstimate fixed;
  numerics::McEstimate gap;             // adaptive - fixed, paired
  numerics::McEstimate below_fixed;     // fraction of draws with adaptive < fixed
};

// Monte Carlo over per-subchannel gain draws h_k ~ pdf_subchannel; each draw is solved both ways.
// `budgets` supplies B, P, N0; its gains are ignored.
P2Capacity ergodic_capacity_p2(const channel::ChannelParams& cp, const JointProblem& budgets,
                               const SolverConfig& cfg, const numerics::McConfig& mc);

std::string to_string(Initialization v);
std::string to_string(MultiplierRule v);

}  // namespace hetf::joint_alloc
