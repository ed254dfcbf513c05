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

#include "hetf/joint_alloc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hetf/errors.hpp"

namespace hetf::joint_alloc {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Problem data in solver units.
struct Units {
  double B, P, n0, ub, up;
  const std::vector<double>& h;
  Units(const JointProblem& pr, const SolverConfig& cfg)
      : B(pr.total_bandwidth / cfg.bandwidth_unit),
        P(pr.total_power / cfg.power_unit),
        n0(pr.noise_psd * cfg.bandwidth_unit / cfg.power_unit),
        ub(cfg.bandwidth_unit),
        up(cfg.power_unit),
        h(pr.gains) {}
};

double snr(double b, double p, double h, double n0) { return p * h / (n0 * b); }

// d/dB of b log2(1 + p h/(n0 b)).
double phi(double s) { return std::log2(1.0 + s) - s / ((1.0 + s) * kLn2); }

double bandwidth_gradient(double b, double p, double h, double n0) {
  if (b <= 0.0) return 0.0;
  return phi(snr(b, p, h, n0));
}

// P_k = b_k (L - n0/h_k)^+ with sum P_k = P.
std::vector<double> water_fill_units(const std::vector<double>& h, const std::vector<double>& b, double P,
                                     double n0, double* level) {
  const std::size_t K = h.size();
  std::vector<double> p(K, 0.0);
  double active_bw = 0.0;
  double floor_max = 0.0;
  for (std::size_t k = 0; k < K; ++k)
    if (h[k] > 0.0 && b[k] > 0.0) {
      active_bw += b[k];
      floor_max = std::max(floor_max, n0 / h[k]);
    }
  if (active_bw <= 0.0 || P <= 0.0) {
    if (level) *level = 0.0;
    return p;
  }
  auto spent = [&](double L) {
    double s = 0.0;
    for (std::size_t k = 0; k < K; ++k)
      if (h[k] > 0.0 && b[k] > 0.0) s += b[k] * std::max(0.0, L - n0 / h[k]);
    return s;
  };
  double lo = 0.0;
  double hi = P / active_bw + floor_max;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (spent(mid) > P ? hi : lo) = mid;
  }
  const double L = 0.5 * (lo + hi);
  double total = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    if (h[k] > 0.0 && b[k] > 0.0) p[k] = b[k] * std::max(0.0, L - n0 / h[k]);
    total += p[k];
  }
  if (total > 0.0)
    for (auto& v : p) v *= P / total;
  if (level) *level = L;
  return p;
}

std::vector<double> to_units(const std::vector<double>& v, double unit) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / unit;
  return r;
}

std::vector<double> from_units(const std::vector<double>& v, double unit) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * unit;
  return r;
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

// Multipliers consistent with exact water-filling at fixed bandwidths.
void set_power_multipliers(JointAllocState& st, const Units& u, const std::vector<double>& p, double level) {
  const std::size_t K = p.size();
  st.omega = level > 0.0 ? 1.0 / (level * kLn2) : 0.0;
  st.lambda.assign(K, 0.0);
  for (std::size_t k = 0; k < K; ++k)
    if (p[k] <= 0.0) st.lambda[k] = std::max(0.0, st.omega - u.h[k] / (kLn2 * u.n0));
}

JointAllocState fixed_point(const JointProblem& pr, const SolverConfig& cfg) {
  const Units u(pr, cfg);
  const std::size_t K = pr.gains.size();
  std::vector<double> b(K, u.B / K);
  double level = 0.0;
  const std::vector<double> p = water_fill_units(u.h, b, u.P, u.n0, &level);
  JointAllocState st;
  st.bandwidth = from_units(b, u.ub);
  st.power = from_units(p, u.up);
  set_power_multipliers(st, u, p, level);
  st.mu.assign(K, 0.0);
  double wsum = 0.0;
  for (std::size_t k = 0; k < K; ++k) wsum += b[k] * bandwidth_gradient(b[k], p[k], u.h[k], u.n0);
  st.chi = wsum / u.B;
  return st;
}

}  // namespace

void JointProblem::validate() const {
  if (gains.empty()) throw DomainError("JointProblem: K must be >= 1");
  for (double g : gains)
    if (!(g >= 0.0)) throw DomainError("JointProblem: gains must be >= 0");
  if (!(total_bandwidth > 0.0 && total_power >= 0.0 && noise_psd > 0.0))
    throw DomainError("JointProblem: B, N0 must be > 0 and P >= 0");
}

void SolverConfig::validate() const {
  if (!(step > 0.0 && stop_delta > 0.0)) throw DomainError("SolverConfig: step and stop_delta must be > 0");
  if (max_iter < 1) throw DomainError("SolverConfig: max_iter must be >= 1");
  if (!(bandwidth_unit > 0.0 && power_unit > 0.0)) throw DomainError("SolverConfig: units must be > 0");
}

double KktReport::max() const {
  return std::max({stationarity_power, stationarity_bandwidth, complementary_slackness, primal_feasibility,
                   dual_feasibility});
}

double objective(const JointProblem& pr, const std::vector<double>& bandwidth, const std::vector<double>& power) {
  double c = 0.0;
  for (std::size_t k = 0; k < pr.gains.size(); ++k) {
    const double b = bandwidth[k];
    const double p = power[k];
    if (b <= 0.0 || p <= 0.0 || pr.gains[k] <= 0.0) continue;
    c += b * std::log2(1.0 + p * pr.gains[k] / (pr.noise_psd * b));
  }
  return c;
}

double objective(const JointProblem& pr, const JointAllocState& st) { return objective(pr, st.bandwidth, st.power); }

std::vector<double> water_fill(const JointProblem& pr, const std::vector<double>& bandwidth, double* water_level) {
  return water_fill_units(pr.gains, bandwidth, pr.total_power, pr.noise_psd, water_level);
}

JointAllocState initial_state(const JointProblem& pr, const SolverConfig& cfg) {
  pr.validate();
  cfg.validate();
  if (cfg.init == Initialization::kFixedBandwidthKkt) return fixed_point(pr, cfg);
  const std::size_t K = pr.gains.size();
  JointAllocState st;
  st.bandwidth.assign(K, pr.total_bandwidth / K);
  st.power.assign(K, pr.total_power / K);
  st.lambda.assign(K, 0.1);
  st.mu.assign(K, 0.1);
  st.omega = 0.1;
  st.chi = 0.1;
  return st;
}

JointAllocState step(const JointProblem& pr, const JointAllocState& st, const SolverConfig& cfg) {
  const Units u(pr, cfg);
  const std::size_t K = pr.gains.size();
  const double beta = cfg.step;
  const std::vector<double> b = to_units(st.bandwidth, u.ub);
  const std::vector<double> p = to_units(st.power, u.up);

  JointAllocState nx = st;
  std::vector<double> nb(K), np(K);
  for (std::size_t k = 0; k < K; ++k)
    nb[k] = std::max(0.0, b[k] + beta * (bandwidth_gradient(b[k], p[k], u.h[k], u.n0) + st.mu[k] - st.chi));
  for (std::size_t k = 0; k < K; ++k) {
    const double d = st.omega - st.lambda[k];
    if (nb[k] <= 0.0 || u.h[k] <= 0.0) {
      np[k] = 0.0;
    } else if (d <= 0.0) {
      np[k] = u.P;  // unbounded water level: cap at the power budget
    } else {
      np[k] = std::max(0.0, nb[k] * (1.0 / (d * kLn2) - u.n0 / u.h[k]));
    }
  }
  const double sign = cfg.rule == MultiplierRule::kProjectedDescent ? -1.0 : 1.0;
  nx.chi = std::max(0.0, st.chi + beta * (sum(nb) - u.B));
  for (std::size_t k = 0; k < K; ++k) nx.mu[k] = std::max(0.0, st.mu[k] + sign * beta * nb[k]);
  nx.omega = std::max(0.0, st.omega + beta * (sum(np) - u.P));
  for (std::size_t k = 0; k < K; ++k) nx.lambda[k] = std::max(0.0, st.lambda[k] + sign * beta * np[k]);
  nx.bandwidth = from_units(nb, u.ub);
  nx.power = from_units(np, u.up);
  nx.iteration = st.iteration + 1;
  return nx;
}

SolveResult solve(const JointProblem& pr, const SolverConfig& cfg) {
  SolveResult res;
  JointAllocState st = initial_state(pr, cfg);
  double cap = objective(pr, st);
  if (cfg.record_trace) res.trace.push_back({0, st.bandwidth, st.power, cap});
  double improvement = 0.0;
  for (;;) {
    st = step(pr, st, cfg);
    const double next = objective(pr, st);
    improvement = next - cap;
    cap = next;
    if (cfg.record_trace) res.trace.push_back({st.iteration, st.bandwidth, st.power, cap});
    if (!(improvement >= cfg.stop_delta && st.iteration < cfg.max_iter)) break;
  }
  st.converged = improvement < cfg.stop_delta;
  res.last_iterate = st;

  // Restore feasibility: rescale onto sum B = B, then water-fill the powers exactly.
  const Units u(pr, cfg);
  std::vector<double> b = to_units(st.bandwidth, u.ub);
  const double bsum = sum(b);
  if (bsum > 0.0)
    for (auto& v : b) v *= u.B / bsum;
  else
    b.assign(b.size(), u.B / b.size());
  double level = 0.0;
  const std::vector<double> p = water_fill_units(u.h, b, u.P, u.n0, &level);
  st.bandwidth = from_units(b, u.ub);
  st.power = from_units(p, u.up);
  set_power_multipliers(st, u, p, level);
  res.state = st;
  return res;
}

JointAllocState solve_fixed_bandwidth(const JointProblem& pr, const SolverConfig& cfg) {
  pr.validate();
  cfg.validate();
  JointAllocState st = fixed_point(pr, cfg);
  st.converged = true;
  return st;
}

KktReport kkt_residual(const JointProblem& pr, const JointAllocState& st, const SolverConfig& cfg,
                       double active_tol) {
  const Units u(pr, cfg);
  const std::size_t K = pr.gains.size();
  const std::vector<double> b = to_units(st.bandwidth, u.ub);
  const std::vector<double> p = to_units(st.power, u.up);
  KktReport r;
  for (std::size_t k = 0; k < K; ++k) {
    if (p[k] > active_tol && b[k] > 0.0) {
      const double dp = b[k] * u.h[k] / (kLn2 * (u.n0 * b[k] + p[k] * u.h[k])) - st.omega + st.lambda[k];
      r.stationarity_power = std::max(r.stationarity_power, std::fabs(dp));
    }
    if (b[k] > active_tol) {
      const double db = bandwidth_gradient(b[k], p[k], u.h[k], u.n0) - st.chi + st.mu[k];
      r.stationarity_bandwidth = std::max(r.stationarity_bandwidth, std::fabs(db));
    }
    r.complementary_slackness =
        std::max({r.complementary_slackness, std::fabs(st.lambda[k] * p[k]), std::fabs(st.mu[k] * b[k])});
    r.primal_feasibility = std::max({r.primal_feasibility, -b[k], -p[k]});
    r.dual_feasibility = std::max({r.dual_feasibility, -st.lambda[k], -st.mu[k]});
  }
  const double bex = sum(b) - u.B;
  const double pex = sum(p) - u.P;
  r.complementary_slackness =
      std::max({r.complementary_slackness, std::fabs(st.chi * bex), std::fabs(st.omega * pex)});
  r.primal_feasibility = std::max({r.primal_feasibility, bex, pex, 0.0});
  r.dual_feasibility = std::max({r.dual_feasibility, -st.chi, -st.omega, 0.0});
  return r;
}

P2Capacity ergodic_capacity_p2(const channel::ChannelParams& cp, const JointProblem& budgets,
                               const SolverConfig& cfg, const numerics::McConfig& mc) {
  const int K = cp.K();
  SolverConfig quiet = cfg;
  quiet.record_trace = false;
  auto est = numerics::mc_expectation_multi(
      K, 4,
      [&](numerics::Stream& s, std::span<double> x) {
        for (int k = 0; k < K; ++k) x[k] = channel::sample_subchannel(cp.subchannels[k], s);
      },
      [&](std::span<const double> x, std::span<double> out) {
        JointProblem pr = budgets;
        pr.gains.assign(x.begin(), x.end());
        const double a = objective(pr, solve(pr, quiet).state);
        const double f = objective(pr, solve_fixed_bandwidth(pr, quiet));
        out[0] = a;
        out[1] = f;
        out[2] = a - f;
        out[3] = a < f ? 1.0 : 0.0;
      },
      mc);
  return {est[0], est[1], est[2], est[3]};
}

std::string to_string(Initialization v) {
  return v == Initialization::kFixedBandwidthKkt ? "fixed_bandwidth_kkt" : "uniform";
}

std::string to_string(MultiplierRule v) {
  return v == MultiplierRule::kProjectedDescent ? "projected_descent" : "ascent";
}

}  // namespace hetf::joint_alloc
