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

#include "hetf/power_alloc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hetf/errors.hpp"

namespace hetf::power_alloc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

numerics::QuadratureConfig with_scale(numerics::QuadratureConfig q, double scale) {
  q.scale = scale;
  return q;
}

void require_closed_form_domain(const channel::ChannelParams& cp) {
  if (!(cp.shape_a() > 1.0)) throw DomainError("closed-form threshold requires K N m > 1");
}

}  // namespace

void PowerBudget::validate() const {
  if (!(avg_power >= 0.0)) throw DomainError("PowerBudget: average power must be >= 0");
  if (!(peak_power > 0.0 && noise_psd > 0.0 && bandwidth > 0.0))
    throw DomainError("PowerBudget: peak power, noise PSD and bandwidth must be > 0");
  if (avg_power > peak_power) throw DomainError("PowerBudget: average power exceeds peak power");
}

PowerPolicy PowerPolicy::from_threshold(double h0, const PowerBudget& pb) {
  if (!(h0 > 0.0)) throw DomainError("PowerPolicy: threshold must be > 0");
  const double d2 = pb.noise_power();
  return {h0, std::isinf(h0) ? 0.0 : d2 / h0, pb.peak_power, d2};
}

GainDensity composite_density(const channel::ChannelParams& cp) {
  return {[cp](double h) { return channel::pdf_composite(h, cp); }, channel::composite_quadrature(cp).scale};
}

GainDensity matched_exponential_density(const channel::ChannelParams& cp) {
  const auto mean = cp.normalized_mean();
  if (!mean) throw DomainError("exponential baseline: composite mean diverges (K N ms <= 1)");
  const double mu = *mean;
  const double mass = cp.prefactor();
  return {[mu, mass](double h) { return h < 0.0 ? 0.0 : mass * std::exp(-h / mu) / mu; }, mu};
}

double threshold_closed_form(const channel::ChannelParams& cp, const PowerBudget& pb) {
  require_closed_form_domain(cp);
  pb.validate();
  const double M = cp.prefactor();
  return M / (pb.avg_power / pb.noise_power() + cp.epsilon() * (cp.lambda() / cp.K()) * M);
}

double average_power(double h0, const GainDensity& dens, const PowerBudget& pb, bool clamp,
                     const numerics::QuadratureConfig& qcfg) {
  if (std::isinf(h0)) return 0.0;
  const double d2 = pb.noise_power();
  const double level = d2 / h0;
  const double ph = pb.peak_power;
  auto integrand = [&](double h) {
    if (h <= h0) return 0.0;
    double p = level - d2 / h;
    if (clamp) p = std::min(p, ph);
    return p * dens.pdf(h);
  };
  return numerics::integrate_from(integrand, h0, with_scale(qcfg, dens.scale)).value;
}

double threshold_for_density(const GainDensity& dens, const PowerBudget& pb,
                             const numerics::QuadratureConfig& qcfg) {
  pb.validate();
  if (pb.avg_power == 0.0) return kInf;
  auto balance = [&](double ln_h0) {
    return average_power(std::exp(ln_h0), dens, pb, false, qcfg) - pb.avg_power;
  };
  // Balance decreases in h0: +inf as h0 -> 0, -Pbar as h0 -> inf.
  double lo = std::log(dens.scale);
  double hi = lo;
  int guard = 0;
  while (balance(lo) <= 0.0) {
    lo -= 1.0;
    if (++guard > 200) throw NumericalError("threshold: no lower bracket");
  }
  guard = 0;
  while (balance(hi) >= 0.0) {
    hi += 1.0;
    if (++guard > 200) throw NumericalError("threshold: no upper bracket");
  }
  return std::exp(numerics::bisect(balance, lo, hi, 1e-13));
}

double threshold_exact(const channel::ChannelParams& cp, const PowerBudget& pb,
                       const numerics::QuadratureConfig& qcfg) {
  return threshold_for_density(composite_density(cp), pb, qcfg);
}

PowerPolicy make_policy(const channel::ChannelParams& cp, const PowerBudget& pb, ThresholdMethod method,
                        const numerics::QuadratureConfig& qcfg) {
  const double h0 =
      method == ThresholdMethod::kClosedForm ? threshold_closed_form(cp, pb) : threshold_exact(cp, pb, qcfg);
  return PowerPolicy::from_threshold(h0, pb);
}

double policy_eval(const PowerPolicy& pol, double h) {
  if (h < pol.threshold) return 0.0;
  const double p = pol.water_level - pol.noise_power / h;
  if (p >= pol.peak) return pol.peak;
  return std::max(p, 0.0);
}

double crossover_gain(const channel::ChannelParams& cp, const PowerBudget& pb, double eps) {
  const double d2 = pb.noise_power();
  const double M = cp.prefactor();
  const double den = pb.avg_power + (eps * cp.lambda() * d2 / cp.K() - pb.peak_power) * M;
  if (!(den > 0.0)) return kInf;
  return d2 * M / den;
}

double policy_eval_asymptotic(const channel::ChannelParams& cp, const PowerBudget& pb, double h, double eps) {
  const double d2 = pb.noise_power();
  const double M = cp.prefactor();
  const double level = (pb.avg_power + eps * cp.lambda() * d2 * M / cp.K()) / M;
  const double h0 = d2 / level;
  if (h < h0) return 0.0;
  if (h >= crossover_gain(cp, pb, eps)) return pb.peak_power;
  return level - d2 / h;
}

double stationarity_residual(const PowerPolicy& pol, const PowerBudget& pb, double h) {
  const double d2 = pol.noise_power;
  const double lambda = pb.bandwidth * pol.threshold / (d2 * std::numbers::ln2);
  const double p = policy_eval(pol, h);
  const double marginal = pb.bandwidth / std::numbers::ln2 * (h / d2) / (1.0 + h * p / d2);
  return std::fabs(marginal - lambda) / lambda;
}

double ergodic_capacity_p1(const channel::ChannelParams& cp, const PowerBudget& pb, const PowerPolicy& pol,
                           const numerics::QuadratureConfig& qcfg) {
  if (std::isinf(pol.threshold)) return 0.0;
  const double d2 = pol.noise_power;
  auto integrand = [&](double h) {
    const double p = policy_eval(pol, h);
    if (p <= 0.0) return 0.0;
    return pb.bandwidth * std::log2(1.0 + p * h / d2) * channel::pdf_composite(h, cp);
  };
  return numerics::integrate_from(integrand, pol.threshold, channel::composite_quadrature(cp, qcfg)).value;
}

numerics::McEstimate ergodic_capacity_p1_mc(const channel::ChannelParams& cp, const PowerBudget& pb,
                                            const PowerPolicy& pol, const numerics::McConfig& mc) {
  const double M = cp.prefactor();
  const double d2 = pol.noise_power;
  auto est = numerics::mc_expectation(
      1, [&](numerics::Stream& s, std::span<double> x) { x[0] = channel::sample_normalized_composite(cp, s); },
      [&](std::span<const double> x) {
        const double p = policy_eval(pol, x[0]);
        return p > 0.0 ? M * pb.bandwidth * std::log2(1.0 + p * x[0] / d2) : 0.0;
      },
      mc);
  return est;
}

BaselineResult rayleigh_baseline(const channel::ChannelParams& cp, const PowerBudget& pb,
                                 const numerics::QuadratureConfig& qcfg) {
  BaselineResult r;
  r.threshold = threshold_for_density(matched_exponential_density(cp), pb, qcfg);
  if (std::isinf(r.threshold)) return r;
  const PowerPolicy pol = PowerPolicy::from_threshold(r.threshold, pb);
  r.capacity = ergodic_capacity_p1(cp, pb, pol, qcfg);
  r.power_spent = average_power(r.threshold, composite_density(cp), pb, true, qcfg);
  return r;
}

}  // namespace hetf::power_alloc
