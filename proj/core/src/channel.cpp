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

#include "hetf/channel.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <cmath>

#include "hetf/errors.hpp"
#include "hetf/specfun.hpp"

namespace hetf::channel {

namespace {

// theta (theta g)^(a-1) (1 + theta g)^-(a+b) / B(a, b), evaluated in log space.
double f_form(double g, double theta, double a, double b, double ln_extra = 0.0) {
  if (g < 0.0 || std::isnan(g)) throw DomainError("density: gain must be >= 0");
  if (g == 0.0) {
    if (a > 1.0) return 0.0;
    if (a == 1.0) return std::exp(ln_extra + std::log(theta) - specfun::ln_beta(a, b));
    return INFINITY;
  }
  const double x = theta * g;
  return std::exp(ln_extra + std::log(theta) + (a - 1.0) * std::log(x) - (a + b) * std::log1p(x) -
                  specfun::ln_beta(a, b));
}

double f_form_cdf(double g, double theta, double a, double b) {
  if (g < 0.0 || std::isnan(g)) throw DomainError("cdf: gain must be >= 0");
  if (g == 0.0) return 0.0;
  if (std::isinf(g)) return 1.0;
  const double x = theta * g;
  return boost::math::ibeta(a, b, x / (1.0 + x));
}

double sum_theta(const FadingParams& p, int n) { return p.m / (n * p.m_s * p.mean_gain); }

void check_n(int n) {
  if (n < 1) throw DomainError("reflector count must be >= 1");
}

}  // namespace

void FadingParams::validate() const {
  if (!(m >= 0.5)) throw DomainError("FadingParams: m must be >= 0.5");
  if (!(m_s > 0.0)) throw DomainError("FadingParams: m_s must be > 0");
  if (!(mean_gain > 0.0)) throw DomainError("FadingParams: mean_gain must be > 0");
}

void SubchannelParams::validate() const {
  fading.validate();
  if (n_reflectors < 1) throw DomainError("SubchannelParams: N must be >= 1");
  if (!(dist_sr > 0.0 && dist_rd > 0.0)) throw DomainError("SubchannelParams: distances must be > 0");
  if (!(pathloss_exp >= 0.0 && pathloss_exp <= 1.0))
    throw DomainError("SubchannelParams: path-loss exponent must lie in [0, 1]");
}

double SubchannelParams::ln_pathloss() const { return pathloss_exp * std::log(distance()); }

double SubchannelParams::lambda() const {
  return fading.m * std::exp(ln_pathloss()) / (n_reflectors * fading.m_s * fading.mean_gain);
}

ChannelParams ChannelParams::from_subchannels(std::vector<SubchannelParams> subs) {
  if (subs.empty()) throw DomainError("ChannelParams: K must be >= 1");
  ChannelParams cp;
  cp.subchannels = std::move(subs);
  const double K = static_cast<double>(cp.subchannels.size());
  for (const auto& sc : cp.subchannels) {
    sc.validate();
    if (sc.n_reflectors != cp.subchannels.front().n_reflectors ||
        sc.pathloss_exp != cp.subchannels.front().pathloss_exp)
      throw DomainError("ChannelParams: subchannels must share N and the path-loss exponent");
    cp.avg_m += sc.fading.m / K;
    cp.avg_m_s += sc.fading.m_s / K;
    cp.avg_dist += sc.distance() / K;
    cp.avg_gain += sc.fading.mean_gain / K;
  }
  return cp;
}

ChannelParams ChannelParams::homogeneous(int K, const SubchannelParams& sc) {
  if (K < 1) throw DomainError("ChannelParams: K must be >= 1");
  return from_subchannels(std::vector<SubchannelParams>(K, sc));
}

void ChannelParams::validate() const {
  if (subchannels.empty()) throw DomainError("ChannelParams: K must be >= 1");
  for (const auto& sc : subchannels) sc.validate();
  if (!(avg_m > 0.0 && avg_m_s > 0.0 && avg_dist > 0.0 && avg_gain > 0.0))
    throw DomainError("ChannelParams: average parameters must be > 0");
}

double ChannelParams::ln_prefactor() const {
  double s = 0.0;
  for (const auto& sc : subchannels) s += sc.ln_pathloss();
  return s;
}

double ChannelParams::prefactor() const { return std::exp(ln_prefactor()); }

double ChannelParams::lambda() const {
  return avg_m * std::pow(avg_dist, alpha()) / (N() * avg_m_s * avg_gain);
}

double ChannelParams::shape_a() const { return static_cast<double>(K()) * N() * avg_m; }
double ChannelParams::shape_b() const { return static_cast<double>(K()) * N() * avg_m_s; }
double ChannelParams::epsilon() const { return specfun::gamma_ratio_epsilon(shape_a(), shape_b()); }

std::optional<double> ChannelParams::normalized_mean() const {
  if (!(shape_b() > 1.0)) return std::nullopt;
  return scale() * shape_a() / (shape_b() - 1.0);
}

std::optional<double> ChannelParams::sampled_mean() const {
  double mean = 0.0;
  for (const auto& sc : subchannels) {
    if (!(sc.fading.m_s > 1.0)) return std::nullopt;
    mean += std::exp(-sc.ln_pathloss()) * sc.n_reflectors * sc.fading.mean_gain * sc.fading.m_s /
            (sc.fading.m_s - 1.0);
  }
  return mean;
}

double ChannelParams::mode() const {
  const double a = shape_a();
  if (a <= 1.0) return 0.0;
  return scale() * (a - 1.0) / (shape_b() + 1.0);
}

double pdf_single_reflector(double g, const FadingParams& p) {
  return f_form(g, p.m / (p.m_s * p.mean_gain), p.m, p.m_s);
}

double cdf_single_reflector(double g, const FadingParams& p) {
  return f_form_cdf(g, p.m / (p.m_s * p.mean_gain), p.m, p.m_s);
}

double pdf_sum_gain(double g, const FadingParams& p, int n) {
  check_n(n);
  return f_form(g, sum_theta(p, n), n * p.m, n * p.m_s);
}

double cdf_sum_gain(double g, const FadingParams& p, int n) {
  check_n(n);
  return f_form_cdf(g, sum_theta(p, n), n * p.m, n * p.m_s);
}

double pdf_sum_gain_meijer(double g, const FadingParams& p, int n) {
  check_n(n);
  if (g < 0.0 || std::isnan(g)) throw DomainError("density: gain must be >= 0");
  if (g == 0.0) return pdf_sum_gain(g, p, n);
  // g^(Nm) theta^(Nm+1) / (Gamma(Nm) Gamma(Nms)) G(theta g | -N(m+ms), -Nm ; -1, -Nm)
  const double th = sum_theta(p, n);
  const double a = n * p.m;
  const double b = n * p.m_s;
  const double ln_g = specfun::ln_meijer_g_2212(th * g, -(a + b), -a, -1.0, -a);
  return std::exp(a * std::log(g) + (a + 1.0) * std::log(th) - specfun::ln_gamma(a) - specfun::ln_gamma(b) +
                  ln_g);
}

double pdf_subchannel(double h, const SubchannelParams& sc) {
  if (h < 0.0 || std::isnan(h)) throw DomainError("density: gain must be >= 0");
  const double la = sc.ln_pathloss();
  // L^a f_sum(h L^a): the outer L^a combines with theta into Lambda_k.
  return f_form(h * std::exp(la), sum_theta(sc.fading, sc.n_reflectors), sc.n_reflectors * sc.fading.m,
                sc.n_reflectors * sc.fading.m_s, la);
}

double pdf_subchannel_meijer(double h, const SubchannelParams& sc) {
  if (h < 0.0 || std::isnan(h)) throw DomainError("density: gain must be >= 0");
  if (h == 0.0) return pdf_subchannel(h, sc);
  const double lam = sc.lambda();
  const double a = sc.n_reflectors * sc.fading.m;
  const double b = sc.n_reflectors * sc.fading.m_s;
  const double ln_g = specfun::ln_meijer_g_2212(lam * h, -b, 0.0, a - 1.0, 0.0);
  // lambda_k already carries L^a, so no separate Jacobian factor.
  return std::exp(std::log(lam) - specfun::ln_gamma(a) - specfun::ln_gamma(b) + ln_g);
}

double pdf_composite(double h, const ChannelParams& cp) {
  return f_form(h, cp.lambda() / cp.K(), cp.shape_a(), cp.shape_b(), cp.ln_prefactor());
}

double pdf_composite_meijer(double h, const ChannelParams& cp) {
  if (h < 0.0 || std::isnan(h)) throw DomainError("density: gain must be >= 0");
  if (h == 0.0) return pdf_composite(h, cp);
  const double x = cp.lambda() / cp.K();
  const double a = cp.shape_a();
  const double b = cp.shape_b();
  const double ln_g = specfun::ln_meijer_g_2212(x * h, -b, 0.0, a - 1.0, 0.0);
  return std::exp(cp.ln_prefactor() + std::log(x) - specfun::ln_gamma(a) - specfun::ln_gamma(b) + ln_g);
}

double normalized_pdf_composite(double h, const ChannelParams& cp) {
  return f_form(h, cp.lambda() / cp.K(), cp.shape_a(), cp.shape_b());
}

double cdf_normalized_composite(double h, const ChannelParams& cp) {
  return f_form_cdf(h, cp.lambda() / cp.K(), cp.shape_a(), cp.shape_b());
}

double sample_gain(const FadingParams& p, numerics::Stream& s) {
  const double x = s.gamma(p.m);
  const double y = s.gamma(p.m_s);
  return p.m_s * p.mean_gain / p.m * x / y;
}

double sample_sum_gain(const FadingParams& p, int n, numerics::Stream& s) {
  check_n(n);
  double g = 0.0;
  for (int i = 0; i < n; ++i) g += sample_gain(p, s);
  return g;
}

double sample_subchannel(const SubchannelParams& sc, numerics::Stream& s) {
  return std::exp(-sc.ln_pathloss()) * sample_sum_gain(sc.fading, sc.n_reflectors, s);
}

double sample_composite(const ChannelParams& cp, numerics::Stream& s) {
  double h = 0.0;
  for (const auto& sc : cp.subchannels) h += sample_subchannel(sc, s);
  return h;
}

double sample_normalized_composite(const ChannelParams& cp, numerics::Stream& s) {
  const double x = s.gamma(cp.shape_a());
  const double y = s.gamma(cp.shape_b());
  return cp.scale() * x / y;
}

numerics::QuadratureConfig composite_quadrature(const ChannelParams& cp, numerics::QuadratureConfig base) {
  base.scale = cp.scale() * std::max(cp.shape_a(), 1.0) / std::max(cp.shape_b(), 1.0);
  return base;
}

numerics::QuadResult composite_mass(const ChannelParams& cp, const numerics::QuadratureConfig& base) {
  return numerics::integrate_semi_infinite([&](double h) { return pdf_composite(h, cp); },
                                           composite_quadrature(cp, base));
}

}  // namespace hetf::channel
