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

// Fisher-Snedecor F fading: single reflector, N-reflector sum, path-loss-scaled
// subchannel, and the K-subchannel composite gain. Densities are computed in log space.
//
// Conventions:
//   single reflector   f(g) = theta (theta g)^(m-1) (1 + theta g)^-(m+ms) / B(m, ms),  theta = m/(ms gbar)
//   N-reflector sum    same form with shapes (N m, N ms) and theta = m/(N ms gbar)
//   subchannel         f_k(h) = L_k^a f_sum(h L_k^a),  L_k = d_sr d_rd
//   composite          f(h) = M (Lam/K)^(KNm) h^(KNm-1) (1 + Lam h/K)^-(KN(m+ms)) / B(KNm, KNms)
//                      with M = prod_k L_k^a and Lam = m Lbar^a / (N ms hbar).
// The composite density integrates to M, not 1; normalized_pdf_composite divides M out.

#include <optional>
#include <vector>

#include "hetf/numerics.hpp"

namespace hetf::channel {

struct FadingParams {
  double m = 2.0;          // fading severity, >= 0.5
  double m_s = 2.0;        // shadowing severity, > 0
  double mean_gain = 5.0;  // scale gbar, > 0

  void validate() const;
};

struct SubchannelParams {
  FadingParams fading;
  int n_reflectors = 8;
  double dist_sr = 20.0;  // meters
  double dist_rd = 15.0;  // meters
  double pathloss_exp = 0.5;

  void validate() const;
  double distance() const { return dist_sr * dist_rd; }
  double ln_pathloss() const;  // alpha ln L_k
  double lambda() const;       // m L_k^a / (N ms gbar)
};

struct ChannelParams {
  std::vector<SubchannelParams> subchannels;
  // Composite averages. from_subchannels fills them with arithmetic means.
  double avg_m = 0.0;
  double avg_m_s = 0.0;
  double avg_dist = 0.0;
  double avg_gain = 0.0;

  static ChannelParams from_subchannels(std::vector<SubchannelParams> subs);
  static ChannelParams homogeneous(int K, const SubchannelParams& sc);

  void validate() const;
  int K() const { return static_cast<int>(subchannels.size()); }
  int N() const { return subchannels.front().n_reflectors; }
  double alpha() const { return subchannels.front().pathloss_exp; }

  double ln_prefactor() const;  // ln prod_k L_k^a
  double prefactor() const;
  double lambda() const;        // Lam
  double shape_a() const;       // K N m
  double shape_b() const;       // K N ms
  double epsilon() const;       // Gamma(a-1)Gamma(b+1)/(Gamma(a)Gamma(b)) = b/(a-1)
  double scale() const { return K() / lambda(); }  // composite density scale K/Lam

  // Mean of the normalized composite density; empty when K N ms <= 1 (divergent).
  std::optional<double> normalized_mean() const;
  // Exact mean of the sampled gain sum_k L_k^-a sum_n g_kn; empty when some ms <= 1.
  std::optional<double> sampled_mean() const;
  // Mode of the composite density.
  double mode() const;
};

// ---- Densities ----------------------------------------------------------

double pdf_single_reflector(double g, const FadingParams& p);
double cdf_single_reflector(double g, const FadingParams& p);

double pdf_sum_gain(double g, const FadingParams& p, int n);
double pdf_sum_gain_meijer(double g, const FadingParams& p, int n);
double cdf_sum_gain(double g, const FadingParams& p, int n);

double pdf_subchannel(double h, const SubchannelParams& sc);
double pdf_subchannel_meijer(double h, const SubchannelParams& sc);

double pdf_composite(double h, const ChannelParams& cp);
double pdf_composite_meijer(double h, const ChannelParams& cp);
double normalized_pdf_composite(double h, const ChannelParams& cp);
double cdf_normalized_composite(double h, const ChannelParams& cp);

// ---- Samplers -----------------------------------------------------------

double sample_gain(const FadingParams& p, numerics::Stream& s);
double sample_sum_gain(const FadingParams& p, int n, numerics::Stream& s);
double sample_subchannel(const SubchannelParams& sc, numerics::Stream& s);
double sample_composite(const ChannelParams& cp, numerics::Stream& s);
// Exact draw from normalized_pdf_composite: (K/Lam) X/Y, X ~ Gamma(KNm), Y ~ Gamma(KNms).
double sample_normalized_composite(const ChannelParams& cp, numerics::Stream& s);

// ---- Diagnostics --------------------------------------------------------

// Quadrature settings tuned to the composite density's scale.
numerics::QuadratureConfig composite_quadrature(const ChannelParams& cp, numerics::QuadratureConfig base = {});

// Integral of pdf_composite over [0, inf); equals prefactor() up to quadrature error.
numerics::QuadResult composite_mass(const ChannelParams& cp, const numerics::QuadratureConfig& base = {});

}  // namespace hetf::channel
