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

// Randomized invariants across modules. Every generator is seeded, so failures reproduce.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "hetf/channel.hpp"
#include "hetf/config.hpp"
#include "hetf/csv.hpp"
#include "hetf/energy.hpp"
#include "hetf/joint_alloc.hpp"
#include "hetf/power_alloc.hpp"
#include "hetf/specfun.hpp"

using namespace hetf;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

struct Draw {
  std::mt19937_64 rng;
  explicit Draw(std::uint64_t seed) : rng(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
};

channel::ChannelParams random_channel(Draw& d) {
  channel::SubchannelParams sc;
  sc.fading = {d.uniform(0.5, 8.0), d.uniform(0.3, 8.0), d.uniform(0.5, 10.0)};
  sc.n_reflectors = d.integer(1, 16);
  sc.dist_sr = d.uniform(5, 50);
  sc.dist_rd = d.uniform(5, 50);
  sc.pathloss_exp = d.uniform(0.3, 1.0);
  return channel::ChannelParams::homogeneous(d.integer(1, 5), sc);
}

}  // namespace

TEST_CASE("2F1 is symmetric in a, b and obeys Euler's transformation", "[property][specfun]") {
  Draw d(101);
  for (int i = 0; i < 300; ++i) {
    const double a = d.uniform(0.1, 6), b = d.uniform(0.1, 6), c = d.uniform(0.2, 8), z = -d.log_uniform(1e-3, 50);
    const double v = specfun::gauss_2f1(a, b, c, z);
    INFO(a << " " << b << " " << c << " " << z);
    CHECK_THAT(specfun::gauss_2f1(b, a, c, z), WithinRel(v, 1e-10));
    CHECK_THAT(std::pow(1 - z, c - a - b) * specfun::gauss_2f1(c - a, c - b, c, z), WithinRel(v, 1e-8));
  }
}

TEST_CASE("beta function identities", "[property][specfun]") {
  Draw d(102);
  for (int i = 0; i < 300; ++i) {
    const double a = d.uniform(0.1, 40), b = d.uniform(0.1, 40);
    CHECK(specfun::ln_beta(a, b) == specfun::ln_beta(b, a));
    // B(a, b) = B(a + 1, b) + B(a, b + 1)
    CHECK_THAT(std::exp(specfun::ln_beta(a + 1, b) - specfun::ln_beta(a, b)) +
                   std::exp(specfun::ln_beta(a, b + 1) - specfun::ln_beta(a, b)),
               WithinRel(1.0, 1e-12));
  }
}

TEST_CASE("composite density: positivity, scaling and CDF shape", "[property][channel]") {
  Draw d(103);
  for (int i = 0; i < 100; ++i) {
    const auto cp = random_channel(d);
    double prev_cdf = 0.0;
    for (int j = 0; j < 30; ++j) {
      const double h = cp.scale() * d.log_uniform(1e-3, 1e3);
      const double f = channel::pdf_composite(h, cp);
      CHECK(f >= 0.0);
      CHECK(std::isfinite(f));
      CHECK_THAT(channel::normalized_pdf_composite(h, cp) * cp.prefactor(), WithinRel(f, 1e-10) || WithinAbs(f, 1e-290));  // subnormal tails
    }
    for (double t = 1e-3; t < 1e3; t *= 1.5) {
      const double F = channel::cdf_normalized_composite(t * cp.scale(), cp);
      CHECK(F >= prev_cdf);
      CHECK(F <= 1.0);
      prev_cdf = F;
    }
  }
}

TEST_CASE("sum-gain Meijer and elementary routes agree", "[property][channel]") {
  Draw d(104);
  for (int i = 0; i < 200; ++i) {
    const channel::FadingParams p{d.uniform(0.5, 8.0), d.uniform(0.3, 8.0), d.uniform(0.5, 10.0)};
    const int n = d.integer(1, 16);
    const double g = n * p.mean_gain * d.log_uniform(1e-2, 1e2);
    CHECK_THAT(channel::pdf_sum_gain_meijer(g, p, n), WithinRel(channel::pdf_sum_gain(g, p, n), 1e-9));
  }
}

TEST_CASE("water-filling policy shape", "[property][power_alloc]") {
  Draw d(105);
  for (int i = 0; i < 40; ++i) {
    auto cp = random_channel(d);
    if (cp.shape_a() <= 1.0) continue;
    power_alloc::PowerBudget pb;
    pb.peak_power = d.log_uniform(1e-2, 10);
    pb.avg_power = pb.peak_power * d.uniform(0.01, 1.0);
    pb.noise_psd = d.log_uniform(1e-15, 1e-9);
    const auto pol = power_alloc::make_policy(cp, pb, power_alloc::ThresholdMethod::kClosedForm);
    double prev = 0.0;
    for (double t = 0.1; t < 1e4; t *= 1.3) {
      const double p = power_alloc::policy_eval(pol, t * pol.threshold);
      CHECK(p >= prev);
      CHECK(p <= pb.peak_power);
      prev = p;
    }
  }
}

TEST_CASE("exact threshold falls and capacity rises with the budget", "[property][power_alloc]") {
  Draw d(106);
  for (int i = 0; i < 8; ++i) {
    auto cp = random_channel(d);
    if (cp.shape_b() <= 1.5) continue;
    power_alloc::PowerBudget pb;
    pb.peak_power = 10.0;
    double h_prev = INFINITY, c_prev = 0.0;
    for (double p : {0.01, 0.1, 1.0}) {
      pb.avg_power = p;
      const double h0 = power_alloc::threshold_exact(cp, pb);
      const double c = power_alloc::ergodic_capacity_p1(cp, pb, power_alloc::PowerPolicy::from_threshold(h0, pb));
      CHECK(h0 < h_prev);
      CHECK(c > c_prev);
      h_prev = h0;
      c_prev = c;
    }
  }
}

TEST_CASE("joint allocation: feasible and never worse than equal bandwidths", "[property][joint_alloc]") {
  Draw d(107);
  joint_alloc::SolverConfig cfg;
  cfg.record_trace = false;
  cfg.max_iter = 2000;
  for (int i = 0; i < 30; ++i) {
    joint_alloc::JointProblem pr;
    const int K = d.integer(1, 5);
    for (int k = 0; k < K; ++k) pr.gains.push_back(d.log_uniform(0.1, 100));
    pr.total_power = d.log_uniform(1e-3, 0.1);
    const auto st = joint_alloc::solve(pr, cfg).state;
    const double sb = std::accumulate(st.bandwidth.begin(), st.bandwidth.end(), 0.0);
    const double sp = std::accumulate(st.power.begin(), st.power.end(), 0.0);
    CHECK(sb <= pr.total_bandwidth * (1 + 1e-9));
    CHECK(sp <= pr.total_power * (1 + 1e-9));
    for (int k = 0; k < K; ++k) {
      CHECK(st.bandwidth[k] >= 0.0);
      CHECK(st.power[k] >= 0.0);
    }
    const double fixed = joint_alloc::objective(pr, joint_alloc::solve_fixed_bandwidth(pr, cfg));
    CHECK(joint_alloc::objective(pr, st) >= fixed * (1 - 1e-12));
  }
}

TEST_CASE("water_fill spends the budget on the strongest channels first", "[property][joint_alloc]") {
  Draw d(108);
  for (int i = 0; i < 100; ++i) {
    joint_alloc::JointProblem pr;
    const int K = d.integer(2, 6);
    std::vector<double> bw;
    for (int k = 0; k < K; ++k) {
      pr.gains.push_back(d.log_uniform(1e-4, 100));
      bw.push_back(pr.total_bandwidth / K);
    }
    const auto p = joint_alloc::water_fill(pr, bw);
    CHECK_THAT(std::accumulate(p.begin(), p.end(), 0.0), WithinRel(pr.total_power, 1e-10));
    for (int a = 0; a < K; ++a)
      for (int b = 0; b < K; ++b)
        if (pr.gains[a] > pr.gains[b]) CHECK(p[a] >= p[b]);
  }
}

TEST_CASE("relay rate stays below its strong-first-hop limit", "[property][energy]") {
  Draw d(109);
  for (int i = 0; i < 1000; ++i) {
    const energy::HopSnrs s{d.log_uniform(1e-4, 1e6), d.log_uniform(1e-4, 1e6)};
    const int K = d.integer(1, 6);
    const double r = energy::relay_rate(s, 200e6, K);
    CHECK(r >= 0.0);
    CHECK(r <= 200e6 / (2 * K) * std::log2(1 + 2 * s.second) * (1 + 1e-14));
  }
}

TEST_CASE("CSV numbers round-trip to 12 digits", "[property][csv]") {
  Draw d(110);
  for (int i = 0; i < 1000; ++i) {
    const double v = (d.uniform(0, 1) < 0.5 ? -1 : 1) * d.log_uniform(1e-200, 1e200);
    CHECK_THAT(std::stod(csv::format_number(v)), WithinRel(v, 5e-12));
  }
}

TEST_CASE("config echo round-trips random settings", "[property][config]") {
  Draw d(111);
  for (int i = 0; i < 50; ++i) {
    config::Config c;
    c.set("K", std::to_string(d.integer(1, 6)));
    c.set("alpha", csv::format_number(d.uniform(0.1, 1.0)));
    c.set("samples", std::to_string(d.integer(1, 1000000)));
    c.set("ee_n_values", std::to_string(d.integer(1, 9)) + " , " + std::to_string(d.integer(1, 9)));
    std::istringstream in(c.echo());
    CHECK(config::Config::parse(in).echo() == c.echo());
  }
}

TEST_CASE("joint objective is concave along random segments", "[property][joint_alloc]") {
  Draw d(112);
  for (int i = 0; i < 100; ++i) {
    joint_alloc::JointProblem pr;
    const int K = d.integer(1, 5);
    std::vector<double> b0, p0, b1, p1, bm, pm;
    for (int k = 0; k < K; ++k) {
      pr.gains.push_back(d.log_uniform(0.1, 100));
      b0.push_back(d.uniform(0, 100e6));
      b1.push_back(d.uniform(0, 100e6));
      p0.push_back(d.uniform(0, 0.02));
      p1.push_back(d.uniform(0, 0.02));
      bm.push_back(0.5 * (b0[k] + b1[k]));
      pm.push_back(0.5 * (p0[k] + p1[k]));
    }
    const double ends = 0.5 * (joint_alloc::objective(pr, b0, p0) + joint_alloc::objective(pr, b1, p1));
    CHECK(joint_alloc::objective(pr, bm, pm) >= ends * (1 - 1e-12));
  }
}
