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
#include <numbers>

#include "hetf/errors.hpp"
#include "hetf/numerics.hpp"

using namespace hetf::numerics;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("finite quadrature of smooth and peaked integrands", "[numerics]") {
  CHECK_THAT(integrate_finite([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value, WithinRel(2.0, 1e-10));
  CHECK_THAT(integrate_finite([](double x) { return 1.0 / (1e-4 + x * x); }, -1.0, 1.0).value,
             WithinRel(2.0 / 1e-2 * std::atan(1.0 / 1e-2), 1e-8));
}

TEST_CASE("semi-infinite quadrature", "[numerics]") {
  CHECK_THAT(integrate_semi_infinite([](double x) { return std::exp(-x); }).value, WithinRel(1.0, 1e-9));
  QuadratureConfig q;
  // 1/x^2 leaves ~2e-6 of its mass past the truncation at unit scale; a wider map keeps it under the cutoff.
  CHECK_THROWS_AS(integrate_from([](double x) { return 1.0 / (x * x); }, 2.0), hetf::NumericalError);
  q.scale = 100.0;
  CHECK_THAT(integrate_from([](double x) { return 1.0 / (x * x); }, 2.0, q).value, WithinRel(0.5, 1e-8));
  q.scale = 1e4;
  CHECK_THAT(integrate_semi_infinite([](double x) { return std::exp(-x / 1e4) / 1e4; }, q).value, WithinRel(1.0, 1e-9));
}

TEST_CASE("semi-infinite quadrature rejects heavy tails", "[numerics]") {
  // 1/(1+x) is not integrable; its mass keeps growing toward the truncation.
  CHECK_THROWS_AS(integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x); }), hetf::NumericalError);
}

TEST_CASE("quadrature reports failure with a best estimate", "[numerics]") {
  QuadratureConfig q;
  q.max_subdivisions = 1;
  q.rel_tol = 1e-14;
  q.abs_tol = 1e-300;
  try {
    integrate_finite([](double x) { return std::sqrt(x) * std::sin(40.0 * x); }, 0.0, 3.0, q);
    FAIL("expected NumericalError");
  } catch (const hetf::NumericalError& e) {
    CHECK(std::isfinite(e.best_estimate));
    CHECK(e.error_bound > 0.0);
  }
}

TEST_CASE("quadrature config validation", "[numerics]") {
  QuadratureConfig q;
  q.tail_cutoff_mass = 1e-3;
  CHECK_THROWS_AS(q.validate(), hetf::DomainError);
  q = {};
  q.abs_tol = 0.0;
  CHECK_THROWS_AS(q.validate(), hetf::DomainError);
}

TEST_CASE("bisection", "[numerics]") {
  CHECK_THAT(bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-14), WithinAbs(std::sqrt(2.0), 1e-14));
  CHECK_THROWS_AS(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-10), hetf::NumericalError);
}

TEST_CASE("KS statistic of exact quantiles is small", "[numerics]") {
  std::vector<double> xs;
  const int n = 1000;
  for (int i = 0; i < n; ++i) xs.push_back((i + 0.5) / n);
  CHECK_THAT(ks_statistic(xs, [](double x) { return x; }), WithinAbs(0.5 / n, 1e-12));
  CHECK_THROWS_AS(ks_statistic({}, [](double x) { return x; }), hetf::DomainError);
}

TEST_CASE("streams are reproducible and distinct", "[numerics]") {
  Stream a(5, 1), b(5, 1), c(5, 2), d(6, 1);
  for (int i = 0; i < 10; ++i) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x > 0.0);
    CHECK(x < 1.0);
  }
  CHECK(a.uniform() != c.uniform());
  CHECK(Stream(5, 1).uniform() != d.uniform());
}

TEST_CASE("gamma variates have the right mean and variance", "[numerics]") {
  for (double shape : {0.3, 1.0, 2.5, 40.0}) {
    Stream s(11, static_cast<std::uint64_t>(shape * 10));
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = s.gamma(shape);
      REQUIRE(x >= 0.0);
      sum += x;
      sum2 += x * x;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    INFO("shape " << shape);
    CHECK_THAT(mean, WithinAbs(shape, 5.0 * std::sqrt(shape / n)));
    CHECK_THAT(var, WithinRel(shape, 0.05));
  }
  Stream s(1, 1);
  CHECK_THROWS_AS(s.gamma(0.0), hetf::DomainError);
}

TEST_CASE("Monte Carlo estimate of a known expectation", "[numerics]") {
  McConfig cfg;
  cfg.samples = 200000;
  auto est = mc_expectation(
      1, [](Stream& s, std::span<double> x) { x[0] = s.uniform(); }, [](std::span<const double> x) { return x[0] * x[0]; },
      cfg);
  CHECK(est.samples == 200000);
  CHECK_THAT(est.std_error, WithinRel(std::sqrt(4.0 / 45.0 / 200000.0), 0.02));
  CHECK_THAT(est.mean, WithinAbs(1.0 / 3.0, 5.0 * est.std_error));
}

TEST_CASE("Monte Carlo results do not depend on thread count", "[numerics]") {
  McConfig cfg;
  cfg.samples = 50001;  // not a multiple of the chunk size
  cfg.chunk_size = 1000;
  auto run = [&](int threads) {
    cfg.threads = threads;
    return mc_expectation_multi(
        2, 2,
        [](Stream& s, std::span<double> x) {
          x[0] = s.normal();
          x[1] = s.gamma(1.5);
        },
        [](std::span<const double> x, std::span<double> out) {
          out[0] = x[0] * x[1];
          out[1] = std::exp(-x[1]);
        },
        cfg);
  };
  const auto one = run(1);
  for (int t : {2, 3, 8}) {
    const auto many = run(t);
    for (int k = 0; k < 2; ++k) {
      CHECK(one[k].mean == many[k].mean);
      CHECK(one[k].std_error == many[k].std_error);
    }
  }
}

TEST_CASE("parallel_for covers every index once and propagates exceptions", "[numerics]") {
  std::vector<int> hits(1000, 0);
  parallel_for(1000, 4, [&](long i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(10, 3, [](long i) { if (i == 7) throw hetf::NumericalError("boom"); }),
                  hetf::NumericalError);
  CHECK(resolve_threads(0) >= 1);
  CHECK(resolve_threads(3) == 3);
}

TEST_CASE("Monte Carlo config validation", "[numerics]") {
  McConfig cfg;
  cfg.samples = 0;
  CHECK_THROWS_AS(cfg.validate(), hetf::DomainError);
}
