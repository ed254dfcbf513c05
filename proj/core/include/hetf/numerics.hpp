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

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace hetf::numerics {

using RealFn = std::function<double(double)>;

// ---- Quadrature ---------------------------------------------------------

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;
  // Largest fraction of the integral allowed in the unmapped tail t in [1 - c, 1).
  double tail_cutoff_mass = 1e-6;
  // Length scale of the map h = a + scale * t / (1 - t). Put it near the bulk of the mass.
  double scale = 1.0;

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
};

// Adaptive Gauss-Kronrod (7/15) on a finite interval [a, b].
QuadResult integrate_finite(const RealFn& f, double a, double b, const QuadratureConfig& cfg = {});

// Integral of f over [a, inf) via h = a + s t/(1-t), t in [0, 1), followed by adaptive
// subdivision. The last segment [1 - tail_cutoff_mass, 1) is estimated separately; if it holds
// more than tail_cutoff_mass of the total the result is rejected.
// Throws NumericalError (with best estimate and bound) when the tolerance is not met.
QuadResult integrate_from(const RealFn& f, double a, const QuadratureConfig& cfg = {});

inline QuadResult integrate_semi_infinite(const RealFn& f, const QuadratureConfig& cfg = {}) {
  return integrate_from(f, 0.0, cfg);
}

// ---- Root finding -------------------------------------------------------

// Root of a continuous f on [lo, hi] with a sign change; |returned - root| <= tol.
double bisect(const RealFn& f, double lo, double hi, double tol, int max_iter = 400);

// Kolmogorov-Smirnov distance between the empirical CDF of `samples` and `cdf`.
double ks_statistic(std::vector<double> samples, const RealFn& cdf);

// ---- Random streams -----------------------------------------------------

// Per-chunk stream. Seeds are derived from (seed, stream id) through std::seed_seq, so each
// chunk of a Monte Carlo run is reproducible independently of which thread executes it.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t stream_id);

  double uniform();          // (0, 1)
  double normal();           // N(0, 1)
  double gamma(double shape);  // Gamma(shape, 1), Marsaglia-Tsang, boosted for shape < 1
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> nd_;
};

// ---- Monte Carlo --------------------------------------------------------

struct McConfig {
  std::uint64_t seed = 1;
  long samples = 1'000'000;
  long chunk_size = 4096;
  int threads = 0;  // 0: hardware concurrency

  void validate() const;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long samples = 0;
};

// Draws a point of the given dimension.
using Sampler = std::function<void(Stream&, std::span<double>)>;
// Evaluates all outputs at a point.
using MultiIntegrand = std::function<void(std::span<const double>, std::span<double>)>;

// Sample mean and standard error of every output of g. Bit-identical for identical
// (seed, samples, chunk_size), regardless of thread count.
std::vector<McEstimate> mc_expectation_multi(int dim, int outputs, const Sampler& sampler,
                                             const MultiIntegrand& g, const McConfig& cfg);

McEstimate mc_expectation(int dim, const Sampler& sampler,
                          const std::function<double(std::span<const double>)>& g,
                          const McConfig& cfg);

// Runs body(i) for i in [0, n) on up to `threads` workers (0: hardware concurrency).
// The caller owns determinism: body must write only to slot i.
void parallel_for(long n, int threads, const std::function<void(long)>& body);

int resolve_threads(int threads);

}  // namespace hetf::numerics
