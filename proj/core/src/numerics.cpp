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

#include "hetf/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <queue>
#include <string>
#include <thread>

#include "hetf/errors.hpp"

namespace hetf::numerics {

namespace {

// Kronrod 15-point abscissae and weights; Gauss 7-point weights on the odd abscissae.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const RealFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = fc * kWgk[7];
  double g = fc * kWg[3];
  double abs_sum = std::fabs(k);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    k += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) g += kWg[j / 2] * (f1 + f2);
  }
  k *= h;
  g *= h;
  abs_sum *= std::fabs(h);
  double err = std::fabs(k - g);
  err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * abs_sum);
  return {a, b, k, err};
}

QuadResult adaptive(const RealFn& f, double a, double b, const QuadratureConfig& cfg) {
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  heap.push(first);
  double total = first.value;
  double err = first.error;
  int evals = 15;
  int splits = 0;
  while (err > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total))) {
    if (splits >= cfg.max_subdivisions || !std::isfinite(total))
      throw NumericalError("quadrature: tolerance not reached after " + std::to_string(splits) +
                               " subdivisions",
                           total, err);
    Segment s = heap.top();
    heap.pop();
    const double mid = 0.5 * (s.a + s.b);
    Segment l = gk15(f, s.a, mid);
    Segment r = gk15(f, mid, s.b);
    evals += 30;
    ++splits;
    total += l.value + r.value - s.value;
    err += l.error + r.error - s.error;
    heap.push(l);
    heap.push(r);
  }
  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {total, err, evals};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0 && rel_tol > 0.0)) throw DomainError("QuadratureConfig: tolerances must be > 0");
  if (max_subdivisions < 1) throw DomainError("QuadratureConfig: max_subdivisions must be >= 1");
  if (!(tail_cutoff_mass > 0.0 && tail_cutoff_mass <= 1e-6))
    throw DomainError("QuadratureConfig: tail_cutoff_mass must lie in (0, 1e-6]");
  if (!(scale > 0.0)) throw DomainError("QuadratureConfig: scale must be > 0");
}

QuadResult integrate_finite(const RealFn& f, double a, double b, const QuadratureConfig& cfg) {
  cfg.validate();
  if (a == b) return {};
  return adaptive(f, a, b, cfg);
}

QuadResult integrate_from(const RealFn& f, double a, const QuadratureConfig& cfg) {
  cfg.validate();
  const double s = cfg.scale;
  auto g = [&](double t) {
    const double u = 1.0 - t;
    return f(a + s * t / u) * s / (u * u);
  };
  const double t_cut = 1.0 - cfg.tail_cutoff_mass;
  QuadResult body = adaptive(g, 0.0, t_cut, cfg);
  const Segment tail = gk15(g, t_cut, 1.0);
  const double total = body.value + tail.value;
  if (std::fabs(tail.value) > cfg.tail_cutoff_mass * std::fabs(total) + cfg.abs_tol)
    throw NumericalError("quadrature: integrand mass beyond the truncation exceeds tail_cutoff_mass", total,
                         body.abs_error + std::fabs(tail.value));
  return {total, body.abs_error + tail.error, body.evaluations + 15};
}

double bisect(const RealFn& f, double lo, double hi, double tol, int max_iter) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!(flo * fhi < 0.0)) throw NumericalError("bisect: no sign change on the bracket");
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double ks_statistic(std::vector<double> samples, const RealFn& cdf) {
  if (samples.empty()) throw DomainError("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double F = cdf(samples[i]);
    d = std::max({d, (i + 1) / n - F, F - i / n});
  }
  return d;
}

Stream::Stream(std::uint64_t seed, std::uint64_t stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32)};
  eng_.seed(seq);
}

double Stream::uniform() {
  // 53 random bits, offset by half an ulp so 0 is never returned.
  return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
}

double Stream::normal() { return nd_(eng_); }

double Stream::gamma(double shape) {
  if (!(shape > 0.0)) throw DomainError("gamma variate: shape must be > 0");
  if (shape < 1.0) return gamma(shape + 1.0) * std::pow(uniform(), 1.0 / shape);
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

void McConfig::validate() const {
  if (samples < 1) throw DomainError("McConfig: samples must be >= 1");
  if (chunk_size < 1) throw DomainError("McConfig: chunk_size must be >= 1");
  if (threads < 0) throw DomainError("McConfig: threads must be >= 0");
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(long n, int threads, const std::function<void(long)>& body) {
  const int workers = static_cast<int>(std::min<long>(resolve_threads(threads), std::max(1L, n)));
  if (workers <= 1) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (;;) {
      const long i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

struct Moments {
  double n = 0.0, mean = 0.0, m2 = 0.0;
  void add(double x) {
    n += 1.0;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }
  void merge(const Moments& o) {
    if (o.n == 0.0) return;
    const double tot = n + o.n;
    const double d = o.mean - mean;
    mean += d * o.n / tot;
    m2 += o.m2 + d * d * n * o.n / tot;
    n = tot;
  }
};

}  // namespace

std::vector<McEstimate> mc_expectation_multi(int dim, int outputs, const Sampler& sampler,
                                             const MultiIntegrand& g, const McConfig& cfg) {
  cfg.validate();
  if (dim < 1 || outputs < 1) throw DomainError("mc_expectation: dim and outputs must be >= 1");
  const long chunks = (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;
  std::vector<std::vector<Moments>> per_chunk(chunks, std::vector<Moments>(outputs));
  parallel_for(chunks, cfg.threads, [&](long c) {
    Stream stream(cfg.seed, static_cast<std::uint64_t>(c));
    std::vector<double> point(dim), out(outputs);
    const long begin = c * cfg.chunk_size;
    const long end = std::min(cfg.samples, begin + cfg.chunk_size);
    auto& acc = per_chunk[c];
    for (long i = begin; i < end; ++i) {
      sampler(stream, point);
      g(point, out);
      for (int k = 0; k < outputs; ++k) acc[k].add(out[k]);
    }
  });
  std::vector<Moments> total(outputs);
  for (const auto& chunk : per_chunk)
    for (int k = 0; k < outputs; ++k) total[k].merge(chunk[k]);
  std::vector<McEstimate> result(outputs);
  for (int k = 0; k < outputs; ++k) {
    const double var = total[k].n > 1.0 ? total[k].m2 / (total[k].n - 1.0) : 0.0;
    result[k] = {total[k].mean, std::sqrt(var / total[k].n), cfg.samples};
  }
  return result;
}

McEstimate mc_expectation(int dim, const Sampler& sampler,
                          const std::function<double(std::span<const double>)>& g,
                          const McConfig& cfg) {
  return mc_expectation_multi(
      dim, 1, sampler, [&](std::span<const double> x, std::span<double> out) { out[0] = g(x); }, cfg)[0];
}

}  // namespace hetf::numerics
