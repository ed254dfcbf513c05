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

#include "hetf/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <string>

#include "hetf/errors.hpp"

namespace hetf::specfun {

namespace {

bool is_nonpositive_integer(double c) { return c <= 0.0 && std::floor(c) == c; }

// Sum of the Pfaff-transformed series 2F1(a, c-b; c; w), w in [0, 1).
long double pfaff_series(double a, double b, double c, double w) {
  const long double cb = static_cast<long double>(c) - b;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (long n = 0; n < kHyp2f1TermCap; ++n) {
    const long double ratio = (a + n) * (cb + n) / ((c + n) * (n + 1.0L)) * w;
    term *= ratio;
    sum += term;
    if (term == 0.0L) return sum;
    const long double r = std::fabs(ratio);
    const long double tail = r < 1.0L ? std::fabs(term) * r / (1.0L - r) : INFINITY;
    if (std::fabs(term) <= kHyp2f1RelStop * std::fabs(sum) &&
        tail <= kHyp2f1RelStop * std::fabs(sum))
      return sum;
  }
  throw NumericalError("gauss_2f1: series did not converge within " + std::to_string(kHyp2f1TermCap) +
                           " terms",
                       static_cast<double>(sum), static_cast<double>(std::fabs(term)));
}

void check_2f1_args(double c, double z) {
  if (!(z <= 0.0)) throw DomainError("gauss_2f1: requires z <= 0");
  if (is_nonpositive_integer(c)) throw DomainError("gauss_2f1: c is a non-positive integer");
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("ln_gamma: requires x > 0");
  return boost::math::lgamma(x);
}

double ln_beta(double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("beta: requires a, b > 0");
  return ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b);
}

double beta(double a, double b) { return std::exp(ln_beta(a, b)); }

double gauss_2f1(double a, double b, double c, double z) {
  check_2f1_args(c, z);
  if (z == 0.0) return 1.0;
  const double w = z / (z - 1.0);
  const long double s = pfaff_series(a, b, c, w);
  return static_cast<double>(std::pow(1.0L - z, -static_cast<long double>(a)) * s);
}

double ln_gauss_2f1(double a, double b, double c, double z) {
  check_2f1_args(c, z);
  if (z == 0.0) return 0.0;
  const double w = z / (z - 1.0);
  const long double s = pfaff_series(a, b, c, w);
  if (!(s > 0.0L)) throw DomainError("ln_gauss_2f1: value is not positive");
  return -a * std::log1p(-z) + static_cast<double>(std::log(s));
}

namespace {

enum class Pattern { kDensity, kHypergeometric };

// Recovers (al, be, ga) of 2F1(al, be; ga; -x) and the power of x multiplying
// Gamma(al) Gamma(be) / Gamma(ga) 2F1 in the G value.
Pattern classify(double s1, double s2, double t1, double t2, double& al, double& be, double& ga,
                 double& power) {
  if (s2 == 0.0 && t2 == 0.0) {
    const double A = -s1;
    const double B = t1 + 1.0;
    if (!(A > 0.0 && B > 0.0)) throw DomainError("meijer_g_2212: density pattern needs A, B > 0");
    al = A + B;
    be = B;
    ga = B;
    power = B - 1.0;
    return Pattern::kDensity;
  }
  if (t1 == -1.0) {
    al = -s1;
    be = -s2;
    ga = -t2;
    if (!(al > 0.0 && be > 0.0 && ga > 0.0))
      throw DomainError("meijer_g_2212: hypergeometric pattern needs positive parameters");
    power = -1.0;
    return Pattern::kHypergeometric;
  }
  throw DomainError("meijer_g_2212: unsupported parameter pattern");
}

}  // namespace

double ln_meijer_g_2212(double x, double s1, double s2, double t1, double t2) {
  double al, be, ga, power;
  classify(s1, s2, t1, t2, al, be, ga, power);
  if (!(x > 0.0)) throw DomainError("ln_meijer_g_2212: requires x > 0");
  return power * std::log(x) + ln_gamma(al) + ln_gamma(be) - ln_gamma(ga) + ln_gauss_2f1(al, be, ga, -x);
}

double meijer_g_2212(double x, double s1, double s2, double t1, double t2) {
  double al, be, ga, power;
  const Pattern pat = classify(s1, s2, t1, t2, al, be, ga, power);
  if (x < 0.0 || std::isnan(x)) throw DomainError("meijer_g_2212: requires x >= 0");
  if (x == 0.0) {
    if (pat == Pattern::kHypergeometric)
      throw DomainError("meijer_g_2212: hypergeometric pattern is singular at x = 0");
    // x^(B-1) Gamma(A+B) near the origin.
    if (power > 0.0) return 0.0;
    if (power == 0.0) return std::exp(ln_gamma(al));
    return INFINITY;
  }
  const double ln_scale = power * std::log(x) + ln_gamma(al) + ln_gamma(be) - ln_gamma(ga);
  try {
    return std::exp(ln_scale + ln_gauss_2f1(al, be, ga, -x));
  } catch (const DomainError&) {
    // Non-positive 2F1 value: no log form.
    return gauss_2f1(al, be, ga, -x) * std::exp(ln_scale);
  }
}

double gamma_ratio_epsilon(double a, double b) {
  if (!(a > 1.0)) throw DomainError("gamma_ratio_epsilon: requires a > 1");
  if (!(b > 0.0)) throw DomainError("gamma_ratio_epsilon: requires b > 0");
  return b / (a - 1.0);
}

}  // namespace hetf::specfun
