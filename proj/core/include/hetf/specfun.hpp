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

// Scalar special functions. All functions are pure and thread-safe.

namespace hetf::specfun {

// Series controls for gauss_2f1.
inline constexpr long kHyp2f1TermCap = 100000;
inline constexpr double kHyp2f1RelStop = 1e-16;

// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double ln_gamma(double x);

// ln B(a, b) and B(a, b) for a, b > 0.
double ln_beta(double a, double b);
double beta(double a, double b);

// Gauss hypergeometric 2F1(a, b; c; z) for z <= 0.
// Pfaff-transforms to w = z/(z-1) in [0, 1) and sums the power series in w.
// Throws DomainError for z > 0 or c a non-positive integer,
// NumericalError if the series has not converged after kHyp2f1TermCap terms.
double gauss_2f1(double a, double b, double c, double z);

// ln 2F1(a, b; c; z) for z <= 0 when the value is positive. The (1-z)^(-a) Pfaff
// factor is kept in log form, so large a with large |z| stays finite.
double ln_gauss_2f1(double a, double b, double c, double z);

// Meijer G^{1,2}_{2,2}(x | s1, s2 ; t1, t2) for x > 0, restricted to two patterns:
//   density pattern   (-A, 0 ; B-1, 0),     A, B > 0
//   hypergeometric    (-al, -be ; -1, -ga), al, be, ga > 0
// Both are evaluated through 2F1(al, be; ga; -x) * Gamma(al) Gamma(be) / (Gamma(ga) x)
// after shifting the density pattern by x^B. Throws DomainError otherwise.
double meijer_g_2212(double x, double s1, double s2, double t1, double t2);

// Natural log of meijer_g_2212 for x > 0 and a positive value, for arguments where the
// value itself under- or overflows (large shapes).
double ln_meijer_g_2212(double x, double s1, double s2, double t1, double t2);

// Gamma(a-1) Gamma(b+1) / (Gamma(a) Gamma(b)) = b / (a-1), for a > 1, b > 0.
double gamma_ratio_epsilon(double a, double b);

}  // namespace hetf::specfun
