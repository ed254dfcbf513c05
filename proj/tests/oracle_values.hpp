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
// Generated by tests/oracles/generate_oracles.py (mpmath, 40 digits). Do not edit.
#pragma once

namespace oracle {

struct Point1 { double x, value; };
struct Point4 { double a, b, c, z, value; };
struct Meijer { double x, s1, s2, t1, t2, value; };

inline constexpr Point1 kLnGamma[] = {
    {0.001, 6.907178885383853682512345},
    {0.5, 0.5723649429247000870717137},
    {1.5, -0.1207822376352452223455184},
    {10, 12.80182748008146961120772},
    {123.456, 469.6055471299294687300692},
    {9999.5, 82095.11236375763922815748},
};

inline constexpr Point4 kHyp2f1[] = {
    {0.5, 1.5, 2.5, -0.7, 0.8447658818688253026070805},
    {3.2, 1.7, 4.1, -5, 0.07576675717479849837543083},
    {24, 16, 9.5, -0.3, -1.069948809669937029656174e-5},
    {1.5, 2.5, 3.5, -40, 0.00860758028321375253299069},
    {48, 24, 24.5, -2, 6.472219594750120348925815e-22},
    {0.25, 7.5, 1.25, -0.999, 0.559433077123881918927708},
};

inline constexpr Meijer kMeijer[] = {
    {0.5, -3, 0, 1, 0, 1.580246913580246913580247},
    {1.7, -24, 0, 15, 0, 3.249139299534277969991944e+32},
    {0.05, -2.5, 0, 0.5, 0, 1.103771195335173157559251},
    {0.8, -2, -3, -1, -1.5, 0.2108348316480445701165543},
    {12, -5.5, -2.5, -1, -7, 2.765015355345875316015965e-5},
    {0.3, -1.25, -0.75, -1, -2.5, 2.516044736978752639537985},
};

// Composite density, K=3, N=8, m=m_s=2, gbar=5, L=300 m, alpha=0.5.
inline constexpr Point1 kCompositePdf[] = {
    {0.5, 3.169446943113846043956161e-25},
    {1, 8.579412836729412955666984e-14},
    {2, 0.0001346775531103312763795513},
    {4, 70.85561080815412933451386},
    {8, 987.9649847469867958792001},
};

// Exact threshold (unclamped balance) and ergodic capacity, Pbar=0.5 W, N0=1e-12, B=200 MHz.
inline constexpr double kThresholdExact = 1.591004324867966828235014;
inline constexpr double kCapacityP1 = 2.205811902660688530285656e+12;

// Relay capacity, K=1, m=m_s=2, gbar=1, P_S=0.1 W, P_PA=5 W, d_sr=20, d_rd=15, alpha=0.5.
inline constexpr double kRelayCapacityK1 = 7.765049834634028770939859e+8;

}  // namespace oracle
