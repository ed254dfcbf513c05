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

// Flat key=value experiment configuration. Every key has a built-in default, so an empty
// file describes the reference operating point. Units are SI: Hz, W, m.
//
// Syntax: one `key = value` per line, `#` starts a comment, list values are comma separated.
// Per-subchannel lists (m, m_s, dist_sr, dist_rd, mean_gain) hold one value for all
// subchannels or exactly K values.

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hetf/channel.hpp"
#include "hetf/energy.hpp"
#include "hetf/joint_alloc.hpp"
#include "hetf/numerics.hpp"
#include "hetf/power_alloc.hpp"

namespace hetf::config {

enum class Kind { kReal, kInteger, kUnsigned, kRealList, kIntegerList, kChoice };

struct KeySpec {
  std::string_view name;
  Kind kind;
  std::string_view default_value;
  std::string_view choices;  // '|' separated, kChoice only
  std::string_view help;
};

const std::vector<KeySpec>& keys();

class Config {
 public:
  Config();  // all defaults

  static Config parse(std::istream& in, std::string_view source = "<config>");
  static Config load(const std::filesystem::path& path);

  // Throws ConfigError for unknown keys or values that do not parse as the key's kind.
  void set(std::string_view key, std::string_view value);

  double real(std::string_view key) const;
  long integer(std::string_view key) const;
  std::uint64_t unsigned_integer(std::string_view key) const;
  std::vector<double> reals(std::string_view key) const;
  std::vector<long> integers(std::string_view key) const;
  const std::string& text(std::string_view key) const;

  // Effective configuration, one `key = value` line per key in sorted order.
  std::string echo() const;

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

// ---- Builders -----------------------------------------------------------

// Subchannel list for K subchannels with N reflectors each.
std::vector<channel::SubchannelParams> subchannels(const Config& c, int K, int N);
channel::ChannelParams channel_params(const Config& c);

power_alloc::PowerBudget power_budget(const Config& c);
power_alloc::ThresholdMethod threshold_method(const Config& c);

joint_alloc::JointProblem joint_problem(const Config& c);
joint_alloc::SolverConfig solver_config(const Config& c);

numerics::McConfig mc_config(const Config& c);

energy::CircuitPowerModel circuit_model(const Config& c);
energy::NodePowerModel node_model(const Config& c, int n_pins);

// start..stop with `points` values; `log` spaces them geometrically.
std::vector<double> grid(double start, double stop, long points, bool log);

}  // namespace hetf::config
