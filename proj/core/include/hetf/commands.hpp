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

// Subcommands of the hetf tool. Each writes one CSV table; run() adds file handling, the
// effective-config sidecar and exit codes.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hetf/config.hpp"

namespace hetf::commands {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kConfigError = 2,
  kNumericalFailure = 3,
};

struct RunOptions {
  int threads = 0;  // worker threads for Monte Carlo and sweeps; never affects results
};

// Columns: sweep_name, sweep_value, h, density.
void cmd_pdf(const config::Config& cfg, std::ostream& out, const RunOptions& opt = {});

// Policy grid (m, m_s, h, threshold, power) and the capacity table
// (m, m_s, avg_power, threshold, capacity, baseline_threshold, baseline_capacity, baseline_power).
void cmd_power_alloc(const config::Config& cfg, std::ostream& grid, std::ostream& capacity,
                     const RunOptions& opt = {});

// Columns: kind, iteration, B_1..B_K, P_1..P_K, capacity, converged, kkt_max.
// kind is trace for every iterate, then final (feasibility-restored) and fixed (equal bandwidths).
void cmd_joint_alloc(const config::Config& cfg, std::ostream& out, const RunOptions& opt = {});

// Columns: K, N, avg_power, source_power, relay/irs capacity, energy efficiency and standard errors.
void cmd_energy(const config::Config& cfg, std::ostream& out, const RunOptions& opt = {});

struct Check {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

std::vector<Check> validation_checks(const config::Config& cfg, const RunOptions& opt = {});

// Columns: suite, check, measured, tolerance, pass. Returns true when every check passes.
bool cmd_validate(const config::Config& cfg, std::ostream& out, const RunOptions& opt = {});

struct Invocation {
  std::string subcommand;
  std::optional<std::filesystem::path> config;
  std::filesystem::path out;
  std::optional<std::uint64_t> seed;
  RunOptions options;
};

// Path of a companion file: out with its extension replaced by `suffix`.
std::filesystem::path companion(const std::filesystem::path& out, const std::string& suffix);

// Loads the config, applies overrides, runs the subcommand and writes <out> plus
// <out stem>.config.txt (and <out stem>.capacity.csv for power-alloc). Errors go to `err`.
int run(const Invocation& inv, std::ostream& err);

}  // namespace hetf::commands
