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

// hetf <subcommand> --config <path> --out <path> [--seed <u64>] [--threads <n>]

#include <CLI11.hpp>

#include <iostream>

#include "hetf/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Heterogeneous F composite fading channel: densities, power allocation, energy efficiency"};
  app.require_subcommand(1);

  hetf::commands::Invocation inv;
  std::string config_path;
  std::uint64_t seed = 0;
  int threads = 0;

  const std::pair<const char*, const char*> subcommands[] = {
      {"pdf", "composite density curves over a parameter sweep"},
      {"power-alloc", "water-filling policy grids and capacity against the exponential baseline"},
      {"joint-alloc", "joint bandwidth/power allocation trace and fixed-bandwidth comparison"},
      {"energy", "relay vs IRS energy-efficiency sweep"},
      {"validate", "numerical oracle suites; exit 1 on any failure"},
  };
  for (const auto& [name, help] : subcommands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "key=value file; omitted keys take their defaults")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", inv.out, "output CSV path")->required();
    sub->add_option("--seed", seed, "overrides the seed key");
    sub->add_option("--threads", threads, "worker threads (0: all cores); results do not depend on it")
        ->check(CLI::NonNegativeNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hetf::commands::kConfigError;
  }

  auto* sub = app.get_subcommands().front();
  inv.subcommand = sub->get_name();
  if (!config_path.empty()) inv.config = config_path;
  if (sub->count("--seed") > 0) inv.seed = seed;
  inv.options.threads = threads;
  return hetf::commands::run(inv, std::cerr);
}
