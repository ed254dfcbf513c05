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

#include "hetf/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hetf/errors.hpp"

namespace hetf::config {

namespace {

using K = Kind;

const std::vector<KeySpec> kKeys = {
    // Channel
    {"K", K::kInteger, "3", "", "number of subchannels"},
    {"N", K::kInteger, "8", "", "reflectors per subchannel"},
    {"m", K::kRealList, "2", "", "fading parameter per subchannel"},
    {"m_s", K::kRealList, "2", "", "shadowing parameter per subchannel"},
    {"alpha", K::kReal, "0.5", "", "path-loss exponent"},
    {"dist_sr", K::kRealList, "20", "", "source-to-node distance, m"},
    {"dist_rd", K::kRealList, "15", "", "node-to-user distance, m"},
    {"mean_gain", K::kRealList, "5", "", "IRS subchannel gain scale"},
    {"relay_mean_gain", K::kReal, "1", "", "relay hop gain scale"},
    // Budgets
    {"avg_power", K::kReal, "0.5", "", "average transmit power, W"},
    {"peak_power", K::kReal, "1", "", "peak transmit power, W"},
    {"noise_psd", K::kReal, "1e-12", "", "noise spectral density, W/Hz"},
    {"bandwidth", K::kReal, "200e6", "", "total bandwidth, Hz"},
    {"threshold_method", K::kChoice, "closed_form", "closed_form|exact", "water-filling threshold"},
    // Joint allocation
    {"step", K::kReal, "0.01", "", "step size"},
    {"stop_delta", K::kReal, "0.01", "", "stopping threshold, bit/s"},
    {"max_iter", K::kInteger, "8000", "", "iteration cap"},
    {"joint_gains", K::kRealList, "5,5,5", "", "instantaneous gains"},
    {"joint_power", K::kReal, "0.03", "", "total power, W"},
    {"joint_init", K::kChoice, "fixed_bandwidth_kkt", "fixed_bandwidth_kkt|uniform", "initial point"},
    {"multiplier_rule", K::kChoice, "projected_descent", "projected_descent|ascent", "mu/lambda update sign"},
    {"bandwidth_unit", K::kReal, "5e6", "", "solver bandwidth unit, Hz"},
    {"power_unit", K::kReal, "1e-3", "", "solver power unit, W"},
    // Monte Carlo
    {"seed", K::kUnsigned, "1", "", "base seed"},
    {"samples", K::kInteger, "100000", "", "samples per estimate"},
    {"chunk_size", K::kInteger, "4096", "", "samples per seeded chunk"},
    // pdf
    {"sweep_name", K::kChoice, "K", "K|N|m|m_s|alpha", "swept parameter"},
    {"sweep_start", K::kReal, "1", "", ""},
    {"sweep_stop", K::kReal, "4", "", ""},
    {"sweep_points", K::kInteger, "4", "", ""},
    {"h_points", K::kInteger, "200", "", "gain grid size"},
    {"h_max", K::kReal, "0", "", "gain grid end; 0 picks the 99.5% quantile"},
    // power-alloc
    {"pa_m_values", K::kRealList, "1,5,10", "", ""},
    {"pa_ms_values", K::kRealList, "0.5,1", "", ""},
    {"pa_avg_powers", K::kRealList, "0.01,0.0316227766017,0.1,0.316227766017,1", "", ""},
    // energy
    {"ee_power_start", K::kReal, "0.01", "", "average-power sweep start, W"},
    {"ee_power_stop", K::kReal, "1", "", ""},
    {"ee_power_points", K::kInteger, "10", "", "log-spaced points"},
    {"ee_k_values", K::kIntegerList, "3", "", ""},
    {"ee_n_values", K::kIntegerList, "4,8,16", "", ""},
    {"circuit_model", K::kChoice, "aggregate", "aggregate|components", "circuit power source"},
    {"p_c", K::kReal, "3", "", "aggregate circuit power, W"},
    {"p_dac", K::kReal, "0", "", ""},
    {"p_mix", K::kReal, "0.0303", "", ""},
    {"p_filt", K::kReal, "2.5", "", ""},
    {"p_filr", K::kReal, "2.5", "", ""},
    {"p_syn", K::kReal, "0.05", "", ""},
    {"p_lna", K::kReal, "0.02", "", ""},
    {"p_ifa", K::kReal, "0.003", "", ""},
    {"p_adc", K::kReal, "0", "", ""},
    {"m_t", K::kInteger, "1", "", ""},
    {"m_r", K::kInteger, "1", "", ""},
    {"p_fpga_relay", K::kReal, "1", "", ""},
    {"p_pa", K::kReal, "5", "", ""},
    {"p_fpga_irs", K::kReal, "0.5", "", ""},
    {"p_pin", K::kReal, "0.0085", "", ""},
    {"eta", K::kReal, "0.8", "", "power conversion efficiency"},
    // validate
    {"validate_tolerance_scale", K::kReal, "1", "", "multiplies every validation tolerance"},
    {"validate_samples", K::kInteger, "200000", "", "Monte Carlo samples per validation check"},
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
bool parse_number(const std::string& s, T& out) {
  if (s.empty()) return false;
  const char* b = s.data();
  if (*b == '+') ++b;
  const auto [p, ec] = std::from_chars(b, s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

double to_real(std::string_view key, const std::string& s) {
  double v = 0.0;
  if (!parse_number(s, v) || !std::isfinite(v))
    throw ConfigError("config: '" + std::string(key) + "' expects a finite real, got '" + s + "'");
  return v;
}

long to_integer(std::string_view key, const std::string& s) {
  long v = 0;
  if (!parse_number(s, v)) throw ConfigError("config: '" + std::string(key) + "' expects an integer, got '" + s + "'");
  return v;
}

const KeySpec& spec_of(std::string_view key) {
  for (const auto& k : kKeys)
    if (k.name == key) return k;
  throw ConfigError("config: unknown key '" + std::string(key) + "'");
}

void check_value(const KeySpec& k, const std::string& v) {
  switch (k.kind) {
    case Kind::kReal:
      to_real(k.name, v);
      break;
    case Kind::kInteger:
      to_integer(k.name, v);
      break;
    case Kind::kUnsigned: {
      std::uint64_t u = 0;
      if (!parse_number(v, u))
        throw ConfigError("config: '" + std::string(k.name) + "' expects an unsigned integer, got '" + v + "'");
      break;
    }
    case Kind::kRealList:
      for (const auto& item : split(v, ',')) to_real(k.name, item);
      break;
    case Kind::kIntegerList:
      for (const auto& item : split(v, ',')) to_integer(k.name, item);
      break;
    case Kind::kChoice: {
      const auto opts = split(k.choices, '|');
      if (std::find(opts.begin(), opts.end(), v) == opts.end())
        throw ConfigError("config: '" + std::string(k.name) + "' must be one of " + std::string(k.choices) +
                          ", got '" + v + "'");
      break;
    }
  }
}

// One value per subchannel: broadcast a single entry or require exactly K.
std::vector<double> per_subchannel(const Config& c, std::string_view key, int K) {
  auto v = c.reals(key);
  if (v.size() == 1) return std::vector<double>(K, v.front());
  if (static_cast<int>(v.size()) != K)
    throw ConfigError("config: '" + std::string(key) + "' needs 1 or K=" + std::to_string(K) + " values");
  return v;
}

int checked_int(long v, std::string_view key) {
  if (v < 1 || v > 1'000'000'000) throw ConfigError("config: '" + std::string(key) + "' out of range");
  return static_cast<int>(v);
}

}  // namespace

const std::vector<KeySpec>& keys() { return kKeys; }

Config::Config() {
  for (const auto& k : kKeys) values_.emplace(std::string(k.name), std::string(k.default_value));
}

Config Config::parse(std::istream& in, std::string_view source) {
  Config c;
  std::map<std::string, int, std::less<>> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const std::string where = std::string(source) + ":" + std::to_string(lineno) + ": ";
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (auto [it, fresh] = seen.emplace(key, lineno); !fresh)
      throw ConfigError(where + "duplicate key '" + key + "' (first on line " + std::to_string(it->second) + ")");
    try {
      c.set(key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
  return c;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path.string() + "'");
  return parse(in, path.string());
}

void Config::set(std::string_view key, std::string_view value) {
  const KeySpec& k = spec_of(key);
  std::string v = trim(value);
  if (k.kind == Kind::kRealList || k.kind == Kind::kIntegerList) {
    // Normalize list spacing so the echo is canonical.
    std::string joined;
    for (const auto& item : split(v, ',')) joined += (joined.empty() ? "" : ",") + item;
    v = joined;
  }
  check_value(k, v);
  values_.find(key)->second = v;
}

const std::string& Config::text(std::string_view key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("config: unknown key '" + std::string(key) + "'");
  return it->second;
}

double Config::real(std::string_view key) const { return to_real(key, text(key)); }
long Config::integer(std::string_view key) const { return to_integer(key, text(key)); }

std::uint64_t Config::unsigned_integer(std::string_view key) const {
  std::uint64_t u = 0;
  parse_number(text(key), u);
  return u;
}

std::vector<double> Config::reals(std::string_view key) const {
  std::vector<double> out;
  for (const auto& item : split(text(key), ',')) out.push_back(to_real(key, item));
  return out;
}

std::vector<long> Config::integers(std::string_view key) const {
  std::vector<long> out;
  for (const auto& item : split(text(key), ',')) out.push_back(to_integer(key, item));
  return out;
}

std::string Config::echo() const {
  std::ostringstream os;
  for (const auto& [k, v] : values_) os << k << " = " << v << '\n';
  return os.str();
}

std::vector<channel::SubchannelParams> subchannels(const Config& c, int K, int N) {
  const auto m = per_subchannel(c, "m", K);
  const auto ms = per_subchannel(c, "m_s", K);
  const auto sr = per_subchannel(c, "dist_sr", K);
  const auto rd = per_subchannel(c, "dist_rd", K);
  const auto g = per_subchannel(c, "mean_gain", K);
  std::vector<channel::SubchannelParams> out(K);
  for (int k = 0; k < K; ++k) {
    out[k].fading = {m[k], ms[k], g[k]};
    out[k].n_reflectors = N;
    out[k].dist_sr = sr[k];
    out[k].dist_rd = rd[k];
    out[k].pathloss_exp = c.real("alpha");
  }
  return out;
}

channel::ChannelParams channel_params(const Config& c) {
  return channel::ChannelParams::from_subchannels(
      subchannels(c, checked_int(c.integer("K"), "K"), checked_int(c.integer("N"), "N")));
}

power_alloc::PowerBudget power_budget(const Config& c) {
  power_alloc::PowerBudget pb{c.real("avg_power"), c.real("peak_power"), c.real("noise_psd"), c.real("bandwidth")};
  pb.validate();
  return pb;
}

power_alloc::ThresholdMethod threshold_method(const Config& c) {
  return c.text("threshold_method") == "exact" ? power_alloc::ThresholdMethod::kExact
                                               : power_alloc::ThresholdMethod::kClosedForm;
}

joint_alloc::JointProblem joint_problem(const Config& c) {
  joint_alloc::JointProblem pr;
  pr.gains = c.reals("joint_gains");
  pr.total_bandwidth = c.real("bandwidth");
  pr.total_power = c.real("joint_power");
  pr.noise_psd = c.real("noise_psd");
  pr.validate();
  return pr;
}

joint_alloc::SolverConfig solver_config(const Config& c) {
  joint_alloc::SolverConfig s;
  s.step = c.real("step");
  s.stop_delta = c.real("stop_delta");
  s.max_iter = checked_int(c.integer("max_iter"), "max_iter");
  s.bandwidth_unit = c.real("bandwidth_unit");
  s.power_unit = c.real("power_unit");
  s.init = c.text("joint_init") == "uniform" ? joint_alloc::Initialization::kUniform
                                              : joint_alloc::Initialization::kFixedBandwidthKkt;
  s.rule = c.text("multiplier_rule") == "ascent" ? joint_alloc::MultiplierRule::kAscent
                                                      : joint_alloc::MultiplierRule::kProjectedDescent;
  s.validate();
  return s;
}

numerics::McConfig mc_config(const Config& c) {
  numerics::McConfig mc;
  mc.seed = c.unsigned_integer("seed");
  mc.samples = c.integer("samples");
  mc.chunk_size = c.integer("chunk_size");
  mc.validate();
  return mc;
}

energy::CircuitPowerModel circuit_model(const Config& c) {
  energy::CircuitPowerModel m;
  m.p_dac = c.real("p_dac");
  m.p_mix = c.real("p_mix");
  m.p_filt = c.real("p_filt");
  m.p_filr = c.real("p_filr");
  m.p_syn = c.real("p_syn");
  m.p_lna = c.real("p_lna");
  m.p_ifa = c.real("p_ifa");
  m.p_adc = c.real("p_adc");
  m.m_t = static_cast<int>(c.integer("m_t"));
  m.m_r = static_cast<int>(c.integer("m_r"));
  if (c.text("circuit_model") == "aggregate")
    m.aggregate = c.real("p_c");
  else
    m.aggregate.reset();
  m.validate();
  return m;
}

energy::NodePowerModel node_model(const Config& c, int n_pins) {
  energy::NodePowerModel n;
  n.p_fpga_relay = c.real("p_fpga_relay");
  n.p_pa = c.real("p_pa");
  n.p_fpga_irs = c.real("p_fpga_irs");
  n.p_pin = c.real("p_pin");
  n.n_pins = n_pins;
  n.eta = c.real("eta");
  n.validate();
  return n;
}

std::vector<double> grid(double start, double stop, long points, bool log) {
  if (points < 1) throw ConfigError("grid: need at least one point");
  if (points == 1) return {start};  // spacing is irrelevant, so zero is allowed
  if (log && !(start > 0.0 && stop > 0.0)) throw ConfigError("grid: log spacing needs positive ends");
  std::vector<double> out(points);
  for (long i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    out[i] = log ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start))) : start + t * (stop - start);
  }
  out.back() = stop;
  return out;
}

}  // namespace hetf::config
