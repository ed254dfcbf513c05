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

#include "hetf/commands.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hetf/csv.hpp"
#include "hetf/errors.hpp"
#include "hetf/specfun.hpp"

namespace hetf::commands {

namespace {

using config::Config;

// Upper quantile of the normalized composite density: theta h = x/(1-x) with x ~ Beta(a, b).
double composite_quantile(const channel::ChannelParams& cp, double q) {
  const double x = boost::math::ibeta_inv(cp.shape_a(), cp.shape_b(), q);
  return cp.scale() * x / (1.0 - x);
}

std::vector<double> gain_grid(double h_max, long points) {
  std::vector<double> h(points);
  for (long i = 0; i < points; ++i) h[i] = h_max * static_cast<double>(i + 1) / points;
  return h;
}

int integral_axis(double v, const char* name) {
  const double r = std::round(v);
  if (std::fabs(v - r) > 1e-9 || r < 1.0) throw ConfigError(std::string("sweep over ") + name + " needs positive integers");
  return static_cast<int>(r);
}

channel::ChannelParams with_fading(const Config& cfg, int K, int N, double m, double m_s) {
  auto subs = config::subchannels(cfg, K, N);
  for (auto& sc : subs) {
    sc.fading.m = m;
    sc.fading.m_s = m_s;
  }
  return channel::ChannelParams::from_subchannels(std::move(subs));
}

numerics::McConfig mc_for(const Config& cfg, const RunOptions& opt, std::uint64_t point = 0) {
  numerics::McConfig mc = config::mc_config(cfg);
  mc.threads = opt.threads;
  // Distinct, reproducible stream family per grid point.
  std::seed_seq seq{static_cast<std::uint32_t>(mc.seed), static_cast<std::uint32_t>(mc.seed >> 32),
                    static_cast<std::uint32_t>(point), 0x5eedu};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  if (point != 0) mc.seed = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
  return mc;
}

}  // namespace

void cmd_pdf(const Config& cfg, std::ostream& out, const RunOptions&) {
  const std::string axis = cfg.text("sweep_name");
  const auto values = config::grid(cfg.real("sweep_start"), cfg.real("sweep_stop"), cfg.integer("sweep_points"), false);
  const long points = cfg.integer("h_points");
  if (points < 1) throw ConfigError("h_points must be >= 1");

  std::vector<channel::ChannelParams> curves;
  for (double v : values) {
    int K = static_cast<int>(cfg.integer("K"));
    int N = static_cast<int>(cfg.integer("N"));
    if (axis == "K") K = integral_axis(v, "K");
    if (axis == "N") N = integral_axis(v, "N");
    auto subs = config::subchannels(cfg, K, N);
    for (auto& sc : subs) {
      if (axis == "m") sc.fading.m = v;
      if (axis == "m_s") sc.fading.m_s = v;
      if (axis == "alpha") sc.pathloss_exp = v;
    }
    curves.push_back(channel::ChannelParams::from_subchannels(std::move(subs)));
  }

  double h_max = cfg.real("h_max");
  if (h_max <= 0.0)
    for (const auto& cp : curves) h_max = std::max(h_max, composite_quantile(cp, 0.995));
  const auto hs = gain_grid(h_max, points);

  csv::Writer w(out, {"sweep_name", "sweep_value", "h", "density"});
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (double h : hs) {
      w.field(axis).field(values[i]).field(h).field(channel::pdf_composite(h, curves[i]));
      w.end_row();
    }
}

void cmd_power_alloc(const Config& cfg, std::ostream& grid, std::ostream& capacity, const RunOptions& opt) {
  const int K = static_cast<int>(cfg.integer("K"));
  const int N = static_cast<int>(cfg.integer("N"));
  const auto pb = config::power_budget(cfg);
  const auto method = config::threshold_method(cfg);
  const long points = cfg.integer("h_points");
  if (points < 1) throw ConfigError("h_points must be >= 1");

  struct Pair {
    double m, m_s;
    channel::ChannelParams cp;
  };
  std::vector<Pair> pairs;
  for (double m : cfg.reals("pa_m_values"))
    for (double ms : cfg.reals("pa_ms_values")) pairs.push_back({m, ms, with_fading(cfg, K, N, m, ms)});

  double h_max = cfg.real("h_max");
  if (h_max <= 0.0)
    for (const auto& p : pairs) h_max = std::max(h_max, composite_quantile(p.cp, 0.995));
  const auto hs = gain_grid(h_max, points);

  csv::Writer g(grid, {"m", "m_s", "h", "threshold", "power"});
  for (const auto& p : pairs) {
    const auto pol = power_alloc::make_policy(p.cp, pb, method);
    for (double h : hs) {
      g.field(p.m).field(p.m_s).field(h).field(pol.threshold).field(power_alloc::policy_eval(pol, h));
      g.end_row();
    }
  }

  const auto powers = cfg.reals("pa_avg_powers");
  struct Row {
    double threshold, capacity;
    power_alloc::BaselineResult base;
  };
  std::vector<Row> rows(pairs.size() * powers.size());
  numerics::parallel_for(static_cast<long>(rows.size()), opt.threads, [&](long i) {
    const auto& p = pairs[i / powers.size()];
    auto b = pb;
    b.avg_power = powers[i % powers.size()];
    b.validate();
    const auto pol = power_alloc::make_policy(p.cp, b, method);
    rows[i] = {pol.threshold, power_alloc::ergodic_capacity_p1(p.cp, b, pol), power_alloc::rayleigh_baseline(p.cp, b)};
  });

  csv::Writer c(capacity, {"m", "m_s", "avg_power", "threshold", "capacity", "baseline_threshold",
                           "baseline_capacity", "baseline_power"});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& p = pairs[i / powers.size()];
    const auto& r = rows[i];
    c.field(p.m).field(p.m_s).field(powers[i % powers.size()]).field(r.threshold).field(r.capacity);
    c.field(r.base.threshold).field(r.base.capacity).field(r.base.power_spent);
    c.end_row();
  }
}

void cmd_joint_alloc(const Config& cfg, std::ostream& out, const RunOptions&) {
  const auto pr = config::joint_problem(cfg);
  auto sc = config::solver_config(cfg);
  sc.record_trace = true;
  const int K = pr.K();

  std::vector<std::string> header{"kind", "iteration"};
  for (int k = 1; k <= K; ++k) header.push_back("B_" + std::to_string(k));
  for (int k = 1; k <= K; ++k) header.push_back("P_" + std::to_string(k));
  for (const char* h : {"capacity", "converged", "kkt_max"}) header.push_back(h);
  csv::Writer w(out, header);

  auto alloc = [&](const std::vector<double>& b, const std::vector<double>& p) {
    for (double v : b) w.field(v);
    for (double v : p) w.field(v);
  };

  const auto res = joint_alloc::solve(pr, sc);
  for (const auto& row : res.trace) {
    w.field("trace").field(row.iteration);
    alloc(row.bandwidth, row.power);
    w.field(row.capacity).field("").field("");
    w.end_row();
  }
  const auto& fin = res.state;
  w.field("final").field(fin.iteration);
  alloc(fin.bandwidth, fin.power);
  w.field(joint_alloc::objective(pr, fin)).field(fin.converged ? 1 : 0).field(joint_alloc::kkt_residual(pr, fin, sc).max());
  w.end_row();

  const auto fixed = joint_alloc::solve_fixed_bandwidth(pr, sc);
  w.field("fixed").field(0);
  alloc(fixed.bandwidth, fixed.power);
  w.field(joint_alloc::objective(pr, fixed)).field(1).field(joint_alloc::kkt_residual(pr, fixed, sc).max());
  w.end_row();
}

void cmd_energy(const Config& cfg, std::ostream& out, const RunOptions& opt) {
  const auto powers = config::grid(cfg.real("ee_power_start"), cfg.real("ee_power_stop"),
                                   cfg.integer("ee_power_points"), true);
  const auto circuit = config::circuit_model(cfg);
  const auto base = config::power_budget(cfg);

  csv::Writer w(out, {"K", "N", "avg_power", "source_power", "relay_capacity", "relay_capacity_se", "irs_capacity",
                      "irs_capacity_se", "relay_ee", "relay_ee_se", "irs_ee", "irs_ee_se"});
  std::uint64_t point = 0;
  for (long K : cfg.integers("ee_k_values"))
    for (long N : cfg.integers("ee_n_values"))
      for (double p : powers) {
        ++point;
        energy::EeScenario sc;
        sc.channel = channel::ChannelParams::from_subchannels(
            config::subchannels(cfg, static_cast<int>(K), static_cast<int>(N)));
        sc.budgets = base;
        sc.budgets.avg_power = p;
        sc.source_power = p;
        sc.node = config::node_model(cfg, static_cast<int>(N));
        sc.circuit = circuit;
        sc.relay_mean_gain = cfg.real("relay_mean_gain");
        const auto mc = mc_for(cfg, opt, point);
        const auto relay = energy::energy_efficiency(sc, energy::Link::kRelay, mc);
        const auto irs = energy::energy_efficiency(sc, energy::Link::kIrs, mc);
        w.field(K).field(N).field(p).field(sc.source_power);
        w.field(relay.capacity.mean).field(relay.capacity.std_error);
        w.field(irs.capacity.mean).field(irs.capacity.std_error);
        w.field(relay.value).field(relay.std_error).field(irs.value).field(irs.std_error);
        w.end_row();
      }
}

std::vector<Check> validation_checks(const Config& cfg, const RunOptions& opt) {
  const double s = cfg.real("validate_tolerance_scale");
  const long n = cfg.integer("validate_samples");
  if (n < 1) throw ConfigError("validate_samples must be >= 1");
  const std::uint64_t seed = cfg.unsigned_integer("seed");
  std::vector<Check> out;
  auto upper = [&](std::string suite, std::string name, double measured, double tol) {
    out.push_back({std::move(suite), std::move(name), measured, tol * s, measured <= tol * s});
  };

  // Special functions.
  {
    numerics::Stream rng(seed, 0);
    double collapse = 0.0, round_trip = 0.0, density = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double a = 0.1 + 30.0 * rng.uniform();
      const double b = 0.1 + 30.0 * rng.uniform();
      const double z = 50.0 * rng.uniform();
      const double want = std::pow(1.0 + z, -a);
      collapse = std::max(collapse, std::fabs(specfun::gauss_2f1(a, b, b, -z) / want - 1.0));

      const double al = 0.5 + 9.5 * rng.uniform();
      const double be = 0.5 + 9.5 * rng.uniform();
      const double ga = 0.5 + 9.5 * rng.uniform();
      const double x = 0.01 + 20.0 * rng.uniform();
      const double g = specfun::meijer_g_2212(x, -al, -be, -1.0, -ga);
      const double back = g * std::exp(specfun::ln_gamma(ga) - specfun::ln_gamma(al) - specfun::ln_gamma(be)) * x;
      round_trip = std::max(round_trip, std::fabs(back / specfun::gauss_2f1(al, be, ga, -x) - 1.0));

      const double A = 0.5 + 30.0 * rng.uniform();
      const double B = 0.5 + 30.0 * rng.uniform();
      const double elem = std::exp(specfun::ln_gamma(A + B) + (B - 1.0) * std::log(x) - (A + B) * std::log1p(x));
      density = std::max(density, std::fabs(specfun::meijer_g_2212(x, -A, 0.0, B - 1.0, 0.0) / elem - 1.0));
    }
    upper("specfun", "hyp2f1_parameter_collapse_rel", collapse, 1e-10);
    upper("specfun", "meijer_hypergeometric_round_trip_rel", round_trip, 1e-10);
    upper("specfun", "meijer_density_pattern_rel", density, 1e-10);

    double eps = 0.0;
    for (int i = 0; i <= 20; ++i)
      for (int j = 0; j <= 20; ++j) {
        const double a = 1.1 + (200.0 - 1.1) * i / 20.0;
        const double b = 1.1 + (200.0 - 1.1) * j / 20.0;
        const double via_gamma = std::exp(specfun::ln_gamma(a - 1.0) + specfun::ln_gamma(b + 1.0) -
                                          specfun::ln_gamma(a) - specfun::ln_gamma(b));
        eps = std::max(eps, std::fabs(specfun::gamma_ratio_epsilon(a, b) / via_gamma - 1.0));
      }
    upper("specfun", "epsilon_vs_gamma_route_rel", eps, 1e-12);
  }

  // Channel densities.
  {
    double sum_mass = 0.0, comp_mass = 0.0, meijer = 0.0;
    for (double m : {1.0, 2.0, 5.0})
      for (double ms : {1.0, 2.0, 5.0})
        for (int N : {1, 4, 8}) {
          const channel::FadingParams f{m, ms, 5.0};
          numerics::QuadratureConfig q;
          q.scale = N * ms * 5.0 / m * std::max(N * m, 1.0) / std::max(N * ms, 1.0);
          const double ms1 =
              numerics::integrate_semi_infinite([&](double g) { return channel::pdf_sum_gain(g, f, N); }, q).value;
          sum_mass = std::max(sum_mass, std::fabs(ms1 - 1.0));
          channel::SubchannelParams sc;
          sc.fading = f;
          sc.n_reflectors = N;
          const auto cp = channel::ChannelParams::homogeneous(3, sc);
          comp_mass = std::max(comp_mass, std::fabs(channel::composite_mass(cp).value / cp.prefactor() - 1.0));
          const double mode = std::max(cp.mode(), cp.scale());
          for (int i = 1; i <= 10; ++i) {
            const double h = mode * i / 4.0;
            const double ref = channel::pdf_composite(h, cp);
            meijer = std::max(meijer, std::fabs(channel::pdf_composite_meijer(h, cp) / ref - 1.0));
            const double g = q.scale * i / 4.0;
            meijer = std::max(meijer, std::fabs(channel::pdf_sum_gain_meijer(g, f, N) /
                                                    channel::pdf_sum_gain(g, f, N) - 1.0));
          }
        }
    upper("channel", "sum_gain_mass_abs", sum_mass, 1e-6);
    upper("channel", "composite_mass_rel", comp_mass, 1e-6);
    upper("channel", "meijer_vs_elementary_rel", meijer, 1e-9);

    double ks = 0.0;
    std::uint64_t stream = 1;
    for (double m : {1.0, 2.0, 5.0})
      for (double ms : {1.0, 2.0, 5.0}) {
        const channel::FadingParams f{m, ms, 1.0};
        numerics::Stream rng(seed, 1000 + stream++);
        std::vector<double> xs(n);
        for (auto& x : xs) x = channel::sample_gain(f, rng);
        ks = std::max(ks, numerics::ks_statistic(std::move(xs), [&](double g) { return channel::cdf_single_reflector(g, f); }));
      }
    // Kolmogorov critical value for n draws at a 1e-3 family-wise level over the 9 cases.
    upper("channel", "sample_gain_ks", ks, std::sqrt(-0.5 * std::log(1e-3 / 18.0) / static_cast<double>(n)));
  }

  // Water-filling.
  {
    const auto cp = channel::ChannelParams::homogeneous(3, {});
    const power_alloc::PowerBudget pb;
    const double h0 = power_alloc::threshold_exact(cp, pb);
    const auto dens = power_alloc::composite_density(cp);
    const double spent = power_alloc::average_power(h0, dens, pb, true);
    upper("power_alloc", "exact_threshold_power_rel", std::fabs(spent / pb.avg_power - 1.0), 0.005);

    auto small = pb;
    small.noise_psd = 1e-13;
    const double hc = power_alloc::threshold_closed_form(cp, small);
    upper("power_alloc", "small_threshold_regime", hc * cp.lambda() / cp.K(), 0.05);
    const double spent_c = power_alloc::average_power(hc, dens, small, true);
    upper("power_alloc", "closed_form_power_rel", std::fabs(spent_c / small.avg_power - 1.0), 0.10);

    const auto pol = power_alloc::PowerPolicy::from_threshold(h0, pb);
    const double quad = power_alloc::ergodic_capacity_p1(cp, pb, pol);
    auto mc = mc_for(cfg, opt, 7);
    mc.samples = n;
    const auto est = power_alloc::ergodic_capacity_p1_mc(cp, pb, pol, mc);
    upper("power_alloc", "capacity_mc_vs_quadrature_sigma", std::fabs(est.mean - quad) / est.std_error, 5.0);
  }

  // Joint allocation, symmetric instance.
  {
    joint_alloc::JointProblem pr;
    pr.gains = {5.0, 5.0, 5.0};
    joint_alloc::SolverConfig sc;
    sc.record_trace = false;
    const auto res = joint_alloc::solve(pr, sc);
    double db = 0.0, dp = 0.0;
    for (int k = 0; k < 3; ++k) {
      db = std::max(db, std::fabs(res.state.bandwidth[k] - 65e6));
      dp = std::max(dp, std::fabs(res.state.power[k] - 0.01));
    }
    upper("joint_alloc", "symmetric_bandwidth_from_65MHz", db, 5e6);
    upper("joint_alloc", "symmetric_power_from_10mW", dp, 1e-3);
    out.push_back({"joint_alloc", "symmetric_converged", res.state.converged ? 1.0 : 0.0, 1.0, res.state.converged});
    upper("joint_alloc", "symmetric_kkt_max", joint_alloc::kkt_residual(pr, res.state, sc).max(), 1e-3);
  }

  // Node power arithmetic.
  {
    const energy::NodePowerModel node{1.0, 5.0, 0.5, 0.0085, 16, 0.8};
    upper("energy", "relay_power_abs", std::fabs(energy::relay_power(node, {}) - 11.25), 1e-12);
    upper("energy", "irs_power_n16_abs", std::fabs(energy::irs_power(node) - 0.795), 1e-12);
  }
  return out;
}

bool cmd_validate(const Config& cfg, std::ostream& out, const RunOptions& opt) {
  const auto checks = validation_checks(cfg, opt);
  csv::Writer w(out, {"suite", "check", "measured", "tolerance", "pass"});
  bool ok = true;
  for (const auto& c : checks) {
    w.field(c.suite).field(c.name).field(c.measured).field(c.tolerance).field(c.pass ? 1 : 0);
    w.end_row();
    ok = ok && c.pass;
  }
  return ok;
}

std::filesystem::path companion(const std::filesystem::path& out, const std::string& suffix) {
  auto p = out;
  p.replace_extension(suffix);
  return p;
}

int run(const Invocation& inv, std::ostream& err) {
  try {
    Config cfg = inv.config ? Config::load(*inv.config) : Config();
    if (inv.seed) cfg.set("seed", std::to_string(*inv.seed));

    auto open = [](const std::filesystem::path& p) {
      std::ofstream f(p, std::ios::binary);
      if (!f) throw ConfigError("cannot write '" + p.string() + "'");
      return f;
    };
    // Build the tables in memory so a failing run leaves no partial output behind.
    std::ostringstream main, extra;
    bool ok = true;
    const auto& cmd = inv.subcommand;
    if (cmd == "pdf")
      cmd_pdf(cfg, main, inv.options);
    else if (cmd == "power-alloc")
      cmd_power_alloc(cfg, main, extra, inv.options);
    else if (cmd == "joint-alloc")
      cmd_joint_alloc(cfg, main, inv.options);
    else if (cmd == "energy")
      cmd_energy(cfg, main, inv.options);
    else if (cmd == "validate")
      ok = cmd_validate(cfg, main, inv.options);
    else
      throw ConfigError("unknown subcommand '" + cmd + "'");

    open(inv.out) << main.str();
    if (cmd == "power-alloc") open(companion(inv.out, ".capacity.csv")) << extra.str();
    open(companion(inv.out, ".config.txt")) << cfg.echo();
    if (!ok) {
      err << "validation failed; see " << inv.out.string() << "\n";
      return kValidationFailure;
    }
    return kOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const DomainError& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kConfigError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << " (best estimate " << e.best_estimate << ", bound "
        << e.error_bound << ")\n";
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

}  // namespace hetf::commands
