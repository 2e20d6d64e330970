#ifndef DYNWAVE_EXPERIMENT_HPP
#define DYNWAVE_EXPERIMENT_HPP

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "dynwave/energy.hpp"
#include "dynwave/model.hpp"
#include "dynwave/oracles.hpp"
#include "dynwave/solver_fd.hpp"
#include "dynwave/solver_riemann.hpp"
#include "dynwave/spectral.hpp"

// Configuration-driven experiment runner: parses the JSON config, executes a
// scenario, and writes the CSV time series plus a JSON summary.

namespace dynwave {

struct ExperimentConfig {
  std::string scenario = "main";
  std::uint64_t seed = 0;

  int n_cells = 400;
  double cfl = 0.9;
  double horizon = 60.0;
  int record_stride = 1;
  int snapshot_stride = 0;

  CoefficientSpec coefficients;
  FunctionSpec u0 = FunctionSpec::gaussian_bump(0.5, 0.1, 1.0);
  FunctionSpec u1 = FunctionSpec::constant(0.0);
  double eta1_0 = 0.0, eta2_0 = 0.0, zeta1_0 = 0.0;
  double eta_0 = 0.0, zeta_0 = 0.0;

  double p = 2.0;
  double fit_t0 = 10.0, fit_t1 = 60.0;
  double viscosity = 0.5;

  double lambda_min = -800.0, lambda_max = 800.0;
  int lambda_count = 321;

  // iss scenario: boundary input presets h(t) = amplitude * exp(-rate t)
  double h1_amplitude = 1.0, h1_rate = 1.0;
  double h2_amplitude = 0.0, h2_rate = 1.0;
  double iss_epsilon = 0.5;

  std::string csv_path, json_path;
  std::string suite = "fast";  // verify-suite scenario
};

namespace detail {

inline FunctionSpec parse_function(const nlohmann::json& j) {
  if (j.is_number()) return FunctionSpec::constant(j.get<double>());
  if (!j.contains("preset")) throw UnknownPreset("function spec needs a preset field");
  const std::string preset = j.at("preset").get<std::string>();
  if (preset == "constant") return FunctionSpec::constant(j.value("value", 0.0));
  if (preset == "linear")
    return FunctionSpec::linear(j.value("intercept", 0.0), j.value("slope", 0.0));
  if (preset == "gaussian-bump")
    return FunctionSpec::gaussian_bump(j.value("center", 0.5), j.value("width", 0.1),
                                       j.value("amplitude", 1.0));
  if (preset == "sine-mode")
    return FunctionSpec::sine_mode(j.value("k", 1), j.value("amplitude", 1.0));
  if (preset == "indicator")
    return FunctionSpec::indicator(j.value("lo", 0.0), j.value("hi", 1.0),
                                   j.value("level", 1.0));
  if (preset == "table")
    return FunctionSpec::table(j.at("x").get<std::vector<double>>(),
                               j.at("y").get<std::vector<double>>());
  throw UnknownPreset("unknown function preset: " + preset);
}

inline nlohmann::json function_to_json(const FunctionSpec& f) {
  nlohmann::json j;
  switch (f.kind) {
    case FunctionSpec::Kind::Constant:
      j = {{"preset", "constant"}, {"value", f.value}};
      break;
    case FunctionSpec::Kind::Linear:
      j = {{"preset", "linear"}, {"intercept", f.intercept}, {"slope", f.slope}};
      break;
    case FunctionSpec::Kind::GaussianBump:
      j = {{"preset", "gaussian-bump"},
           {"center", f.center},
           {"width", f.width},
           {"amplitude", f.amplitude}};
      break;
    case FunctionSpec::Kind::SineMode:
      j = {{"preset", "sine-mode"}, {"k", f.mode}, {"amplitude", f.amplitude}};
      break;
    case FunctionSpec::Kind::Indicator:
      j = {{"preset", "indicator"}, {"lo", f.lo}, {"hi", f.hi}, {"level", f.level}};
      break;
    case FunctionSpec::Kind::Table:
      j = {{"preset", "table"}, {"x", f.xs}, {"y", f.ys}};
      break;
  }
  return j;
}

inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

inline ExperimentConfig parse_config(const nlohmann::json& j) {
  ExperimentConfig cfg;
  try {
    cfg.scenario = j.value("scenario", cfg.scenario);
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      cfg.n_cells = g.value("n_cells", cfg.n_cells);
      cfg.cfl = g.value("cfl", cfg.cfl);
      cfg.horizon = g.value("horizon", cfg.horizon);
      cfg.record_stride = g.value("record_stride", cfg.record_stride);
      cfg.snapshot_stride = g.value("snapshot_stride", cfg.snapshot_stride);
    }
    if (j.contains("coefficients")) {
      const auto& c = j.at("coefficients");
      if (c.contains("a")) cfg.coefficients.a = detail::parse_function(c.at("a"));
      if (c.contains("q")) cfg.coefficients.q = detail::parse_function(c.at("q"));
      if (c.contains("omega"))
        cfg.coefficients.omega = std::pair<double, double>{c.at("omega").at(0),
                                                           c.at("omega").at(1)};
      cfg.coefficients.alpha1 = c.value("alpha1", 1.0);
      cfg.coefficients.alpha2 = c.value("alpha2", 1.0);
      cfg.coefficients.beta1 = c.value("beta1", 1.0);
      cfg.coefficients.gamma1 = c.value("gamma1", 1.0);
      cfg.coefficients.mu1 = c.value("mu1", 1.0);
      if (c.contains("q0")) cfg.coefficients.q0 = c.at("q0").get<double>();
      if (c.contains("q1")) cfg.coefficients.q1 = c.at("q1").get<double>();
      cfg.coefficients.allow_zero_damping = c.value("allow_zero_damping", false);
    }
    if (j.contains("initial_data")) {
      const auto& d = j.at("initial_data");
      if (d.contains("u0")) cfg.u0 = detail::parse_function(d.at("u0"));
      if (d.contains("u1")) cfg.u1 = detail::parse_function(d.at("u1"));
      cfg.eta1_0 = d.value("eta1_0", 0.0);
      cfg.eta2_0 = d.value("eta2_0", 0.0);
      cfg.zeta1_0 = d.value("zeta1_0", 0.0);
      cfg.eta_0 = d.value("eta_0", 0.0);
      cfg.zeta_0 = d.value("zeta_0", 0.0);
    }
    cfg.p = j.value("p", cfg.p);
    if (j.contains("fit_window")) {
      cfg.fit_t0 = j.at("fit_window").at(0);
      cfg.fit_t1 = j.at("fit_window").at(1);
    }
    cfg.viscosity = j.value("viscosity", cfg.viscosity);
    if (j.contains("lambda_range")) {
      cfg.lambda_min = j.at("lambda_range").at(0);
      cfg.lambda_max = j.at("lambda_range").at(1);
    }
    cfg.lambda_count = j.value("lambda_count", cfg.lambda_count);
    if (j.contains("forcing")) {
      const auto& f = j.at("forcing");
      cfg.h1_amplitude = f.value("h1_amplitude", cfg.h1_amplitude);
      cfg.h1_rate = f.value("h1_rate", cfg.h1_rate);
      cfg.h2_amplitude = f.value("h2_amplitude", cfg.h2_amplitude);
      cfg.h2_rate = f.value("h2_rate", cfg.h2_rate);
      cfg.iss_epsilon = f.value("epsilon", cfg.iss_epsilon);
    }
    if (j.contains("output")) {
      cfg.csv_path = j.at("output").value("csv_path", std::string{});
      cfg.json_path = j.at("output").value("json_path", std::string{});
    }
    cfg.suite = j.value("suite", cfg.suite);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  const bool known =
      cfg.scenario == "main" || cfg.scenario == "related" || cfg.scenario == "riemann" ||
      cfg.scenario == "iss" || cfg.scenario == "spectral" ||
      cfg.scenario == "conservation" || cfg.scenario == "verify-suite";
  if (!known) throw ConfigError("unknown scenario: " + cfg.scenario);
  if (cfg.n_cells < 3) throw ConfigError("grid.n_cells must be >= 3");
  if (!(cfg.horizon > 0.0)) throw ConfigError("grid.horizon must be positive");
  if (cfg.horizon < cfg.fit_t1)
    std::fprintf(stderr, "warning: horizon %g ends before fit window %g\n", cfg.horizon,
                 cfg.fit_t1);
  return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

struct RunResult {
  nlohmann::json summary;
  std::vector<std::string> csv_header;
  std::vector<std::vector<double>> csv_rows;
};

namespace detail {

inline InitialData build_initial_data(const ExperimentConfig& cfg) {
  InitialData init;
  init.u0 = sample_function(cfg.u0, cfg.n_cells);
  init.u1 = sample_function(cfg.u1, cfg.n_cells);
  init.eta1_0 = cfg.eta1_0;
  init.eta2_0 = cfg.eta2_0;
  init.zeta1_0 = cfg.zeta1_0;
  init.eta_0 = cfg.eta_0;
  init.zeta_0 = cfg.zeta_0;
  return init;
}

inline nlohmann::json config_echo(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["scenario"] = cfg.scenario;
  j["seed"] = cfg.seed;
  j["grid"] = {{"n_cells", cfg.n_cells},
               {"cfl", cfg.cfl},
               {"horizon", cfg.horizon},
               {"record_stride", cfg.record_stride}};
  j["coefficients"] = {{"a", function_to_json(cfg.coefficients.a)},
                       {"q", function_to_json(cfg.coefficients.q)},
                       {"alpha1", cfg.coefficients.alpha1},
                       {"alpha2", cfg.coefficients.alpha2},
                       {"beta1", cfg.coefficients.beta1},
                       {"gamma1", cfg.coefficients.gamma1},
                       {"mu1", cfg.coefficients.mu1}};
  if (cfg.coefficients.q0) j["coefficients"]["q0"] = *cfg.coefficients.q0;
  if (cfg.coefficients.q1) j["coefficients"]["q1"] = *cfg.coefficients.q1;
  j["initial_data"] = {{"u0", function_to_json(cfg.u0)},
                       {"u1", function_to_json(cfg.u1)},
                       {"eta1_0", cfg.eta1_0},
                       {"eta2_0", cfg.eta2_0},
                       {"zeta1_0", cfg.zeta1_0},
                       {"eta_0", cfg.eta_0},
                       {"zeta_0", cfg.zeta_0}};
  j["p"] = cfg.p;
  j["fit_window"] = {cfg.fit_t0, cfg.fit_t1};
  j["viscosity"] = cfg.viscosity;
  return j;
}

inline void append_fit(nlohmann::json& summary, const Trajectory& traj, double t0,
                       double t1) {
  try {
    const auto fit = fit_decay(traj.times, traj.energy_series(), t0, t1);
    summary["nu"] = fit.nu;
    summary["log_M"] = fit.log_M;
    summary["M"] = std::exp(fit.log_M);
    summary["r2"] = fit.r2;
    summary["fit_window"] = {fit.t_start, fit.t_end};
  } catch (const Error& e) {
    summary["fit_error"] = e.what();
  }
}

}  // namespace detail

inline RunResult run_wave_scenario(const ExperimentConfig& cfg) {
  const auto coeffs = validate_coefficients(cfg.coefficients, cfg.n_cells);
  const bool related = cfg.scenario == "related";
  const bool pinned = cfg.scenario == "conservation";
  const auto grid = make_fd_grid(cfg.n_cells, coeffs.a_hi, cfg.cfl);
  const auto init = detail::build_initial_data(cfg);
  if (cfg.scenario == "main" && !init.compatible_main(1e-9))
    std::fprintf(stderr,
                 "warning: u1 does not match (zeta1_0, eta1_0) at the walls; "
                 "running as a weak solution\n");

  SimulateOptions opts;
  opts.mode = related ? SystemMode::related
                      : (pinned ? SystemMode::pinned : SystemMode::main);
  opts.snapshot_stride = cfg.snapshot_stride;
  opts.energy_p = cfg.p;
  opts.viscosity = pinned ? 0.0 : cfg.viscosity;
  const auto traj = simulate(init, coeffs, grid, cfg.horizon, cfg.record_stride, opts);

  RunResult out;
  if (related) {
    out.csv_header = {"t",    "E_total", "E_i",     "E_b",        "eta",
                      "zeta", "sup_dev", "E_compat", "dissipation"};
  } else {
    out.csv_header = {"t",    "E_total", "E_i",     "E_b",        "eta1",
                      "eta2", "zeta1",   "sup_dev", "dissipation"};
  }
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    if (related) {
      out.csv_rows.push_back({traj.times[k], traj.energies[k].e_total,
                              traj.energies[k].e_interior, traj.energies[k].e_boundary,
                              traj.eta1s[k], traj.zeta1s[k], traj.sup_devs[k],
                              traj.energies_compat[k], traj.dissipations[k]});
    } else {
      out.csv_rows.push_back({traj.times[k], traj.energies[k].e_total,
                              traj.energies[k].e_interior, traj.energies[k].e_boundary,
                              traj.eta1s[k], traj.eta2s[k], traj.zeta1s[k],
                              traj.sup_devs[k], traj.dissipations[k]});
    }
  }

  auto& s = out.summary;
  s = detail::config_echo(cfg);
  s["dt"] = grid.dt;
  s["E0"] = traj.energies.front().e_total;
  s["E_final"] = traj.energies.back().e_total;
  s["final_sup_dev"] = traj.sup_devs.back();
  detail::append_fit(s, traj, cfg.fit_t0, std::min(cfg.fit_t1, cfg.horizon));
  if (pinned) {
    s["conservation_drift"] = conservation_check(traj);
  } else if (related) {
    const double u_corr = attractor_related(init, coeffs, AttractorVariant::corrected);
    const double u_printed =
        attractor_related(init, coeffs, AttractorVariant::as_printed);
    s["u_star_corrected"] = u_corr;
    s["u_star_as_printed"] = u_printed;
    s["final_dev_corrected"] = sup_deviation(traj.final_u, u_corr);
    s["final_dev_as_printed"] = sup_deviation(traj.final_u, u_printed);
  } else {
    s["u_star"] = traj.u_star;
    try {
      s["komornik_ratio"] = komornik_ratio(traj.times, traj.energy_series());
    } catch (const Error& e) {
      s["komornik_error"] = e.what();
    }
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < traj.energies_compat.size(); ++k)
      worst = std::max(worst, traj.energies_compat[k] - traj.energies_compat[k - 1]);
    s["max_compat_energy_increase"] = worst;
  }
  return out;
}

inline RunResult run_riemann_scenario(const ExperimentConfig& cfg) {
  const auto coeffs = validate_coefficients(cfg.coefficients, cfg.n_cells);
  const auto grid = make_riemann_grid(cfg.n_cells);
  const auto init = detail::build_initial_data(cfg);
  const auto traj = simulate_riemann(init, coeffs, grid, cfg.horizon,
                                     cfg.record_stride, cfg.snapshot_stride, cfg.p);
  RunResult out;
  out.csv_header = {"t", "E_total", "E_i", "E_b", "eta1", "eta2", "zeta1"};
  for (std::size_t k = 0; k < traj.times.size(); ++k)
    out.csv_rows.push_back({traj.times[k], traj.energies[k].e_total,
                            traj.energies[k].e_interior, traj.energies[k].e_boundary,
                            traj.eta1s[k], traj.eta2s[k], traj.zeta1s[k]});
  out.summary = detail::config_echo(cfg);
  out.summary["dt"] = grid.dt;
  out.summary["E0"] = traj.energies.front().e_total;
  out.summary["E_final"] = traj.energies.back().e_total;
  detail::append_fit(out.summary, traj, cfg.fit_t0, std::min(cfg.fit_t1, cfg.horizon));
  return out;
}

inline RunResult run_iss_scenario(const ExperimentConfig& cfg) {
  const auto coeffs = validate_coefficients(cfg.coefficients, cfg.n_cells);
  const auto grid = make_riemann_grid(cfg.n_cells);
  const auto init = detail::build_initial_data(cfg);
  auto [rho0, xi0] = to_riemann(init.u1, gradient(init.u0, grid.dx));

  const auto steps = static_cast<std::size_t>(std::llround(cfg.horizon / grid.dt));
  std::vector<double> h1(steps + 1), h2(steps + 1), zero(steps + 1, 0.0);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * grid.dt;
    h1[k] = cfg.h1_amplitude * std::exp(-cfg.h1_rate * t);
    h2[k] = cfg.h2_amplitude * std::exp(-cfg.h2_rate * t);
  }

  const auto unforced = simulate_forced(rho0, xi0, coeffs, grid, zero, zero, cfg.p,
                                        cfg.horizon, cfg.record_stride);
  const auto forced = simulate_forced(rho0, xi0, coeffs, grid, h1, h2, cfg.p,
                                      cfg.horizon, cfg.record_stride);

  const auto fit = fit_decay(unforced.times, unforced.ehat,
                             std::min(cfg.fit_t0, 0.2 * cfg.horizon),
                             std::min(cfg.fit_t1, 0.9 * cfg.horizon));

  // envelope C: smallest constant with Ehat(t) <= C (e^{-alpha t} Ehat(0) +
  // eps^{1-p} e^{eps t} int_0^t |h|^p)
  const double eps = cfg.iss_epsilon;
  double C = 0.0, hint = 0.0, tprev = 0.0;
  std::vector<double> envelope(forced.times.size());
  for (std::size_t k = 0; k < forced.times.size(); ++k) {
    const double t = forced.times[k];
    if (k > 0) {
      auto hp = [&](double s) {
        return std::pow(std::abs(cfg.h1_amplitude) * std::exp(-cfg.h1_rate * s), cfg.p) +
               std::pow(std::abs(cfg.h2_amplitude) * std::exp(-cfg.h2_rate * s), cfg.p);
      };
      hint += 0.5 * (hp(tprev) + hp(t)) * (t - tprev);
    }
    tprev = t;
    envelope[k] = std::exp(-fit.nu * t) * forced.ehat.front() +
                  std::pow(eps, 1.0 - cfg.p) * std::exp(eps * t) * hint;
    if (envelope[k] > 0.0) C = std::max(C, forced.ehat[k] / envelope[k]);
  }

  RunResult out;
  out.csv_header = {"t", "ehat_unforced", "ehat_forced", "envelope"};
  for (std::size_t k = 0; k < forced.times.size(); ++k)
    out.csv_rows.push_back(
        {forced.times[k], unforced.ehat[k], forced.ehat[k], envelope[k]});
  out.summary = detail::config_echo(cfg);
  out.summary["alpha_p"] = fit.nu;
  out.summary["alpha_fit_r2"] = fit.r2;
  out.summary["envelope_C"] = C;
  out.summary["epsilon"] = eps;
  return out;
}

inline RunResult run_spectral_scenario(const ExperimentConfig& cfg) {
  const auto coeffs = validate_coefficients(cfg.coefficients, cfg.n_cells);
  const auto gen = assemble_generator(coeffs, cfg.n_cells, cfg.viscosity);
  auto rep = spectrum(gen);

  std::vector<double> lambdas(cfg.lambda_count);
  for (int i = 0; i < cfg.lambda_count; ++i)
    lambdas[i] = cfg.lambda_min + (cfg.lambda_max - cfg.lambda_min) * i /
                                      std::max(1, cfg.lambda_count - 1);
  rep.resolvent_samples = resolvent_sweep(gen, lambdas);
  const auto [sup, argmax] = resolvent_sup_refined(gen, rep.resolvent_samples,
                                                   rep.eigenvalues);
  rep.resolvent_sup = sup;
  rep.resolvent_argmax = argmax;
  const auto diss = dissipativity_residual(gen, coeffs, 1000, cfg.seed);

  RunResult out;
  out.csv_header = {"lambda", "resolvent_norm"};
  for (auto [l, v] : rep.resolvent_samples) out.csv_rows.push_back({l, v});
  out.summary = detail::config_echo(cfg);
  out.summary["dim"] = gen.dim;
  out.summary["abscissa"] = rep.abscissa;
  out.summary["h1_ok"] = rep.h1_ok;
  out.summary["resolvent_sup"] = rep.resolvent_sup;
  out.summary["resolvent_argmax"] = rep.resolvent_argmax;
  out.summary["resolvent_sampled_max"] = [&] {
    double m = 0.0;
    for (auto [l, v] : rep.resolvent_samples) m = std::max(m, v);
    return m;
  }();
  out.summary["dissipativity_residual"] = diss.residual;
  out.summary["max_re_form"] = diss.max_re_form;
  nlohmann::json eigs = nlohmann::json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(12, rep.eigenvalues.size()); ++i)
    eigs.push_back({rep.eigenvalues[i].real(), rep.eigenvalues[i].imag()});
  out.summary["leading_eigenvalues"] = eigs;
  return out;
}

inline RunResult run_conservation_scenario(const ExperimentConfig& cfg) {
  auto out = run_wave_scenario(cfg);
  // compare the pinned run against the reflected d'Alembert solution
  const auto coeffs = validate_coefficients(cfg.coefficients, cfg.n_cells);
  if (coeffs.q_hi > 0.0)
    throw ConfigError("conservation scenario requires q == 0 (set allow_zero_damping)");
  const auto init = detail::build_initial_data(cfg);
  const auto grid = make_fd_grid(cfg.n_cells, coeffs.a_hi, cfg.cfl);
  SimulateOptions opts{.mode = SystemMode::pinned, .snapshot_stride = 1,
                       .energy_p = 2.0, .viscosity = 0.0};
  const auto traj =
      simulate(init, coeffs, grid, cfg.horizon, cfg.record_stride, opts);
  double err = 0.0;
  if (std::abs(coeffs.a_hi - 1.0) < 1e-12 && std::abs(coeffs.a_lo - 1.0) < 1e-12) {
    for (std::size_t k = 0; k < traj.snapshot_times.size(); ++k) {
      const auto ref =
          dalembert_reference_profile(init.u0, init.u1, traj.snapshot_times[k]);
      for (std::size_t i = 0; i < ref.size(); ++i)
        err = std::max(err, std::abs(traj.snapshot_u[k][i] - ref[i]));
    }
    out.summary["dalembert_max_error"] = err;
  }
  return out;
}

inline void write_csv(const RunResult& result, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write CSV to " + path);
  for (std::size_t i = 0; i < result.csv_header.size(); ++i)
    out << (i ? "," : "") << result.csv_header[i];
  out << "\n";
  for (const auto& row : result.csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << detail::fmt17(row[i]);
    out << "\n";
  }
}

inline void write_json(const nlohmann::json& summary, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write JSON to " + path);
  out << summary.dump(2) << "\n";
}

/// Executes a scenario; returns the process exit code (0 ok, 2 bad config,
/// 3 instability) and fills artifacts.
inline int run_experiment(const ExperimentConfig& cfg, RunResult& result) {
  try {
    if (cfg.scenario == "main" || cfg.scenario == "related") {
      result = run_wave_scenario(cfg);
    } else if (cfg.scenario == "riemann") {
      result = run_riemann_scenario(cfg);
    } else if (cfg.scenario == "iss") {
      result = run_iss_scenario(cfg);
    } else if (cfg.scenario == "spectral") {
      result = run_spectral_scenario(cfg);
    } else if (cfg.scenario == "conservation") {
      result = run_conservation_scenario(cfg);
    } else {
      throw ConfigError("scenario not runnable here: " + cfg.scenario);
    }
  } catch (const InstabilityDetected& e) {
    result.summary["error"] = e.what();
    return 3;
  } catch (const Error& e) {
    result.summary["error"] = e.what();
    return 2;
  }
  write_csv(result, cfg.csv_path);
  write_json(result.summary, cfg.json_path);
  return 0;
}

}  // namespace dynwave

#endif  // DYNWAVE_EXPERIMENT_HPP
