// Command-line front end: configuration-driven experiment runner.
//   dynwave run <config.json>
//   dynwave verify <fast|full> [--json report.json]
//   dynwave sweep <config.json> --param grid.n_cells --values 100 200 400
//
// Exit codes: 0 success, 2 invalid config, 3 instability, 4 failed criteria.

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "dynwave/acceptance.hpp"
#include "dynwave/experiment.hpp"

namespace {

int do_run(const std::string& config_path) {
  dynwave::RunResult result;
  try {
    const auto cfg = dynwave::load_config(config_path);
    if (cfg.scenario == "verify-suite") {
      const auto results = dynwave::run_acceptance(
          cfg.suite == "full" ? dynwave::Suite::full : dynwave::Suite::fast);
      return dynwave::report_acceptance(results);
    }
    const int code = dynwave::run_experiment(cfg, result);
    if (code != 0) {
      std::fprintf(stderr, "error: %s\n",
                   result.summary.value("error", std::string("run failed")).c_str());
      return code;
    }
    std::printf("%s\n", result.summary.dump(2).c_str());
    return 0;
  } catch (const dynwave::InstabilityDetected& e) {
    std::fprintf(stderr, "instability: %s\n", e.what());
    return 3;
  } catch (const dynwave::Error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }
}

int do_verify(const std::string& suite, const std::string& json_path) {
  if (suite != "fast" && suite != "full") {
    std::fprintf(stderr, "unknown suite '%s' (expected fast or full)\n", suite.c_str());
    return 2;
  }
  const auto results = dynwave::run_acceptance(
      suite == "full" ? dynwave::Suite::full : dynwave::Suite::fast);
  if (!json_path.empty()) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results)
      j.push_back({{"id", r.id},
                   {"name", r.name},
                   {"pass", r.pass},
                   {"detail", r.detail},
                   {"seconds", r.seconds}});
    dynwave::write_json(j, json_path);
  }
  return dynwave::report_acceptance(results);
}

int do_sweep(const std::string& config_path, const std::string& param,
             const std::vector<std::string>& values) {
  nlohmann::json base;
  {
    std::ifstream in(config_path);
    if (!in) {
      std::fprintf(stderr, "cannot open config file: %s\n", config_path.c_str());
      return 2;
    }
    try {
      in >> base;
    } catch (const nlohmann::json::exception& e) {
      std::fprintf(stderr, "config is not valid JSON: %s\n", e.what());
      return 2;
    }
  }
  std::string pointer = "/" + param;
  for (auto& c : pointer)
    if (c == '.') c = '/';

  for (const auto& value : values) {
    nlohmann::json j = base;
    try {
      nlohmann::json parsed;
      try {
        parsed = nlohmann::json::parse(value);
      } catch (const nlohmann::json::exception&) {
        parsed = value;  // plain string
      }
      j[nlohmann::json::json_pointer(pointer)] = parsed;

      auto suffix_path = [&](const std::string& path) {
        if (path.empty()) return path;
        const auto dot = path.find_last_of('.');
        if (dot == std::string::npos) return path + "-" + value;
        return path.substr(0, dot) + "-" + value + path.substr(dot);
      };
      if (j.contains("output")) {
        if (j["output"].contains("csv_path"))
          j["output"]["csv_path"] = suffix_path(j["output"]["csv_path"]);
        if (j["output"].contains("json_path"))
          j["output"]["json_path"] = suffix_path(j["output"]["json_path"]);
      }
      const auto cfg = dynwave::parse_config(j);
      dynwave::RunResult result;
      const int code = dynwave::run_experiment(cfg, result);
      if (code != 0) {
        std::fprintf(stderr, "sweep value %s failed with code %d\n", value.c_str(),
                     code);
        return code;
      }
      std::printf("sweep %s=%s done\n", param.c_str(), value.c_str());
    } catch (const dynwave::Error& e) {
      std::fprintf(stderr, "sweep value %s: %s\n", value.c_str(), e.what());
      return 2;
    } catch (const nlohmann::json::exception& e) {
      std::fprintf(stderr, "sweep value %s: %s\n", value.c_str(), e.what());
      return 2;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D wave equation with dynamic boundary conditions: experiment runner"};
  app.require_subcommand(1);

  std::string config_path, suite = "fast", json_path, param;
  std::vector<std::string> values;

  auto* run = app.add_subcommand("run", "execute a scenario from a JSON config");
  run->add_option("config", config_path, "path to the JSON config")->required();

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("suite", suite, "fast or full")->required();
  verify->add_option("--json", json_path, "write the per-criterion report here");

  auto* sweep = app.add_subcommand("sweep", "run a config once per parameter value");
  sweep->add_option("config", config_path, "path to the JSON config")->required();
  sweep->add_option("--param", param, "dotted config path, e.g. grid.n_cells")
      ->required();
  sweep->add_option("--values", values, "values to substitute")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return do_run(config_path);
  if (verify->parsed()) return do_verify(suite, json_path);
  if (sweep->parsed()) return do_sweep(config_path, param, values);
  return 2;
}
