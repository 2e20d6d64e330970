#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "dynwave/experiment.hpp"

using namespace dynwave;
using nlohmann::json;

namespace {

json base_config() {
  return json{
      {"scenario", "main"},
      {"seed", 7},
      {"grid", {{"n_cells", 100}, {"cfl", 0.9}, {"horizon", 5.0}, {"record_stride", 5}}},
      {"coefficients",
       {{"a", {{"preset", "constant"}, {"value", 1.0}}},
        {"q", {{"preset", "indicator"}, {"lo", 0.3}, {"hi", 0.5}, {"level", 5.0}}}}},
      {"initial_data",
       {{"u0", {{"preset", "gaussian-bump"}, {"center", 0.5}, {"width", 0.1},
                {"amplitude", 1.0}}},
        {"u1", {{"preset", "constant"}, {"value", 0.0}}}}},
      {"fit_window", {1.0, 5.0}},
  };
}

TEST(ParseConfig, DefaultsAndOverrides) {
  const auto cfg = parse_config(base_config());
  EXPECT_EQ(cfg.scenario, "main");
  EXPECT_EQ(cfg.n_cells, 100);
  EXPECT_EQ(cfg.record_stride, 5);
  EXPECT_EQ(cfg.seed, 7u);
  EXPECT_DOUBLE_EQ(cfg.fit_t0, 1.0);
}

TEST(ParseConfig, RejectsUnknownScenario) {
  auto j = base_config();
  j["scenario"] = "frobnicate";
  EXPECT_THROW(parse_config(j), ConfigError);
}

TEST(ParseConfig, RejectsUnknownPreset) {
  auto j = base_config();
  j["initial_data"]["u0"] = {{"preset", "mystery"}};
  EXPECT_THROW(parse_config(j), UnknownPreset);
}

TEST(ParseConfig, NegativeGainFailsAtValidation) {
  auto j = base_config();
  j["coefficients"]["beta1"] = -1.0;
  const auto cfg = parse_config(j);  // parse is structural only
  RunResult result;
  EXPECT_EQ(run_experiment(cfg, result), 2);
  EXPECT_TRUE(result.summary.contains("error"));
}

TEST(RunExperiment, MainScenarioProducesSeries) {
  const auto cfg = parse_config(base_config());
  RunResult result;
  ASSERT_EQ(run_experiment(cfg, result), 0);
  ASSERT_EQ(result.csv_header.size(), 9u);
  EXPECT_EQ(result.csv_header[0], "t");
  EXPECT_EQ(result.csv_header[7], "sup_dev");
  ASSERT_GT(result.csv_rows.size(), 10u);
  EXPECT_TRUE(result.summary.contains("nu"));
  EXPECT_TRUE(result.summary.contains("komornik_ratio"));
  EXPECT_GT(result.summary["nu"].get<double>(), 0.0);
  // energy column nonincreasing trend: last below first
  EXPECT_LT(result.csv_rows.back()[1], result.csv_rows.front()[1]);
}

TEST(RunExperiment, DeterministicRows) {
  const auto cfg = parse_config(base_config());
  RunResult a, b;
  ASSERT_EQ(run_experiment(cfg, a), 0);
  ASSERT_EQ(run_experiment(cfg, b), 0);
  ASSERT_EQ(a.csv_rows.size(), b.csv_rows.size());
  for (std::size_t i = 0; i < a.csv_rows.size(); ++i)
    for (std::size_t j = 0; j < a.csv_rows[i].size(); ++j)
      EXPECT_EQ(a.csv_rows[i][j], b.csv_rows[i][j]);
}

TEST(RunExperiment, RelatedScenarioReportsBothVariants) {
  auto j = base_config();
  j["scenario"] = "related";
  j["grid"]["horizon"] = 40.0;
  j["coefficients"]["q0"] = 1.0;
  j["coefficients"]["q1"] = 1.0;
  j["fit_window"] = {1.0, 30.0};
  const auto cfg = parse_config(j);
  RunResult result;
  ASSERT_EQ(run_experiment(cfg, result), 0);
  const double corr = result.summary["final_dev_corrected"];
  const double printed = result.summary["final_dev_as_printed"];
  EXPECT_LT(corr, 1e-2);
  EXPECT_GT(printed, 10.0 * corr);
}

TEST(RunExperiment, SpectralScenario) {
  auto j = base_config();
  j["scenario"] = "spectral";
  j["grid"]["n_cells"] = 48;
  j["lambda_range"] = {-200.0, 200.0};
  j["lambda_count"] = 41;
  const auto cfg = parse_config(j);
  RunResult result;
  ASSERT_EQ(run_experiment(cfg, result), 0);
  EXPECT_LT(result.summary["abscissa"].get<double>(), 0.0);
  EXPECT_TRUE(result.summary["h1_ok"].get<bool>());
  EXPECT_GT(result.summary["resolvent_sup"].get<double>(), 0.0);
  EXPECT_LE(result.summary["dissipativity_residual"].get<double>(), 1e-10);
  EXPECT_EQ(result.csv_rows.size(), 41u);
}

TEST(RunExperiment, IssScenario) {
  auto j = base_config();
  j["scenario"] = "iss";
  j["grid"]["n_cells"] = 100;
  j["grid"]["horizon"] = 20.0;
  j["p"] = 3.0;
  j["fit_window"] = {2.0, 18.0};
  j["initial_data"]["u1"] = {{"preset", "gaussian-bump"}, {"center", 0.6},
                             {"width", 0.15}, {"amplitude", -0.7}};
  const auto cfg = parse_config(j);
  RunResult result;
  ASSERT_EQ(run_experiment(cfg, result), 0);
  EXPECT_GT(result.summary["alpha_p"].get<double>(), 0.0);
  EXPECT_GT(result.summary["envelope_C"].get<double>(), 0.0);
}

TEST(RunExperiment, ConservationScenarioRequiresZeroDamping) {
  auto j = base_config();
  j["scenario"] = "conservation";
  const auto cfg = parse_config(j);
  RunResult result;
  EXPECT_EQ(run_experiment(cfg, result), 2);

  j["coefficients"]["q"] = {{"preset", "constant"}, {"value", 0.0}};
  j["coefficients"]["allow_zero_damping"] = true;
  j["initial_data"]["u0"] = {{"preset", "sine-mode"}, {"k", 1}};
  j["grid"]["snapshot_stride"] = 10;
  j.erase("fit_window");
  j["fit_window"] = {0.5, 4.5};
  const auto cfg2 = parse_config(j);
  RunResult r2;
  ASSERT_EQ(run_experiment(cfg2, r2), 0);
  EXPECT_LT(r2.summary["conservation_drift"].get<double>(), 5e-4);
  EXPECT_LT(r2.summary["dalembert_max_error"].get<double>(), 5e-3);
}

TEST(WriteArtifacts, CsvRoundTripsFullPrecision) {
  const auto cfg = parse_config(base_config());
  RunResult result;
  ASSERT_EQ(run_experiment(cfg, result), 0);
  const std::string path = "test_out.csv";
  write_csv(result, path);
  std::ifstream in(path);
  ASSERT_TRUE(in.good());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.substr(0, 2), "t,");
  std::string line;
  std::getline(in, line);
  double t, e;
  ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf", &t, &e), 2);
  EXPECT_EQ(t, result.csv_rows[0][0]);
  EXPECT_EQ(e, result.csv_rows[0][1]);
  std::remove(path.c_str());
}

}  // namespace
