#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "dynwave/model.hpp"
#include "dynwave/oracles.hpp"
#include "dynwave/solver_fd.hpp"

using namespace dynwave;

namespace {

CoefficientSet undamped(int n) {
  CoefficientSpec raw;
  raw.q = FunctionSpec::constant(0.0);
  raw.allow_zero_damping = true;
  return validate_coefficients(raw, n);
}

TEST(Dalembert, EigenmodeSeparates) {
  const int n = 400;
  const auto w0 = sample_function(FunctionSpec::sine_mode(1), n);
  const std::vector<double> w1(n + 1, 0.0);
  for (double t : {0.0, 0.3, 0.77, 1.5, 2.0}) {
    for (double x : {0.1, 0.5, 0.93}) {
      const double expected = std::cos(std::numbers::pi * t) * std::sin(std::numbers::pi * x);
      EXPECT_NEAR(dalembert_reference(w0, w1, t, x), expected, 1e-4);
    }
  }
}

TEST(Dalembert, VelocityEigenmode) {
  const int n = 400;
  const std::vector<double> w0(n + 1, 0.0);
  const auto w1 = sample_function(FunctionSpec::sine_mode(1), n);
  for (double t : {0.2, 0.9, 1.4}) {
    for (double x : {0.25, 0.6}) {
      const double expected =
          std::sin(std::numbers::pi * t) * std::sin(std::numbers::pi * x) / std::numbers::pi;
      EXPECT_NEAR(dalembert_reference(w0, w1, t, x), expected, 1e-4);
    }
  }
}

TEST(Dalembert, InitialConditionReproduced) {
  const int n = 100;
  const auto w0 = sample_function(FunctionSpec::gaussian_bump(0.4, 0.1, 1.0), n);
  const std::vector<double> w1(n + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    const double x = static_cast<double>(i) / n;
    EXPECT_NEAR(dalembert_reference(w0, w1, 0.0, x), w0[i], 1e-14);
  }
}

TEST(Dalembert, TwoPeriodicity) {
  const int n = 200;
  const auto w0 = sample_function(FunctionSpec::gaussian_bump(0.5, 0.08, 1.0), n);
  const auto w1 = sample_function(FunctionSpec::sine_mode(2, 0.3), n);
  for (double x : {0.2, 0.7}) {
    EXPECT_NEAR(dalembert_reference(w0, w1, 0.63, x),
                dalembert_reference(w0, w1, 2.63, x), 1e-12);
  }
}

TEST(Dalembert, ReflectionParityForEigenmode) {
  // cos(pi t) sin(pi x) satisfies w(t) = w(2 - t) exactly
  const int n = 300;
  const auto w0 = sample_function(FunctionSpec::sine_mode(1), n);
  const std::vector<double> w1(n + 1, 0.0);
  for (double t : {0.15, 0.6, 0.9}) {
    for (double x : {0.3, 0.55, 0.8}) {
      EXPECT_NEAR(dalembert_reference(w0, w1, t, x),
                  dalembert_reference(w0, w1, 2.0 - t, x), 1e-12);
    }
  }
}

double pinned_fd_error(int n, const FunctionSpec& shape, double horizon) {
  const auto coeffs = undamped(n);
  const auto grid = make_fd_grid_aligned(n, 1.0, horizon, 0.9);
  InitialData init;
  init.u0 = sample_function(shape, n);
  init.u1 = std::vector<double>(n + 1, 0.0);
  const int steps = static_cast<int>(std::llround(horizon / grid.dt));
  const auto traj =
      simulate(init, coeffs, grid, horizon, steps, {.mode = SystemMode::pinned,
                                                    .snapshot_stride = 1});
  const auto ref = dalembert_reference_profile(init.u0, init.u1, horizon);
  double err = 0.0;
  const auto& u = traj.snapshot_u.back();
  for (std::size_t i = 0; i < u.size(); ++i)
    err = std::max(err, std::abs(u[i] - ref[i]));
  return err;
}

TEST(Dalembert, FdSecondOrderAgainstOracle) {
  for (const auto& shape :
       {FunctionSpec::sine_mode(1), FunctionSpec::gaussian_bump(0.5, 0.1, 1.0)}) {
    const double coarse = pinned_fd_error(100, shape, 0.9);
    const double fine = pinned_fd_error(200, shape, 0.9);
    EXPECT_GE(refinement_ratio(coarse, fine), 3.5);
  }
}

TEST(CrossValidate, IdenticalTrajectoriesGiveZero) {
  const int n = 60;
  CoefficientSpec raw;
  raw.q = FunctionSpec::indicator(0.3, 0.5, 5.0);
  const auto coeffs = validate_coefficients(raw, n);
  const auto grid = make_fd_grid(n, 1.0);
  InitialData init;
  init.u0 = sample_function(FunctionSpec::gaussian_bump(0.5, 0.1, 1.0), n);
  init.u1 = std::vector<double>(n + 1, 0.0);
  const auto t1 = simulate(init, coeffs, grid, 1.0, 5, {.snapshot_stride = 1});
  const auto rep = cross_validate(t1, t1);
  EXPECT_EQ(rep.max_abs_error, 0.0);
  EXPECT_EQ(rep.l2_error, 0.0);
  EXPECT_EQ(rep.e2_max_rel_diff, 0.0);
}

TEST(CrossValidate, GridMismatchRejected) {
  CoefficientSpec raw;
  raw.q = FunctionSpec::indicator(0.3, 0.5, 5.0);
  auto make = [&](int n) {
    const auto coeffs = validate_coefficients(raw, n);
    const auto grid = make_fd_grid(n, 1.0);
    InitialData init;
    init.u0 = sample_function(FunctionSpec::gaussian_bump(0.5, 0.1, 1.0), n);
    init.u1 = std::vector<double>(n + 1, 0.0);
    return simulate(init, coeffs, grid, 0.5, 5, {.snapshot_stride = 1});
  };
  const auto a = make(40), b = make(80);
  EXPECT_THROW(cross_validate(a, b), GridMismatch);
}

TEST(ConservationCheck, EigenmodeDriftSmallAndRefining) {
  auto drift_at = [](int n) {
    const auto coeffs = undamped(n);
    const auto grid = make_fd_grid(n, 1.0);
    InitialData init;
    init.u0 = sample_function(FunctionSpec::sine_mode(1), n);
    init.u1 = std::vector<double>(n + 1, 0.0);
    const auto traj = simulate(init, coeffs, grid, 10.0, 10, {.mode = SystemMode::pinned});
    return conservation_check(traj);
  };
  const double d200 = drift_at(200);
  EXPECT_LE(d200, 5e-4);
  const double d400 = drift_at(400);
  EXPECT_GE(d200 / d400, 3.5);
}

TEST(ConservationCheck, ZeroDataGuarded) {
  const int n = 50;
  const auto coeffs = undamped(n);
  const auto grid = make_fd_grid(n, 1.0);
  InitialData init;
  init.u0 = std::vector<double>(n + 1, 0.0);
  init.u1 = std::vector<double>(n + 1, 0.0);
  const auto traj = simulate(init, coeffs, grid, 1.0, 10, {.mode = SystemMode::pinned});
  EXPECT_EQ(conservation_check(traj), 0.0);
}

}  // namespace
