#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dynwave/model.hpp"
#include "dynwave/oracles.hpp"
#include "dynwave/solver_fd.hpp"
#include "dynwave/solver_riemann.hpp"

using namespace dynwave;

namespace {

CoefficientSet c1_coeffs(int n, double alpha1 = 1.0, double alpha2 = 1.0) {
  CoefficientSpec raw;
  raw.q = FunctionSpec::indicator(0.3, 0.5, 5.0);
  raw.alpha1 = alpha1;
  raw.alpha2 = alpha2;
  return validate_coefficients(raw, n);
}

InitialData bump_init(int n) {
  InitialData init;
  init.u0 = sample_function(FunctionSpec::gaussian_bump(0.5, 0.1, 1.0), n);
  init.u1 = std::vector<double>(n + 1, 0.0);
  return init;
}

TEST(RiemannMaps, DefinitionAndRoundTrip) {
  const std::vector<double> v{1.0, 1.0, 1.0}, w{0.0, 0.0, 0.0};
  auto [rho, xi] = to_riemann(v, w);
  for (double r : rho) EXPECT_EQ(r, 1.0);
  for (double x : xi) EXPECT_EQ(x, 1.0);

  auto [rho2, xi2] = to_riemann(w, v);  // v=0, w=1
  for (double r : rho2) EXPECT_EQ(r, 1.0);
  for (double x : xi2) EXPECT_EQ(x, -1.0);

  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss;
  std::vector<double> a(17), b(17);
  for (auto& x : a) x = gauss(rng);
  for (auto& x : b) x = gauss(rng);
  auto [r3, x3] = to_riemann(a, b);
  auto [va, wb] = from_riemann(r3, x3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_DOUBLE_EQ(va[i], a[i]);  // ulp-level: one rounding per map
    EXPECT_DOUBLE_EQ(wb[i], b[i]);
  }
}

TEST(RiemannMaps, FromRiemannCases) {
  std::vector<double> rho{2.0, 2.0}, xi{0.0, 0.0};
  auto [v, w] = from_riemann(rho, xi);
  EXPECT_EQ(v[0], 1.0);
  EXPECT_EQ(w[0], 1.0);
  auto [v2, w2] = from_riemann(rho, rho);
  EXPECT_EQ(w2[0], 0.0);
  EXPECT_THROW(to_riemann({1.0}, {1.0, 2.0}), LengthMismatch);
}

TEST(Expm, MatchesSeriesOnDampedOscillator) {
  Mat3 A;  // [[0,1,0],[-1,-1,0],[0,0,-1]]
  A(0, 1) = 1.0;
  A(1, 0) = -1.0;
  A(1, 1) = -1.0;
  A(2, 2) = -1.0;
  const double dt = 0.37;
  const Mat3 E = expm(A.scaled(dt));
  // reference by long Taylor series in double-double style (plain long sum)
  Mat3 ref = Mat3::identity(), term = Mat3::identity();
  for (int k = 1; k <= 60; ++k) {
    term = (term * A.scaled(dt)).scaled(1.0 / k);
    ref = ref + term;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(E(i, j), ref(i, j), 1e-12);
  EXPECT_NEAR(E(2, 2), std::exp(-dt), 1e-13);
}

TEST(BoundaryFlow, DecoupledScalarBlock) {
  const int n = 32;
  const auto coeffs = c1_coeffs(n);
  const double dt = 0.01;
  const auto m = make_boundary_flow(coeffs, dt);
  const auto y = boundary_flow({0.0, 0.0, 1.0}, {0.0, 0.0}, {0.0, 0.0}, m);
  EXPECT_NEAR(y[2], std::exp(-dt), 1e-12);
  EXPECT_EQ(y[0], 0.0);
  const auto id = boundary_flow({0.4, -0.2, 0.9}, {0.3, -0.7}, {0.3, -0.7},
                                make_boundary_flow(coeffs, 0.0));
  EXPECT_NEAR(id[0], 0.4, 1e-15);
  EXPECT_NEAR(id[1], -0.2, 1e-15);
  EXPECT_NEAR(id[2], 0.9, 1e-15);
}

TEST(RiemannStep, PureTransportIsExactShift) {
  const int n = 64;
  const auto grid = make_riemann_grid(n);
  CoefficientSpec raw;
  raw.q = FunctionSpec::constant(0.0);
  raw.allow_zero_damping = true;
  const auto coeffs = validate_coefficients(raw, n);

  std::vector<double> rho0(n + 1, 0.0), xi0(n + 1, 0.0);
  xi0[20] = 1.25;  // pulse away from walls
  rho0[40] = -0.5;
  std::vector<double> h(200, 0.0);
  auto run = simulate_forced(rho0, xi0, coeffs, grid, h, h, 2.0, 5.0 * grid.dt);
  const auto& st = run.final_state;
  EXPECT_EQ(st.xi[25], 1.25);  // xi moves right, bitwise
  EXPECT_EQ(st.rho[35], -0.5);  // rho moves left, bitwise
  double mass = 0.0;
  for (std::size_t i = 0; i < st.xi.size(); ++i)
    mass += std::abs(st.xi[i]) + std::abs(st.rho[i]);
  EXPECT_EQ(mass, 1.75);
}

TEST(RiemannStep, ZeroStateStaysZero) {
  const int n = 32;
  const auto grid = make_riemann_grid(n);
  const auto coeffs = c1_coeffs(n);
  RiemannState st;
  st.rho.assign(n + 1, 0.0);
  st.xi.assign(n + 1, 0.0);
  const auto flow = make_boundary_flow(coeffs, grid.dt);
  st = riemann_step(st, coeffs, grid, flow);
  for (double v : st.rho) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(st.eta1, 0.0);
}

TEST(RiemannStep, RequiresUnitCflAndUnitSpeed) {
  const int n = 32;
  auto grid = make_riemann_grid(n);
  const auto coeffs = c1_coeffs(n);
  RiemannState st;
  st.rho.assign(n + 1, 0.0);
  st.xi.assign(n + 1, 0.0);
  const auto flow = make_boundary_flow(coeffs, grid.dt);
  auto bad_grid = grid;
  bad_grid.dt = 0.9 * grid.dx;
  EXPECT_THROW(riemann_step(st, coeffs, bad_grid, flow), NonUnitCfl);

  CoefficientSpec raw;
  raw.a = FunctionSpec::linear(1.0, 0.5);
  raw.q = FunctionSpec::indicator(0.3, 0.5, 5.0);
  const auto coeffs2 = validate_coefficients(raw, n);
  EXPECT_THROW(riemann_step(st, coeffs2, grid, flow), RequiresConstantSpeed);
}

TEST(RiemannStep, BoundaryCompatibilityAfterEveryStep) {
  const int n = 50;
  const auto grid = make_riemann_grid(n);
  const auto coeffs = c1_coeffs(n, 1.3, 0.7);
  const auto flow = make_boundary_flow(coeffs, grid.dt);
  auto st = initial_riemann_state(bump_init(n), grid);
  st.eta1 = 0.2;
  st.eta2 = -0.1;
  st.zeta1 = 0.05;
  for (int k = 0; k < 200; ++k) {
    st = riemann_step(st, coeffs, grid, flow);
    EXPECT_NEAR(st.rho[n] + st.xi[n], 2.0 * st.eta1, 1e-12);
    EXPECT_NEAR(st.rho[0] + st.xi[0], 2.0 * st.zeta1, 1e-12);
  }
}

TEST(RiemannSimulate, EnergyNonincreasing) {
  const int n = 200;
  const auto grid = make_riemann_grid(n);
  const auto coeffs = c1_coeffs(n);
  const auto traj = simulate_riemann(bump_init(n), coeffs, grid, 20.0, 1);
  const double e0 = traj.energies.front().e_total;
  for (std::size_t k = 1; k < traj.energies.size(); ++k)
    EXPECT_LE(traj.energies[k].e_total - traj.energies[k - 1].e_total, 1e-10 * e0);
}

// cross-solver agreement, including asymmetric boundary gains (alpha1 != alpha2
// exposes any mix-up in the boundary flow matrix ordering); smooth damping and
// boundary-compatible smooth velocity so the max norm converges pointwise
TEST(RiemannSimulate, MatchesFdSolver) {
  for (auto [alpha1, alpha2] : {std::pair{1.0, 1.0}, std::pair{1.7, 0.4}}) {
    auto cross_error = [&](int n) {
      const auto rgrid = make_riemann_grid(n);
      CoefficientSpec raw;
      raw.q = FunctionSpec::gaussian_bump(0.4, 0.1, 5.0);
      raw.omega = std::pair{0.3, 0.5};
      raw.alpha1 = alpha1;
      raw.alpha2 = alpha2;
      const auto coeffs = validate_coefficients(raw, n);
      InitialData init = bump_init(n);
      init.u1 = sample_function(FunctionSpec::linear(0.1, 0.05), n);
      init.eta1_0 = 0.15;
      init.eta2_0 = -0.2;
      init.zeta1_0 = 0.1;

      const int rstride = n / 10;  // record every 0.1
      const auto rtraj = simulate_riemann(init, coeffs, rgrid, 5.0, rstride, 1);
      const auto fgrid = make_fd_grid_aligned(n, coeffs.a_hi, 0.1, 0.9);
      const int fstride = static_cast<int>(std::llround(0.1 / fgrid.dt));
      const auto ftraj =
          simulate(init, coeffs, fgrid, 5.0, fstride, {.snapshot_stride = 1});
      return cross_validate(rtraj, ftraj);
    };
    const auto coarse = cross_error(100);
    const auto fine = cross_error(200);
    EXPECT_GE(refinement_ratio(coarse.max_abs_error, fine.max_abs_error), 1.8)
        << "alpha1=" << alpha1;
    EXPECT_LE(fine.e2_max_rel_diff, 0.02) << "alpha1=" << alpha1;
  }
}

TEST(SimulateForced, ZeroInputsZeroState) {
  const int n = 40;
  const auto grid = make_riemann_grid(n);
  const auto coeffs = c1_coeffs(n);
  std::vector<double> z(n + 1, 0.0), h(500, 0.0);
  const auto run = simulate_forced(z, z, coeffs, grid, h, h, 3.0, 2.0);
  for (double e : run.ehat) EXPECT_EQ(e, 0.0);
}

// The unforced system conserves \int (rho - xi) dx (the wall values pin the
// displacement, and a linear profile is steady), so decay to zero needs data
// with a vanishing invariant: here (rho0, xi0) from fields with u0(0) = u0(1).
TEST(SimulateForced, UnforcedDecayPositiveRate) {
  const int n = 200;
  const auto grid = make_riemann_grid(n);
  const auto coeffs = c1_coeffs(n);
  const auto u0 = sample_function(FunctionSpec::gaussian_bump(0.45, 0.12, 1.0), n);
  const auto u1 = sample_function(FunctionSpec::gaussian_bump(0.6, 0.15, -0.7), n);
  auto [rho0, xi0] = to_riemann(u1, gradient(u0, grid.dx));
  const int steps = static_cast<int>(std::llround(30.0 / grid.dt));
  std::vector<double> h(steps + 1, 0.0);
  for (double p : {2.0, 3.0, 4.0}) {
    const auto run = simulate_forced(rho0, xi0, coeffs, grid, h, h, p, 30.0, 10);
    const auto fit = fit_decay(run.times, run.ehat, 2.0, 25.0);
    EXPECT_GT(fit.nu, 0.1) << "p=" << p;
  }
}

TEST(SimulateForced, NonzeroInvariantStalls) {
  const int n = 100;
  const auto grid = make_riemann_grid(n);
  const auto coeffs = c1_coeffs(n);
  // rho - xi has nonzero mean: the run must stall at the steady pair (c, -c)
  std::vector<double> rho0 = sample_function(FunctionSpec::gaussian_bump(0.5, 0.1, 1.0), n);
  std::vector<double> xi0(n + 1, 0.0);
  const double c = 0.5 * trapezoid(rho0, grid.dx);
  const int steps = static_cast<int>(std::llround(40.0 / grid.dt));
  std::vector<double> h(steps + 1, 0.0);
  const auto run = simulate_forced(rho0, xi0, coeffs, grid, h, h, 2.0, 40.0, steps);
  EXPECT_NEAR(run.ehat.back(), 2.0 * c * c, 0.05 * c * c);
}

TEST(SimulateForced, InputLengthValidated) {
  const int n = 20;
  const auto grid = make_riemann_grid(n);
  const auto coeffs = c1_coeffs(n);
  std::vector<double> z(n + 1, 0.0), h(3, 0.0);
  EXPECT_THROW(simulate_forced(z, z, coeffs, grid, h, h, 2.0, 1.0), LengthMismatch);
}

}  // namespace
