#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "dynwave/energy.hpp"
#include "dynwave/model.hpp"
#include "dynwave/states.hpp"

using namespace dynwave;

namespace {

CoefficientSet unit_coeffs(int n) {
  CoefficientSpec raw;
  raw.q = FunctionSpec::indicator(0.3, 0.5, 5.0);
  return validate_coefficients(raw, n);
}

WaveState state_from(const std::vector<double>& u, const std::vector<double>& ut,
                     const Grid& grid) {
  WaveState st;
  st.u = u;
  st.u_prev.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) st.u_prev[i] = u[i] - grid.dt * ut[i];
  return st;
}

TEST(Energy, ZeroStateHasZeroEnergy) {
  const int n = 50;
  const auto grid = make_fd_grid(n, 1.0);
  const auto coeffs = unit_coeffs(n);
  const auto st = state_from(std::vector<double>(n + 1, 0.0),
                             std::vector<double>(n + 1, 0.0), grid);
  const auto e = energy(st, coeffs, grid, 2.0);
  EXPECT_EQ(e.e_total, 0.0);
  EXPECT_EQ(e.e_interior, 0.0);
  EXPECT_EQ(e.e_boundary, 0.0);
}

TEST(Energy, LinearRampInteriorEnergy) {
  const int n = 64;
  const auto grid = make_fd_grid(n, 1.0);
  const auto coeffs = unit_coeffs(n);
  std::vector<double> u(n + 1), ut(n + 1, 0.0);
  for (int i = 0; i <= n; ++i) u[i] = grid.node(i);
  const auto e = energy(state_from(u, ut, grid), coeffs, grid, 2.0);
  EXPECT_NEAR(e.e_interior, 0.5, 1e-12);
  EXPECT_NEAR(e.e_boundary, 0.0, 1e-15);
}

TEST(Energy, BoundaryPartFormula) {
  const int n = 10;
  const auto grid = make_fd_grid(n, 1.0);
  const auto coeffs = unit_coeffs(n);
  WaveState st = state_from(std::vector<double>(n + 1, 0.0),
                            std::vector<double>(n + 1, 0.0), grid);
  st.eta1 = st.eta2 = st.zeta1 = 1.0;
  const auto e = energy(st, coeffs, grid, 2.0);
  EXPECT_NEAR(e.e_boundary, 1.5, 1e-15);  // 1/2 + alpha2/2 + 1/2 with unit gains
  EXPECT_NEAR(e.e_total, e.e_interior + e.e_boundary, 1e-15);
}

TEST(Energy, ScalingHomogeneity) {
  const int n = 32;
  const auto grid = make_fd_grid(n, 1.0);
  const auto coeffs = unit_coeffs(n);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  std::vector<double> u(n + 1), ut(n + 1);
  for (auto& v : u) v = gauss(rng);
  for (auto& v : ut) v = gauss(rng);
  WaveState st = state_from(u, ut, grid);
  st.eta1 = 0.3;
  st.eta2 = -0.9;
  st.zeta1 = 1.7;

  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const auto e1 = energy(st, coeffs, grid, p);
    WaveState scaled = st;
    const double lambda = -2.5;
    for (std::size_t i = 0; i < scaled.u.size(); ++i) {
      scaled.u[i] *= lambda;
      scaled.u_prev[i] *= lambda;
    }
    scaled.eta1 *= lambda;
    scaled.eta2 *= lambda;
    scaled.zeta1 *= lambda;
    const auto e2 = energy(scaled, coeffs, grid, p);
    EXPECT_NEAR(e2.e_total, std::pow(std::abs(lambda), p) * e1.e_total,
                1e-11 * std::max(1.0, e2.e_total));
    EXPECT_GE(e2.e_interior, 0.0);
    EXPECT_GE(e2.e_boundary, 0.0);
  }
}

TEST(Energy, InvalidExponentRejected) {
  const int n = 16;
  const auto grid = make_fd_grid(n, 1.0);
  const auto coeffs = unit_coeffs(n);
  const auto st = state_from(std::vector<double>(n + 1, 1.0),
                             std::vector<double>(n + 1, 0.0), grid);
  EXPECT_THROW(energy(st, coeffs, grid, 0.5), InvalidExponent);
}

TEST(Dissipation, FormulaEvaluation) {
  const int n = 20;
  const auto grid = make_fd_grid(n, 1.0);
  CoefficientSpec raw;
  raw.q = FunctionSpec::constant(0.0);
  raw.allow_zero_damping = true;
  const auto coeffs = validate_coefficients(raw, n);
  WaveState st = state_from(std::vector<double>(n + 1, 0.0),
                            std::vector<double>(n + 1, 0.0), grid);
  st.eta1 = 1.0;
  EXPECT_NEAR(dissipation(st, coeffs, grid), -1.0, 1e-15);
  st.eta1 = 0.0;
  EXPECT_EQ(dissipation(st, coeffs, grid), 0.0);
}

TEST(Dissipation, AlwaysNonpositive) {
  const int n = 30;
  const auto grid = make_fd_grid(n, 1.0);
  const auto coeffs = unit_coeffs(n);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> u(n + 1), ut(n + 1);
    for (auto& v : u) v = gauss(rng);
    for (auto& v : ut) v = gauss(rng);
    WaveState st = state_from(u, ut, grid);
    st.eta1 = gauss(rng);
    st.zeta1 = gauss(rng);
    EXPECT_LE(dissipation(st, coeffs, grid), 0.0);
  }
}

TEST(FitDecay, ExactExponential) {
  std::vector<double> ts, es;
  for (int i = 0; i <= 200; ++i) {
    const double t = 0.05 * i;
    ts.push_back(t);
    es.push_back(std::exp(-3.0 * t));
  }
  const auto fit = fit_decay(ts, es, 0.0, 10.0);
  EXPECT_NEAR(fit.nu, 3.0, 1e-12);
  EXPECT_NEAR(fit.log_M, 0.0, 1e-12);
  EXPECT_NEAR(fit.r2, 1.0, 1e-12);
}

TEST(FitDecay, RecoversAmplitude) {
  std::vector<double> ts, es;
  for (int i = 0; i <= 100; ++i) {
    const double t = 0.1 * i;
    ts.push_back(t);
    es.push_back(5.0 * std::exp(-0.7 * t));
  }
  const auto fit = fit_decay(ts, es, 0.0, 10.0);
  EXPECT_NEAR(fit.nu, 0.7, 1e-12);
  EXPECT_NEAR(std::exp(fit.log_M), 5.0, 1e-10);
}

TEST(FitDecay, WindowShiftInvarianceForExactExponential) {
  std::vector<double> ts, es;
  for (int i = 0; i <= 400; ++i) {
    const double t = 0.05 * i;
    ts.push_back(t);
    es.push_back(2.0 * std::exp(-1.3 * t));
  }
  const auto f1 = fit_decay(ts, es, 0.0, 10.0);
  const auto f2 = fit_decay(ts, es, 5.0, 15.0);
  EXPECT_NEAR(f1.nu, f2.nu, 1e-11);
}

TEST(FitDecay, Errors) {
  std::vector<double> ts = {0, 1, 2, 3};
  std::vector<double> es = {1, 1, 1, 1};
  EXPECT_THROW(fit_decay(ts, es, 10.0, 20.0), WindowEmpty);
  std::vector<double> ts2, es2;
  for (int i = 0; i < 20; ++i) {
    ts2.push_back(i * 0.1);
    es2.push_back(i == 5 ? 0.0 : 1.0);
  }
  EXPECT_THROW(fit_decay(ts2, es2, 0.0, 2.0), NonpositiveEnergyInWindow);
}

TEST(KomornikRatio, ExponentialGivesInverseRate) {
  const double nu = 0.8;
  std::vector<double> ts, es;
  for (int i = 0; i <= 4000; ++i) {
    const double t = 0.01 * i;
    ts.push_back(t);
    es.push_back(std::exp(-nu * t));
  }
  EXPECT_NEAR(komornik_ratio(ts, es), 1.0 / nu, 2e-3);
}

TEST(KomornikRatio, RequiresPositiveStart) {
  EXPECT_THROW(komornik_ratio({0.0, 1.0}, {0.0, 0.0}), ZeroEnergyStart);
}

TEST(KomornikRatio, PlateauGivesLargeRatio) {
  // slow plateau then decay: diagnostic value grows, no failure
  std::vector<double> ts, es;
  for (int i = 0; i <= 1000; ++i) {
    const double t = 0.05 * i;
    ts.push_back(t);
    es.push_back(t < 20.0 ? 1.0 : std::exp(-2.0 * (t - 20.0)));
  }
  const double ratio = komornik_ratio(ts, es);
  EXPECT_GT(ratio, 15.0);
  EXPECT_TRUE(std::isfinite(ratio));
}

TEST(SupDeviation, Basics) {
  WaveState st;
  st.u = {1.0, 1.0, 1.0};
  EXPECT_EQ(sup_deviation(st, 1.0), 0.0);
  st.u = {1.0, 2.0, 1.0};
  EXPECT_EQ(sup_deviation(st, 1.0), 1.0);
}

TEST(Young, ConstantDominatesGridSup) {
  // numeric sup of (|a+b|^p - (1+eps)|a|^p) eps^{p-1} / |b|^p over a grid
  for (double p : {1.5, 2.0, 3.0, 5.0}) {
    double sup = 0.0;
    for (int ia = -40; ia <= 40; ++ia)
      for (int ib = -40; ib <= 40; ++ib) {
        if (ib == 0) continue;
        const double a = ia * 0.25, b = ib * 0.25;
        for (double eps : {0.05, 0.3, 0.9, 1.5, 1.95}) {
          const double num = std::pow(std::abs(a + b), p) -
                             (1.0 + eps) * std::pow(std::abs(a), p);
          sup = std::max(sup, num * std::pow(eps, p - 1.0) / std::pow(std::abs(b), p));
        }
      }
    EXPECT_GE(young_constant(p, 1.0), sup) << "p=" << p;
  }
}

TEST(Young, RandomSamplesNeverViolate) {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::uniform_real_distribution<double> epsd(1e-6, 2.0 - 1e-6);
  for (double p : {1.5, 2.0, 3.0, 5.0}) {
    const double C = young_constant(p, 1.0);
    for (int i = 0; i < 100000; ++i) {
      const double a = coord(rng), b = coord(rng), eps = epsd(rng);
      ASSERT_TRUE(young_check(p, eps, a, b, C))
          << "p=" << p << " a=" << a << " b=" << b << " eps=" << eps;
    }
  }
}

TEST(Young, CaseP2WithSharperConstant) {
  // (a+b)^2 <= (1+eps) a^2 + (1+1/eps) b^2 and 3/eps >= 1 + 1/eps on (0,2)
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::uniform_real_distribution<double> epsd(1e-6, 2.0 - 1e-6);
  for (int i = 0; i < 100000; ++i) {
    const double a = coord(rng), b = coord(rng), eps = epsd(rng);
    ASSERT_TRUE(young_check(2.0, eps, a, b, 3.0));
  }
}

TEST(Young, ZeroFirstArgument) {
  EXPECT_TRUE(young_check(3.0, 0.5, 0.0, 7.0, 1.0));
}

TEST(Young, ParameterValidation) {
  EXPECT_THROW(young_constant(1.0, 0.5), InvalidExponent);
  EXPECT_THROW(young_constant(2.0, 0.0), InvalidEpsilon);
  EXPECT_THROW(young_constant(2.0, 2.0), InvalidEpsilon);
}

TEST(EhatP, TrapezoidOfPowers) {
  const int n = 100;
  std::vector<double> rho(n + 1, 1.0), xi(n + 1, 0.0);
  EXPECT_NEAR(ehat_p(rho, xi, 3.0), 1.0, 1e-12);
  for (int i = 0; i <= n; ++i) xi[i] = -2.0;
  EXPECT_NEAR(ehat_p(rho, xi, 3.0), 1.0 + 8.0, 1e-12);
}

}  // namespace
