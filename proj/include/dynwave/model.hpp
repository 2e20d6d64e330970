#ifndef DYNWAVE_MODEL_HPP
#define DYNWAVE_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Domain types for the 1D wave system with dynamic (Wentzell) boundary
// conditions: coefficient profiles, grids, initial data, and the steady-state
// attractor formulas. Everything here is an immutable value object once built.

namespace dynwave {

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NonPositiveWaveSpeed : Error { using Error::Error; };
struct NegativeDamping : Error { using Error::Error; };
struct EmptySupport : Error { using Error::Error; };
struct NonPositiveGain : Error { using Error::Error; };
struct ZeroDenominator : Error { using Error::Error; };
struct UnknownPreset : Error { using Error::Error; };
struct TableNotOnUnitInterval : Error { using Error::Error; };
struct CflViolation : Error { using Error::Error; };
struct InstabilityDetected : Error { using Error::Error; };
struct GridTooCoarse : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct NonUnitCfl : Error { using Error::Error; };
struct RequiresConstantSpeed : Error { using Error::Error; };
struct InvalidExponent : Error { using Error::Error; };
struct InvalidEpsilon : Error { using Error::Error; };
struct WindowEmpty : Error { using Error::Error; };
struct NonpositiveEnergyInWindow : Error { using Error::Error; };
struct ZeroEnergyStart : Error { using Error::Error; };
struct EigensolverFailure : Error { using Error::Error; };
struct SingularAtLambda : Error { using Error::Error; };
struct GridMismatch : Error { using Error::Error; };
struct ZeroInitialEnergy : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Quadrature on the solver grid: composite trapezoid throughout.

inline double trapezoid(const std::vector<double>& f, double dx) {
  if (f.size() < 2) return 0.0;
  double s = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
  return s * dx;
}

// ---------------------------------------------------------------------------
// Grid

struct Grid {
  int n_cells = 0;     // N; nodes are x_i = i/N, i = 0..N
  double dx = 0.0;     // 1/N
  double dt = 0.0;
  double cfl = 0.9;

  double node(int i) const { return static_cast<double>(i) * dx; }
  int n_nodes() const { return n_cells + 1; }
};

// Time step from the CFL bound dt <= cfl * dx / sqrt(a_hi).
inline Grid make_fd_grid(int n_cells, double a_hi, double cfl = 0.9) {
  Grid g;
  g.n_cells = n_cells;
  g.dx = 1.0 / n_cells;
  g.cfl = cfl;
  g.dt = cfl * g.dx / std::sqrt(a_hi);
  return g;
}

// Same, but dt snapped down so that an integer number of steps covers
// record_interval exactly (lets two solvers record at identical times).
inline Grid make_fd_grid_aligned(int n_cells, double a_hi, double record_interval,
                                 double cfl = 0.9) {
  Grid g;
  g.n_cells = n_cells;
  g.dx = 1.0 / n_cells;
  g.cfl = cfl;
  const double dt_max = cfl * g.dx / std::sqrt(a_hi);
  const int m = static_cast<int>(std::ceil(record_interval / dt_max - 1e-12));
  g.dt = record_interval / m;
  return g;
}

// Characteristics solver requires unit CFL: dt = dx exactly.
inline Grid make_riemann_grid(int n_cells) {
  Grid g;
  g.n_cells = n_cells;
  g.dx = 1.0 / n_cells;
  g.cfl = 1.0;
  g.dt = g.dx;
  return g;
}

// ---------------------------------------------------------------------------
// Function profiles on [0,1]

struct FunctionSpec {
  enum class Kind { Constant, Linear, GaussianBump, SineMode, Indicator, Table };

  Kind kind = Kind::Constant;
  double value = 0.0;              // Constant
  double intercept = 0.0, slope = 0.0;  // Linear
  double center = 0.5, width = 0.1, amplitude = 1.0;  // GaussianBump
  int mode = 1;                    // SineMode (amplitude shared)
  double lo = 0.0, hi = 1.0, level = 0.0;  // Indicator
  std::vector<double> xs, ys;      // Table

  static FunctionSpec constant(double c) {
    FunctionSpec s; s.kind = Kind::Constant; s.value = c; return s;
  }
  static FunctionSpec linear(double intercept, double slope) {
    FunctionSpec s; s.kind = Kind::Linear; s.intercept = intercept; s.slope = slope;
    return s;
  }
  static FunctionSpec gaussian_bump(double center, double width, double amplitude) {
    FunctionSpec s; s.kind = Kind::GaussianBump;
    s.center = center; s.width = width; s.amplitude = amplitude; return s;
  }
  static FunctionSpec sine_mode(int k, double amplitude = 1.0) {
    FunctionSpec s; s.kind = Kind::SineMode; s.mode = k; s.amplitude = amplitude;
    return s;
  }
  static FunctionSpec indicator(double lo, double hi, double level) {
    FunctionSpec s; s.kind = Kind::Indicator; s.lo = lo; s.hi = hi; s.level = level;
    return s;
  }
  static FunctionSpec table(std::vector<double> xs, std::vector<double> ys) {
    FunctionSpec s; s.kind = Kind::Table; s.xs = std::move(xs); s.ys = std::move(ys);
    return s;
  }
};

// Indicator supports snap outward to grid nodes so the discrete support
// contains the requested one.
inline int snap_down(double x, int n) {
  return std::clamp(static_cast<int>(std::floor(x * n + 1e-9)), 0, n);
}
inline int snap_up(double x, int n) {
  return std::clamp(static_cast<int>(std::ceil(x * n - 1e-9)), 0, n);
}

inline std::vector<double> sample_function(const FunctionSpec& spec, int n_cells) {
  const int n = n_cells;
  std::vector<double> out(n + 1, 0.0);
  switch (spec.kind) {
    case FunctionSpec::Kind::Constant:
      std::fill(out.begin(), out.end(), spec.value);
      break;
    case FunctionSpec::Kind::Linear:
      for (int i = 0; i <= n; ++i)
        out[i] = spec.intercept + spec.slope * (static_cast<double>(i) / n);
      break;
    case FunctionSpec::Kind::GaussianBump:
      for (int i = 0; i <= n; ++i) {
        const double s = (static_cast<double>(i) / n - spec.center) / spec.width;
        out[i] = spec.amplitude * std::exp(-s * s);
      }
      break;
    case FunctionSpec::Kind::SineMode:
      for (int i = 0; i <= n; ++i)
        out[i] = spec.amplitude *
                 std::sin(spec.mode * std::numbers::pi * (static_cast<double>(i) / n));
      break;
    case FunctionSpec::Kind::Indicator: {
      const int lo = snap_down(spec.lo, n);
      const int hi = snap_up(spec.hi, n);
      for (int i = lo; i <= hi; ++i) out[i] = spec.level;
      break;
    }
    case FunctionSpec::Kind::Table: {
      if (spec.xs.size() != spec.ys.size() || spec.xs.size() < 2)
        throw TableNotOnUnitInterval("table needs matching xs/ys with >= 2 points");
      if (spec.xs.front() > 1e-9 || spec.xs.back() < 1.0 - 1e-9)
        throw TableNotOnUnitInterval("table must cover [0,1]");
      for (std::size_t k = 1; k < spec.xs.size(); ++k)
        if (!(spec.xs[k] > spec.xs[k - 1]))
          throw TableNotOnUnitInterval("table xs must be strictly increasing");
      for (int i = 0; i <= n; ++i) {
        const double x = std::clamp(static_cast<double>(i) / n, spec.xs.front(),
                                    spec.xs.back());
        auto it = std::upper_bound(spec.xs.begin(), spec.xs.end(), x);
        std::size_t k = std::min<std::size_t>(
            spec.xs.size() - 1,
            std::max<std::size_t>(1, static_cast<std::size_t>(it - spec.xs.begin())));
        const double t = (x - spec.xs[k - 1]) / (spec.xs[k] - spec.xs[k - 1]);
        out[i] = (1.0 - t) * spec.ys[k - 1] + t * spec.ys[k];
      }
      break;
    }
  }
  return out;
}

inline std::vector<double> sample_function(const FunctionSpec& spec, const Grid& grid) {
  return sample_function(spec, grid.n_cells);
}

// ---------------------------------------------------------------------------
// Coefficients

struct CoefficientSet {
  std::vector<double> a_samples;  // wave coefficient a(x), nodal
  double a_lo = 1.0, a_hi = 1.0;
  std::vector<double> q_samples;  // damping q(x) >= 0, nodal
  double omega_lo = 0.0, omega_hi = 0.0;  // damping support [l,r]
  double q_lo = 0.0, q_hi = 0.0;          // bounds of q on omega
  double alpha1 = 1.0, alpha2 = 1.0, beta1 = 1.0, gamma1 = 1.0, mu1 = 1.0;
  std::optional<double> q0, q1;  // related-system boundary gains

  double a0() const { return a_samples.front(); }
  double a1() const { return a_samples.back(); }
  // Interface value a_{i+1/2}; nodal profiles are linearly interpolated.
  double a_mid(int i) const { return 0.5 * (a_samples[i] + a_samples[i + 1]); }
};

// Raw description consumed by validate_coefficients.
struct CoefficientSpec {
  FunctionSpec a = FunctionSpec::constant(1.0);
  FunctionSpec q = FunctionSpec::constant(0.0);
  std::optional<std::pair<double, double>> omega;  // inferred from q if absent
  double alpha1 = 1.0, alpha2 = 1.0, beta1 = 1.0, gamma1 = 1.0, mu1 = 1.0;
  std::optional<double> q0, q1;
  bool allow_zero_damping = false;  // opt-in for boundary-damping-only comparison runs
};

inline CoefficientSet validate_coefficients(const CoefficientSpec& raw, int n_cells) {
  CoefficientSet c;
  c.a_samples = sample_function(raw.a, n_cells);
  c.q_samples = sample_function(raw.q, n_cells);

  c.a_lo = *std::min_element(c.a_samples.begin(), c.a_samples.end());
  c.a_hi = *std::max_element(c.a_samples.begin(), c.a_samples.end());
  if (!(c.a_lo > 0.0))
    throw NonPositiveWaveSpeed("wave coefficient a(x) must be positive everywhere");

  for (double q : c.q_samples)
    if (q < 0.0) throw NegativeDamping("damping q(x) must be nonnegative");

  const int n = n_cells;
  int lo_idx = -1, hi_idx = -1;
  if (raw.omega) {
    auto [l, r] = *raw.omega;
    if (!(0.0 <= l && l < r && r <= 1.0))
      throw EmptySupport("omega must be a subinterval [l,r] of [0,1] with l < r");
    lo_idx = snap_down(l, n);
    hi_idx = snap_up(r, n);
  } else {
    // Infer omega as the longest contiguous run of strictly positive damping.
    int best_len = 0, run_start = -1;
    for (int i = 0; i <= n; ++i) {
      if (c.q_samples[i] > 0.0) {
        if (run_start < 0) run_start = i;
        if (i - run_start + 1 > best_len) {
          best_len = i - run_start + 1;
          lo_idx = run_start;
          hi_idx = i;
        }
      } else {
        run_start = -1;
      }
    }
  }

  if (lo_idx < 0 || hi_idx <= lo_idx) {
    if (!raw.allow_zero_damping)
      throw EmptySupport("damping support omega is empty");
    c.omega_lo = c.omega_hi = 0.0;
    c.q_lo = c.q_hi = 0.0;
  } else {
    c.omega_lo = static_cast<double>(lo_idx) / n;
    c.omega_hi = static_cast<double>(hi_idx) / n;
    c.q_lo = c.q_hi = c.q_samples[lo_idx];
    for (int i = lo_idx; i <= hi_idx; ++i) {
      c.q_lo = std::min(c.q_lo, c.q_samples[i]);
      c.q_hi = std::max(c.q_hi, c.q_samples[i]);
    }
    if (!(c.q_lo > 0.0) && !raw.allow_zero_damping)
      throw EmptySupport("damping must be bounded below by a positive constant on omega");
  }

  c.alpha1 = raw.alpha1; c.alpha2 = raw.alpha2; c.beta1 = raw.beta1;
  c.gamma1 = raw.gamma1; c.mu1 = raw.mu1;
  for (double g : {c.alpha1, c.alpha2, c.beta1, c.gamma1, c.mu1})
    if (!(g > 0.0))
      throw NonPositiveGain("boundary gains alpha1, alpha2, beta1, gamma1, mu1 must be positive");
  if (raw.q0 && !(*raw.q0 > 0.0)) throw NonPositiveGain("q0 must be positive");
  if (raw.q1 && !(*raw.q1 > 0.0)) throw NonPositiveGain("q1 must be positive");
  c.q0 = raw.q0;
  c.q1 = raw.q1;
  return c;
}

// ---------------------------------------------------------------------------
// Initial data

struct InitialData {
  std::vector<double> u0;  // displacement
  std::vector<double> u1;  // velocity
  double eta1_0 = 0.0, eta2_0 = 0.0, zeta1_0 = 0.0;  // main system
  double eta_0 = 0.0, zeta_0 = 0.0;                  // related system

  bool compatible_main(double tol = 1e-12) const {
    return std::abs(u1.back() - eta1_0) <= tol && std::abs(u1.front() - zeta1_0) <= tol;
  }
};

// ---------------------------------------------------------------------------
// Attractors

// u(t,1) - eta2(t) is conserved, so the limit displacement is fixed by the data.
inline double attractor_main(const InitialData& init) {
  return init.u0.back() - init.eta2_0;
}

enum class AttractorVariant { as_printed, corrected };

// Steady-state displacement of the related system (no boundary integrator).
// The `corrected` denominator carries the extra \int q term that makes constant
// steady states exact; `as_printed` omits it.
inline double attractor_related(const InitialData& init, const CoefficientSet& coeffs,
                                AttractorVariant variant) {
  if (init.u0.size() != coeffs.q_samples.size() || init.u0.size() != init.u1.size())
    throw LengthMismatch("attractor_related: grid sizes disagree");
  if (!coeffs.q0 || !coeffs.q1)
    throw ConfigError("attractor_related: related-system gains q0, q1 missing");
  const int n = static_cast<int>(init.u0.size()) - 1;
  const double dx = 1.0 / n;

  std::vector<double> integrand(init.u0.size());
  for (std::size_t i = 0; i < integrand.size(); ++i)
    integrand[i] = init.u1[i] + coeffs.q_samples[i] * init.u0[i];

  const double numerator = trapezoid(integrand, dx) +
                           coeffs.a0() * (init.zeta_0 + *coeffs.q0 * init.u0.front()) +
                           coeffs.a1() * (init.eta_0 + *coeffs.q1 * init.u0.back());
  double denominator = coeffs.a0() * *coeffs.q0 + coeffs.a1() * *coeffs.q1;
  if (variant == AttractorVariant::corrected)
    denominator += trapezoid(coeffs.q_samples, dx);
  if (std::abs(denominator) < 1e-300)
    throw ZeroDenominator("attractor_related: vanishing denominator");
  return numerator / denominator;
}

}  // namespace dynwave

#endif  // DYNWAVE_MODEL_HPP
