#ifndef DYNWAVE_SOLVER_FD_HPP
#define DYNWAVE_SOLVER_FD_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "dynwave/energy.hpp"
#include "dynwave/model.hpp"
#include "dynwave/states.hpp"

// Time-domain solver for u_tt - (a u_x)_x = -q u_t with dynamic boundary
// conditions. Leapfrog in the interior with time-centered damping; the
// boundary ODEs advance by the trapezoidal rule sharing the PDE time step.
//
// The boundary trace u_x(wall) is the face flux of the last cell corrected by
// the PDE itself: a(1) u_x(1) = a_{N-1/2} w_{N-1/2} + (dx/2)(u_tt + q u_t)(1)
// with u_tt(1) eliminated through the boundary ODE. This keeps the trace
// second order while the discrete energy identity telescopes exactly, so the
// recorded compatible energy is nonincreasing to rounding (see energy.hpp).
//
// Optional velocity viscosity eps * dx^2 * u_txx (time-centered, implicit
// tridiagonal, zero viscous flux through the outermost faces): centered
// schemes carry grid-scale modes that localize outside the damping support
// and decay at a rate vanishing with dx. The viscosity damps those modes at
// an N-uniform rate 2 eps sin^2(k dx / 2) and is O(dx^2) on smooth fields, so
// it does not disturb second-order convergence; the exact nonpositivity of
// the energy increments is preserved.

namespace dynwave {

struct Trajectory {
  SystemMode mode = SystemMode::main;
  int n_cells = 0;
  double dt = 0.0;
  double record_dt = 0.0;
  double u_star = 0.0;

  std::vector<double> times;
  std::vector<EnergyBreakdown> energies;   // pointwise E_p at record times
  std::vector<double> energies_compat;     // scheme-compatible discrete energy
  std::vector<double> eta1s, eta2s, zeta1s;  // related mode: eta1s = eta, zeta1s = zeta
  std::vector<double> sup_devs;
  std::vector<double> dissipations;

  // sparse field snapshots (every snapshot_stride records)
  std::vector<double> snapshot_times;
  std::vector<std::vector<double>> snapshot_u, snapshot_ut, snapshot_ux;

  std::vector<double> final_u;  // displacement at the horizon

  std::vector<double> energy_series() const {
    std::vector<double> e(energies.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = energies[i].e_total;
    return e;
  }
};

/// One-sided second-order boundary slope of the displacement field.
inline double boundary_derivative(const WaveState& state, bool right, const Grid& grid) {
  if (grid.n_cells < 3) throw GridTooCoarse("boundary_derivative needs N >= 3");
  const auto& u = state.u;
  const std::size_t n = u.size() - 1;
  if (right) return (3.0 * u[n] - 4.0 * u[n - 1] + u[n - 2]) / (2.0 * grid.dx);
  return (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * grid.dx);
}

namespace detail {

inline void check_fd_preconditions(const CoefficientSet& coeffs, const Grid& grid) {
  if (grid.n_cells < 3) throw GridTooCoarse("solver needs N >= 3");
  double a_max = 0.0;
  for (int i = 0; i < grid.n_cells; ++i) a_max = std::max(a_max, coeffs.a_mid(i));
  if (grid.dt > grid.dx / std::sqrt(a_max) * (1.0 + 1e-12))
    throw CflViolation("dt exceeds dx / sqrt(max a)");
}

// Flux-form discrete (a u')' at interior nodes; wall entries copied from the
// adjacent interior node (only used by the startup Taylor term).
inline std::vector<double> flux_laplacian(const std::vector<double>& u,
                                          const CoefficientSet& coeffs, double dx) {
  const std::size_t n = u.size() - 1;
  std::vector<double> L(u.size(), 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    L[i] = (coeffs.a_mid(static_cast<int>(i)) * (u[i + 1] - u[i]) -
            coeffs.a_mid(static_cast<int>(i) - 1) * (u[i] - u[i - 1])) /
           (dx * dx);
  }
  L[0] = L[1];
  L[n] = L[n - 1];
  return L;
}

// Constant boundary-update coefficients of the PDE-corrected trace ODEs.
struct BoundaryCoefs {
  double b_r = 0.0, b_l = 0.0;  // face flux factors a_{side}/dx
  // main mode, right: d eta1/dt = -A1 eta1 - A2 eta2 - Bt W_R
  double A1 = 0.0, A2 = 0.0, Bt = 0.0;
  // main mode, left: d zeta1/dt = -G1 zeta1 + Mt W_L
  double G1 = 0.0, Mt = 0.0;
  // related mode: d eta/dt = -Ar eta - Br W_R, d zeta/dt = -Gr zeta + Mr W_L
  double Ar = 0.0, Br = 0.0, Gr = 0.0, Mr = 0.0;
};

inline BoundaryCoefs boundary_coefs(const CoefficientSet& coeffs, const Grid& grid) {
  BoundaryCoefs bc;
  const int n = grid.n_cells;
  const double dx = grid.dx;
  const double a1 = coeffs.a1(), a0 = coeffs.a0();
  const double qn = coeffs.q_samples[n], q0s = coeffs.q_samples[0];
  bc.b_r = coeffs.a_mid(n - 1) / dx;
  bc.b_l = coeffs.a_mid(0) / dx;

  const double er = coeffs.beta1 * dx / (2.0 * a1);
  bc.A1 = (coeffs.alpha1 + coeffs.beta1 * qn * dx / (2.0 * a1)) / (1.0 + er);
  bc.A2 = coeffs.alpha2 / (1.0 + er);
  bc.Bt = (coeffs.beta1 / a1) / (1.0 + er);

  const double el = coeffs.mu1 * dx / (2.0 * a0);
  bc.G1 = (coeffs.gamma1 + coeffs.mu1 * q0s * dx / (2.0 * a0)) / (1.0 + el);
  bc.Mt = (coeffs.mu1 / a0) / (1.0 + el);

  const double dr = dx / (2.0 * a1);
  const double dl = dx / (2.0 * a0);
  const double q1g = coeffs.q1.value_or(0.0), q0g = coeffs.q0.value_or(0.0);
  bc.Ar = (q1g + qn * dr) / (1.0 + dr);
  bc.Br = (1.0 / a1) / (1.0 + dr);
  bc.Gr = (q0g + q0s * dl) / (1.0 + dl);
  bc.Mr = (1.0 / a0) / (1.0 + dl);
  return bc;
}

struct StepWorkspace {
  std::vector<double> rhs, cprime;
};

// Advances (u_prev, u) -> u_next and the boundary variables in place.
inline void advance(std::vector<double>& u_next, const std::vector<double>& u,
                    const std::vector<double>& u_prev, double& eta1, double& eta2,
                    double& zeta1, double& eta, double& zeta, double u_star,
                    SystemMode mode, const CoefficientSet& coeffs, const Grid& grid,
                    const BoundaryCoefs& bc, double viscosity = 0.0,
                    StepWorkspace* ws = nullptr) {
  const int n = grid.n_cells;
  const double dt = grid.dt, s = 0.5 * dt;
  const double inv_dx2 = 1.0 / (grid.dx * grid.dx);

  if (viscosity <= 0.0) {
    for (int i = 1; i < n; ++i) {
      const double flux = (coeffs.a_mid(i) * (u[i + 1] - u[i]) -
                           coeffs.a_mid(i - 1) * (u[i] - u[i - 1])) *
                          inv_dx2;
      const double c = 0.5 * coeffs.q_samples[i] * dt;
      u_next[i] = (2.0 * u[i] - (1.0 - c) * u_prev[i] + dt * dt * flux) / (1.0 + c);
    }
  } else {
    // time-centered viscous term couples interior neighbours: Thomas solve
    StepWorkspace local;
    StepWorkspace& w = ws ? *ws : local;
    w.rhs.resize(n + 1);
    w.cprime.resize(n + 1);
    const double ed = 0.5 * viscosity * dt;
    auto lap_ends_clamped = [&](const std::vector<double>& f, int i) {
      // zero viscous flux through faces (0,1) and (n-1,n)
      const double up = (i + 1 < n) ? f[i + 1] - f[i] : 0.0;
      const double lo = (i - 1 > 0) ? f[i] - f[i - 1] : 0.0;
      return up - lo;
    };
    for (int i = 1; i < n; ++i) {
      const double flux = (coeffs.a_mid(i) * (u[i + 1] - u[i]) -
                           coeffs.a_mid(i - 1) * (u[i] - u[i - 1])) *
                          inv_dx2;
      const double c = 0.5 * coeffs.q_samples[i] * dt;
      w.rhs[i] = 2.0 * u[i] - (1.0 - c) * u_prev[i] + dt * dt * flux -
                 ed * lap_ends_clamped(u_prev, i);
    }
    // diag_i = 1 + c_i + ed * (number of interior faces at i), off = -ed
    double diag1 = 1.0 + 0.5 * coeffs.q_samples[1] * dt + ((n > 2) ? ed : 0.0);
    w.cprime[1] = (n > 2) ? -ed / diag1 : 0.0;
    w.rhs[1] /= diag1;
    for (int i = 2; i < n; ++i) {
      const double faces = (i + 1 < n ? 1.0 : 0.0) + 1.0;
      const double diag = 1.0 + 0.5 * coeffs.q_samples[i] * dt + ed * faces;
      const double denom = diag - (-ed) * w.cprime[i - 1];
      w.cprime[i] = -ed / denom;
      w.rhs[i] = (w.rhs[i] - (-ed) * w.rhs[i - 1]) / denom;
    }
    u_next[n - 1] = w.rhs[n - 1];
    for (int i = n - 2; i >= 1; --i) u_next[i] = w.rhs[i] - w.cprime[i] * u_next[i + 1];
  }

  const double w_r = bc.b_r * (u[n] - u[n - 1]);  // face fluxes at time n
  const double w_l = bc.b_l * (u[1] - u[0]);

  switch (mode) {
    case SystemMode::main: {
      const double f_old = -bc.A1 * eta1 - bc.A2 * eta2 - bc.Bt * w_r;
      const double kappa = bc.A2 + bc.Bt * bc.b_r;
      const double B = eta2 + s * eta1;
      const double eta1_new =
          (eta1 + s * f_old - s * kappa * B - s * bc.Bt * bc.b_r * (u_star - u_next[n - 1])) /
          (1.0 + s * bc.A1 + s * s * kappa);
      const double eta2_new = B + s * eta1_new;
      u_next[n] = eta2_new + u_star;

      const double g_old = -bc.G1 * zeta1 + bc.Mt * w_l;
      const double zeta1_new =
          (zeta1 + s * g_old + s * bc.Mt * bc.b_l * (u_next[1] - u[0] - s * zeta1)) /
          (1.0 + s * bc.G1 + s * s * bc.Mt * bc.b_l);
      u_next[0] = u[0] + s * (zeta1 + zeta1_new);

      eta1 = eta1_new;
      eta2 = eta2_new;
      zeta1 = zeta1_new;
      break;
    }
    case SystemMode::related: {
      const double f_old = -bc.Ar * eta - bc.Br * w_r;
      const double eta_new =
          (eta + s * f_old - s * bc.Br * bc.b_r * (u[n] + s * eta - u_next[n - 1])) /
          (1.0 + s * bc.Ar + s * s * bc.Br * bc.b_r);
      u_next[n] = u[n] + s * (eta + eta_new);

      const double g_old = -bc.Gr * zeta + bc.Mr * w_l;
      const double zeta_new =
          (zeta + s * g_old + s * bc.Mr * bc.b_l * (u_next[1] - u[0] - s * zeta)) /
          (1.0 + s * bc.Gr + s * s * bc.Mr * bc.b_l);
      u_next[0] = u[0] + s * (zeta + zeta_new);

      eta = eta_new;
      zeta = zeta_new;
      break;
    }
    case SystemMode::pinned:
      u_next[0] = u[0];
      u_next[n] = u[n];
      break;
  }
}

}  // namespace detail

/// Builds the t = 0 state; u_prev is seeded by a backward Taylor half-step so
/// the whole run stays second order.
inline WaveState initial_state(const InitialData& init, const CoefficientSet& coeffs,
                               const Grid& grid, SystemMode mode = SystemMode::main) {
  if (static_cast<int>(init.u0.size()) != grid.n_nodes() ||
      init.u0.size() != init.u1.size())
    throw LengthMismatch("initial data arrays must have N+1 nodes");
  WaveState st;
  st.t = 0.0;
  st.mode = mode;
  st.u = init.u0;
  st.u_prev.resize(init.u0.size());
  const auto L = detail::flux_laplacian(init.u0, coeffs, grid.dx);
  for (std::size_t i = 0; i < init.u0.size(); ++i) {
    const double acc = L[i] - coeffs.q_samples[i] * init.u1[i];
    st.u_prev[i] = init.u0[i] - grid.dt * init.u1[i] + 0.5 * grid.dt * grid.dt * acc;
  }
  st.eta1 = init.eta1_0;
  st.eta2 = init.eta2_0;
  st.zeta1 = init.zeta1_0;
  st.eta = init.eta_0;
  st.zeta = init.zeta_0;
  switch (mode) {
    case SystemMode::main:
      st.u_star = attractor_main(init);
      break;
    case SystemMode::related:
      st.u_star = coeffs.q0 && coeffs.q1
                      ? attractor_related(init, coeffs, AttractorVariant::corrected)
                      : 0.0;
      break;
    case SystemMode::pinned:
      st.u_star = 0.0;
      break;
  }
  return st;
}

inline WaveState fd_step(const WaveState& state, const CoefficientSet& coeffs,
                         const Grid& grid, double viscosity = 0.0) {
  detail::check_fd_preconditions(coeffs, grid);
  if (!all_finite(state.u) || !all_finite(state.u_prev))
    throw InstabilityDetected("non-finite state");
  const auto bc = detail::boundary_coefs(coeffs, grid);
  WaveState next = state;
  next.u_prev = state.u;
  detail::advance(next.u, state.u, state.u_prev, next.eta1, next.eta2, next.zeta1,
                  next.eta, next.zeta, state.u_star, state.mode, coeffs, grid, bc,
                  viscosity);
  next.t = state.t + grid.dt;
  if (!all_finite(next.u)) throw InstabilityDetected("non-finite state");
  return next;
}

struct SimulateOptions {
  SystemMode mode = SystemMode::main;
  int snapshot_stride = 0;  // snapshots every k-th record; 0 disables
  double energy_p = 2.0;
  double viscosity = 0.0;  // eps of the grid-scale velocity viscosity
};

/// Runs the solver to the horizon. Records land on integer step times with
/// time-centered velocity (one step of lookahead), so all recorded fields and
/// energies are second-order samples at the stated times.
inline Trajectory simulate(const InitialData& init, const CoefficientSet& coeffs,
                           const Grid& grid, double horizon, int record_stride,
                           SimulateOptions opts = {}) {
  detail::check_fd_preconditions(coeffs, grid);
  if (!(horizon > 0.0)) throw ConfigError("simulate: horizon must be positive");
  if (record_stride < 1) record_stride = 1;
  const auto bc = detail::boundary_coefs(coeffs, grid);

  WaveState st = initial_state(init, coeffs, grid, opts.mode);
  const std::int64_t steps =
      static_cast<std::int64_t>(std::llround(horizon / grid.dt));

  Trajectory traj;
  traj.mode = opts.mode;
  traj.n_cells = grid.n_cells;
  traj.dt = grid.dt;
  traj.record_dt = grid.dt * record_stride;
  traj.u_star = st.u_star;

  const std::size_t m = st.u.size();
  std::vector<double> u_next(m), ut(m);
  std::int64_t records = 0;

  // records the state (u_prev, u) at time t using the lookahead field u_next
  auto record = [&](const WaveState& s, const std::vector<double>& next_u) {
    for (std::size_t i = 0; i < m; ++i)
      ut[i] = (next_u[i] - s.u_prev[i]) / (2.0 * grid.dt);
    const auto ux = gradient(s.u, grid.dx);

    EnergyBreakdown e;
    e.p = opts.energy_p;
    e.e_interior = energy_interior(ut, ux, coeffs, opts.energy_p);
    switch (s.mode) {
      case SystemMode::main:
        e.e_boundary = energy_boundary_main(s.eta1, s.eta2, s.zeta1, coeffs, opts.energy_p);
        break;
      case SystemMode::related:
        e.e_boundary = (detail::pow_abs(s.eta, opts.energy_p) +
                        detail::pow_abs(s.zeta, opts.energy_p)) /
                       opts.energy_p;
        break;
      case SystemMode::pinned:
        e.e_boundary = 0.0;
        break;
    }
    e.e_total = e.e_interior + e.e_boundary;
    if (opts.energy_p == 2.0) e.dissipation = dissipation(s, coeffs, grid);

    traj.times.push_back(s.t);
    traj.energies.push_back(e);
    traj.energies_compat.push_back(energy_compatible(s, coeffs, grid));
    traj.dissipations.push_back(dissipation(s, coeffs, grid));
    if (s.mode == SystemMode::related) {
      traj.eta1s.push_back(s.eta);
      traj.eta2s.push_back(0.0);
      traj.zeta1s.push_back(s.zeta);
    } else {
      traj.eta1s.push_back(s.eta1);
      traj.eta2s.push_back(s.eta2);
      traj.zeta1s.push_back(s.zeta1);
    }
    traj.sup_devs.push_back(sup_deviation(s, s.u_star));
    if (opts.snapshot_stride > 0 && records % opts.snapshot_stride == 0) {
      traj.snapshot_times.push_back(s.t);
      traj.snapshot_u.push_back(s.u);
      traj.snapshot_ut.push_back(ut);
      traj.snapshot_ux.push_back(ux);
    }
    ++records;
  };

  // one step of lookahead keeps recorded velocities time-centered
  WaveState view;
  detail::StepWorkspace ws;
  for (std::int64_t k = 0; k <= steps; ++k) {
    const bool rec = (k % record_stride == 0);
    if (rec) {
      view = st;
      view.t = static_cast<double>(k) * grid.dt;
    }
    if (k == steps) traj.final_u = st.u;
    detail::advance(u_next, st.u, st.u_prev, st.eta1, st.eta2, st.zeta1, st.eta,
                    st.zeta, st.u_star, st.mode, coeffs, grid, bc, opts.viscosity, &ws);
    if (!all_finite(u_next)) throw InstabilityDetected("non-finite state during run");
    if (rec) record(view, u_next);
    st.u_prev.swap(st.u);
    st.u.swap(u_next);
    st.t = static_cast<double>(k + 1) * grid.dt;
  }
  return traj;
}

}  // namespace dynwave

#endif  // DYNWAVE_SOLVER_FD_HPP
