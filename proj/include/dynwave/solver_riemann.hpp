#ifndef DYNWAVE_SOLVER_RIEMANN_HPP
#define DYNWAVE_SOLVER_RIEMANN_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "dynwave/energy.hpp"
#include "dynwave/model.hpp"
#include "dynwave/solver_fd.hpp"
#include "dynwave/states.hpp"

// Exact-characteristics solver for the a == 1 system in Riemann variables
//   (d_t - d_x) rho = -(q/2)(rho + xi),   (d_t + d_x) xi = -(q/2)(rho + xi),
// coupled to the boundary ODE flow integrated by variation of constants.
// At unit CFL (dt = dx) transport is exact; the source is applied by the
// trapezoidal rule along each characteristic.

namespace dynwave {

// ---------------------------------------------------------------------------
// Small dense 3x3 helpers for the boundary flow

struct Mat3 {
  std::array<double, 9> a{};  // row major

  double& operator()(int i, int j) { return a[3 * i + j]; }
  double operator()(int i, int j) const { return a[3 * i + j]; }

  static Mat3 identity() {
    Mat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
  }
  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }
  std::array<double, 3> operator*(const std::array<double, 3>& v) const {
    std::array<double, 3> r{};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) r[i] += (*this)(i, k) * v[k];
    return r;
  }
  Mat3 operator+(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.a[i] = a[i] + o.a[i];
    return r;
  }
  Mat3 scaled(double s) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.a[i] = a[i] * s;
    return r;
  }
  double max_abs() const {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
  }
};

// Scaling-and-squaring matrix exponential; the Taylor series on the scaled
// block converges to machine precision since its norm is <= 1/2.
inline Mat3 expm(const Mat3& m) {
  int s = 0;
  double norm = m.max_abs() * 3.0;
  while (norm > 0.5 && s < 60) {
    norm *= 0.5;
    ++s;
  }
  const Mat3 b = m.scaled(std::ldexp(1.0, -s));
  Mat3 result = Mat3::identity();
  Mat3 term = Mat3::identity();
  for (int k = 1; k <= 24; ++k) {
    term = (term * b).scaled(1.0 / k);
    result = result + term;
  }
  for (int i = 0; i < s; ++i) result = result * result;
  return result;
}

// Boundary block in the ordering y = (eta2, eta1, zeta1):
//   d/dt eta2 = eta1
//   d/dt eta1 = -alpha1 eta1 - alpha2 eta2 - (beta1/2) (rho - xi)(t,1)
//   d/dt zeta1 = -gamma1 zeta1 + (mu1/2) (rho - xi)(t,0)
struct BoundaryFlowMatrices {
  Mat3 A;
  std::array<std::array<double, 2>, 3> B{};  // columns: (rho-xi)(1), (rho-xi)(0)
  Mat3 expA_dt;
  double dt = 0.0;
};

inline BoundaryFlowMatrices make_boundary_flow(const CoefficientSet& coeffs, double dt) {
  BoundaryFlowMatrices m;
  m.A(0, 1) = 1.0;
  m.A(1, 0) = -coeffs.alpha2;
  m.A(1, 1) = -coeffs.alpha1;
  m.A(2, 2) = -coeffs.gamma1;
  m.B[1][0] = -0.5 * coeffs.beta1;
  m.B[2][1] = 0.5 * coeffs.mu1;
  m.dt = dt;
  m.expA_dt = expm(m.A.scaled(dt));
  return m;
}

/// One step of the variation-of-constants formula with trapezoidal Duhamel
/// quadrature, for prescribed endpoint traces v = ((rho-xi)(1), (rho-xi)(0)).
inline std::array<double, 3> boundary_flow(const std::array<double, 3>& y,
                                           const std::array<double, 2>& v_old,
                                           const std::array<double, 2>& v_new,
                                           const BoundaryFlowMatrices& m) {
  std::array<double, 3> acc = y;
  for (int i = 0; i < 3; ++i)
    acc[i] += 0.5 * m.dt * (m.B[i][0] * v_old[0] + m.B[i][1] * v_old[1]);
  std::array<double, 3> out = m.expA_dt * acc;
  for (int i = 0; i < 3; ++i)
    out[i] += 0.5 * m.dt * (m.B[i][0] * v_new[0] + m.B[i][1] * v_new[1]);
  return out;
}

// ---------------------------------------------------------------------------
// Riemann variable maps

inline std::pair<std::vector<double>, std::vector<double>> to_riemann(
    const std::vector<double>& v, const std::vector<double>& w) {
  if (v.size() != w.size()) throw LengthMismatch("to_riemann: array sizes differ");
  std::vector<double> rho(v.size()), xi(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    rho[i] = v[i] + w[i];
    xi[i] = v[i] - w[i];
  }
  return {std::move(rho), std::move(xi)};
}

inline std::pair<std::vector<double>, std::vector<double>> from_riemann(
    const std::vector<double>& rho, const std::vector<double>& xi) {
  if (rho.size() != xi.size()) throw LengthMismatch("from_riemann: array sizes differ");
  std::vector<double> v(rho.size()), w(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    v[i] = 0.5 * (rho[i] + xi[i]);
    w[i] = 0.5 * (rho[i] - xi[i]);
  }
  return {std::move(v), std::move(w)};
}

namespace detail {

inline void check_riemann_preconditions(const CoefficientSet& coeffs, const Grid& grid) {
  if (grid.dt != grid.dx) throw NonUnitCfl("riemann solver requires dt = dx");
  if (std::abs(coeffs.a_lo - 1.0) > 1e-12 || std::abs(coeffs.a_hi - 1.0) > 1e-12)
    throw RequiresConstantSpeed("riemann solver requires a == 1");
  if (grid.n_cells < 3) throw GridTooCoarse("riemann solver needs N >= 3");
}

// Interior transport + source for one step. Writes rho/xi at t+dt everywhere
// except the wall closures, and returns the incoming-characteristic payloads
//   A_N = transported xi arriving at x = 1,  B_0 = transported rho at x = 0.
struct InteriorResult {
  double a_n = 0.0;  // xi payload at the right wall
  double b_0 = 0.0;  // rho payload at the left wall
};

inline InteriorResult interior_sweep(const std::vector<double>& rho,
                                     const std::vector<double>& xi,
                                     const std::vector<double>& q, double dt,
                                     std::vector<double>& rho_new,
                                     std::vector<double>& xi_new) {
  const std::size_t n = rho.size() - 1;
  InteriorResult r;
  // payloads: value at the characteristic foot plus the explicit half source
  for (std::size_t i = 1; i < n; ++i) {
    const double A = xi[i - 1] - 0.25 * dt * q[i - 1] * (rho[i - 1] + xi[i - 1]);
    const double B = rho[i + 1] - 0.25 * dt * q[i + 1] * (rho[i + 1] + xi[i + 1]);
    const double c = 0.25 * dt * q[i];
    const double sum = (A + B) / (1.0 + 2.0 * c);
    xi_new[i] = A - c * sum;
    rho_new[i] = B - c * sum;
  }
  r.a_n = xi[n - 1] - 0.25 * dt * q[n - 1] * (rho[n - 1] + xi[n - 1]);
  r.b_0 = rho[1] - 0.25 * dt * q[1] * (rho[1] + xi[1]);
  return r;
}

}  // namespace detail

/// One step of the boundary-coupled system. The wall closures and the Duhamel
/// quadrature are solved together so that (rho+xi)(t,1) = 2 eta1 and
/// (rho+xi)(t,0) = 2 zeta1 hold exactly after the step.
inline RiemannState riemann_step(const RiemannState& state, const CoefficientSet& coeffs,
                                 const Grid& grid, const BoundaryFlowMatrices& flow) {
  detail::check_riemann_preconditions(coeffs, grid);
  const std::size_t n = state.rho.size() - 1;
  const double dt = grid.dt;
  const auto& q = coeffs.q_samples;

  RiemannState next = state;
  next.t = state.t + dt;
  const auto inc = detail::interior_sweep(state.rho, state.xi, q, dt, next.rho, next.xi);

  // Duhamel: explicit part r = e^{A dt} (y + dt/2 B v_old), then the v_new
  // contribution with the wall closure substituted, solved scalar-implicitly.
  const std::array<double, 3> y{state.eta2, state.eta1, state.zeta1};
  const std::array<double, 2> v_old{state.rho[n] - state.xi[n],
                                    state.rho[0] - state.xi[0]};
  std::array<double, 3> acc = y;
  for (int i = 0; i < 3; ++i)
    acc[i] += 0.5 * dt * (flow.B[i][0] * v_old[0] + flow.B[i][1] * v_old[1]);
  const std::array<double, 3> r = flow.expA_dt * acc;

  const double c_n = 0.25 * dt * q[n];
  const double c_0 = 0.25 * dt * q[0];
  // v_new at x=1 is (2 + 4 c_n) eta1' - 2 A_N; at x=0 it is 2 B_0 - (2 + 4 c_0) zeta1'
  const double eta1_new = (r[1] + 0.5 * dt * coeffs.beta1 * inc.a_n) /
                          (1.0 + 0.25 * dt * coeffs.beta1 * (2.0 + 4.0 * c_n));
  const double zeta1_new = (r[2] + 0.5 * dt * coeffs.mu1 * inc.b_0) /
                           (1.0 + 0.25 * dt * coeffs.mu1 * (2.0 + 4.0 * c_0));
  next.eta2 = r[0];
  next.eta1 = eta1_new;
  next.zeta1 = zeta1_new;

  next.xi[n] = inc.a_n - 2.0 * c_n * eta1_new;
  next.rho[n] = 2.0 * eta1_new - next.xi[n];
  next.rho[0] = inc.b_0 - 2.0 * c_0 * zeta1_new;
  next.xi[0] = 2.0 * zeta1_new - next.rho[0];

  if (!all_finite(next.rho) || !all_finite(next.xi))
    throw InstabilityDetected("non-finite riemann state");
  return next;
}

inline RiemannState initial_riemann_state(const InitialData& init, const Grid& grid) {
  if (static_cast<int>(init.u0.size()) != grid.n_nodes() ||
      init.u0.size() != init.u1.size())
    throw LengthMismatch("initial data arrays must have N+1 nodes");
  RiemannState st;
  st.t = 0.0;
  const auto u0x = gradient(init.u0, grid.dx);
  auto [rho, xi] = to_riemann(init.u1, u0x);
  st.rho = std::move(rho);
  st.xi = std::move(xi);
  st.eta1 = init.eta1_0;
  st.eta2 = init.eta2_0;
  st.zeta1 = init.zeta1_0;
  return st;
}

/// Boundary-coupled run recording the same Trajectory layout as the FD solver
/// (fields reconstructed from the characteristic variables).
inline Trajectory simulate_riemann(const InitialData& init, const CoefficientSet& coeffs,
                                   const Grid& grid, double horizon, int record_stride,
                                   int snapshot_stride = 0, double energy_p = 2.0) {
  detail::check_riemann_preconditions(coeffs, grid);
  RiemannState st = initial_riemann_state(init, grid);
  const auto flow = make_boundary_flow(coeffs, grid.dt);
  const double u_star = attractor_main(init);
  const std::int64_t steps =
      static_cast<std::int64_t>(std::llround(horizon / grid.dt));

  Trajectory traj;
  traj.mode = SystemMode::main;
  traj.n_cells = grid.n_cells;
  traj.dt = grid.dt;
  traj.record_dt = grid.dt * record_stride;
  traj.u_star = u_star;

  std::int64_t records = 0;
  auto record = [&](const RiemannState& s) {
    auto [ut, ux] = from_riemann(s.rho, s.xi);
    EnergyBreakdown e;
    e.p = energy_p;
    e.e_interior = energy_interior(ut, ux, coeffs, energy_p);
    e.e_boundary = energy_boundary_main(s.eta1, s.eta2, s.zeta1, coeffs, energy_p);
    e.e_total = e.e_interior + e.e_boundary;
    if (energy_p == 2.0)
      e.dissipation = dissipation_fields(ut, coeffs, s.eta1, s.zeta1);
    traj.times.push_back(s.t);
    traj.energies.push_back(e);
    traj.dissipations.push_back(e.dissipation);
    traj.eta1s.push_back(s.eta1);
    traj.eta2s.push_back(s.eta2);
    traj.zeta1s.push_back(s.zeta1);
    traj.sup_devs.push_back(0.0);  // displacement is not carried here
    if (snapshot_stride > 0 && records % snapshot_stride == 0) {
      traj.snapshot_times.push_back(s.t);
      traj.snapshot_u.emplace_back();
      traj.snapshot_ut.push_back(std::move(ut));
      traj.snapshot_ux.push_back(std::move(ux));
    }
    ++records;
  };

  record(st);
  for (std::int64_t k = 1; k <= steps; ++k) {
    st = riemann_step(st, coeffs, grid, flow);
    if (k % record_stride == 0) record(st);
  }
  return traj;
}

// ---------------------------------------------------------------------------
// Forced boundary experiment (ISS estimate): walls driven by prescribed
// h1 = (rho+xi)(t,0) and h2 = (rho+xi)(t,1) instead of the ODE triple.

struct ForcedRun {
  std::vector<double> times;
  std::vector<double> ehat;  // \hat E_p(t)
  RiemannState final_state;
};

inline ForcedRun simulate_forced(std::vector<double> rho0, std::vector<double> xi0,
                                 const CoefficientSet& coeffs, const Grid& grid,
                                 const std::vector<double>& h1,
                                 const std::vector<double>& h2, double p,
                                 double horizon, int record_stride = 1) {
  detail::check_riemann_preconditions(coeffs, grid);
  if (rho0.size() != xi0.size()) throw LengthMismatch("simulate_forced: rho0/xi0");
  if (p < 1.0) throw InvalidExponent("simulate_forced: p must be >= 1");
  const std::int64_t steps =
      static_cast<std::int64_t>(std::llround(horizon / grid.dt));
  if (static_cast<std::int64_t>(h1.size()) < steps + 1 ||
      static_cast<std::int64_t>(h2.size()) < steps + 1)
    throw LengthMismatch("simulate_forced: boundary inputs shorter than the run");

  RiemannState st;
  st.rho = std::move(rho0);
  st.xi = std::move(xi0);
  const std::size_t n = st.rho.size() - 1;
  const auto& q = coeffs.q_samples;
  const double dt = grid.dt;

  ForcedRun run;
  auto record = [&](const RiemannState& s) {
    run.times.push_back(s.t);
    run.ehat.push_back(ehat_p(s.rho, s.xi, p));
  };
  record(st);

  RiemannState next = st;
  for (std::int64_t k = 1; k <= steps; ++k) {
    const auto inc = detail::interior_sweep(st.rho, st.xi, q, dt, next.rho, next.xi);
    const double c_n = 0.25 * dt * q[n];
    const double c_0 = 0.25 * dt * q[0];
    // incoming characteristics closed with the prescribed wall sums
    next.xi[n] = inc.a_n - c_n * h2[static_cast<std::size_t>(k)];
    next.rho[n] = h2[static_cast<std::size_t>(k)] - next.xi[n];
    next.rho[0] = inc.b_0 - c_0 * h1[static_cast<std::size_t>(k)];
    next.xi[0] = h1[static_cast<std::size_t>(k)] - next.rho[0];
    next.t = static_cast<double>(k) * dt;
    std::swap(st, next);
    if (!all_finite(st.rho) || !all_finite(st.xi))
      throw InstabilityDetected("non-finite forced riemann state");
    if (k % record_stride == 0) record(st);
  }
  run.final_state = std::move(st);
  return run;
}

}  // namespace dynwave

#endif  // DYNWAVE_SOLVER_RIEMANN_HPP
