#ifndef DYNWAVE_ORACLES_HPP
#define DYNWAVE_ORACLES_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "dynwave/model.hpp"
#include "dynwave/solver_fd.hpp"

// Independent reference solutions used by tests and acceptance runs.

namespace dynwave {

struct ComparisonReport {
  double max_abs_error = 0.0;
  double l2_error = 0.0;
  double convergence_ratio = 0.0;  // error(dx) / error(dx/2); set by studies
  double e2_max_rel_diff = 0.0;    // energy series agreement
};

inline double refinement_ratio(double coarse_error, double fine_error) {
  return fine_error > 0.0 ? coarse_error / fine_error
                          : std::numeric_limits<double>::infinity();
}

namespace detail {

// Linear interpolation of nodal samples on [0,1].
inline double interp_unit(const std::vector<double>& f, double x) {
  const int n = static_cast<int>(f.size()) - 1;
  double s = x * n;
  int i = static_cast<int>(std::floor(s));
  if (i < 0) i = 0;
  if (i >= n) i = n - 1;
  const double t = s - i;
  return (1.0 - t) * f[i] + t * f[i + 1];
}

// Folds a coordinate into [0,1] under the 2-periodic odd extension;
// returns the sign carried by the reflection.
inline double fold_odd(double x, double& sign) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r <= 1.0) {
    sign = 1.0;
    return r;
  }
  sign = -1.0;
  return 2.0 - r;
}

// Even 2-periodic fold (for the antiderivative of an odd function).
inline double fold_even(double x) {
  double r = std::fmod(std::abs(x), 2.0);
  return r <= 1.0 ? r : 2.0 - r;
}

}  // namespace detail

/// Exact solution of w_tt = w_xx with homogeneous Dirichlet walls, evaluated by
/// the reflected d'Alembert formula. w0, w1 are nodal samples on [0,1]; the w1
/// integral uses the trapezoidal antiderivative on the sample grid.
inline double dalembert_reference(const std::vector<double>& w0,
                                  const std::vector<double>& w1, double t, double x) {
  double s_plus = 1.0, s_minus = 1.0;
  const double xp = detail::fold_odd(x + t, s_plus);
  const double xm = detail::fold_odd(x - t, s_minus);
  const double travelling =
      0.5 * (s_plus * detail::interp_unit(w0, xp) + s_minus * detail::interp_unit(w0, xm));

  // antiderivative V of the odd 2-periodic extension of w1 is even 2-periodic
  const int n = static_cast<int>(w1.size()) - 1;
  const double dx = 1.0 / n;
  std::vector<double> V(w1.size(), 0.0);
  for (int i = 1; i <= n; ++i) V[i] = V[i - 1] + 0.5 * dx * (w1[i - 1] + w1[i]);
  const double integral = detail::interp_unit(V, detail::fold_even(x + t)) -
                          detail::interp_unit(V, detail::fold_even(x - t));
  return travelling + 0.5 * integral;
}

/// Vector version on the sample grid.
inline std::vector<double> dalembert_reference_profile(const std::vector<double>& w0,
                                                       const std::vector<double>& w1,
                                                       double t) {
  const int n = static_cast<int>(w0.size()) - 1;
  const double dx = 1.0 / n;
  std::vector<double> V(w1.size(), 0.0);
  for (int i = 1; i <= n; ++i) V[i] = V[i - 1] + 0.5 * dx * (w1[i - 1] + w1[i]);
  std::vector<double> out(w0.size());
  for (int i = 0; i <= n; ++i) {
    const double x = i * dx;
    double s_plus = 1.0, s_minus = 1.0;
    const double xp = detail::fold_odd(x + t, s_plus);
    const double xm = detail::fold_odd(x - t, s_minus);
    out[i] = 0.5 * (s_plus * detail::interp_unit(w0, xp) +
                    s_minus * detail::interp_unit(w0, xm)) +
             0.5 * (detail::interp_unit(V, detail::fold_even(x + t)) -
                    detail::interp_unit(V, detail::fold_even(x - t)));
  }
  return out;
}

/// Max/L2 differences of the reconstructed (u_t, u_x) fields and the energy
/// series of two trajectories recorded on matching grids and times.
inline ComparisonReport cross_validate(const Trajectory& a, const Trajectory& b) {
  if (a.n_cells != b.n_cells) throw GridMismatch("cross_validate: different grids");
  const std::size_t ns = std::min(a.snapshot_times.size(), b.snapshot_times.size());
  if (ns == 0) throw GridMismatch("cross_validate: no snapshots to compare");
  ComparisonReport rep;
  double sq_sum = 0.0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < ns; ++k) {
    if (std::abs(a.snapshot_times[k] - b.snapshot_times[k]) > 1e-9)
      throw GridMismatch("cross_validate: snapshot times differ");
    for (std::size_t i = 0; i < a.snapshot_ut[k].size(); ++i) {
      const double dut = a.snapshot_ut[k][i] - b.snapshot_ut[k][i];
      const double dux = a.snapshot_ux[k][i] - b.snapshot_ux[k][i];
      rep.max_abs_error = std::max({rep.max_abs_error, std::abs(dut), std::abs(dux)});
      sq_sum += dut * dut + dux * dux;
      ++count;
    }
  }
  rep.l2_error = std::sqrt(sq_sum / static_cast<double>(count));

  const std::size_t nt = std::min(a.times.size(), b.times.size());
  double e_scale = 0.0;
  for (std::size_t k = 0; k < nt; ++k)
    e_scale = std::max(e_scale, std::abs(a.energies[k].e_total));
  for (std::size_t k = 0; k < nt; ++k) {
    const double d = std::abs(a.energies[k].e_total - b.energies[k].e_total);
    if (e_scale > 0.0) rep.e2_max_rel_diff = std::max(rep.e2_max_rel_diff, d / e_scale);
  }
  return rep;
}

/// Relative energy drift of a conservative (q == 0, pinned walls) run.
inline double conservation_check(const Trajectory& traj) {
  if (traj.energies.empty()) throw ZeroInitialEnergy("conservation_check: empty run");
  const double e0 = traj.energies.front().e_total;
  double emax = 0.0, drift = 0.0;
  for (const auto& e : traj.energies) emax = std::max(emax, std::abs(e.e_total));
  if (!(e0 > 0.0)) {
    if (emax == 0.0) return 0.0;
    throw ZeroInitialEnergy("conservation_check: zero initial energy");
  }
  for (const auto& e : traj.energies)
    drift = std::max(drift, std::abs(e.e_total - e0) / e0);
  return drift;
}

}  // namespace dynwave

#endif  // DYNWAVE_ORACLES_HPP
