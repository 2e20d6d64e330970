#ifndef DYNWAVE_STATES_HPP
#define DYNWAVE_STATES_HPP

#include <cmath>
#include <vector>

#include "dynwave/model.hpp"

namespace dynwave {

enum class SystemMode {
  main,     // Wentzell boundary triple (eta1, eta2, zeta1) with integrator
  related,  // second-order dynamic boundary pair (eta, zeta), no integrator
  pinned,   // u_t = 0 walls; oracle mode for the q == 0 core
};

// Snapshot of the second-order solver. Velocity is reconstructed as
// (u - u_prev)/dt, which is second-order accurate at t - dt/2.
struct WaveState {
  double t = 0.0;
  std::vector<double> u;
  std::vector<double> u_prev;
  SystemMode mode = SystemMode::main;
  double eta1 = 0.0, eta2 = 0.0, zeta1 = 0.0;  // main mode
  double eta = 0.0, zeta = 0.0;                // related mode
  double u_star = 0.0;

  std::vector<double> velocity(const Grid& grid) const {
    std::vector<double> v(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) v[i] = (u[i] - u_prev[i]) / grid.dt;
    return v;
  }
};

// Characteristic variables of the a == 1 system: rho = u_t + u_x moves left,
// xi = u_t - u_x moves right.
struct RiemannState {
  double t = 0.0;
  std::vector<double> rho;
  std::vector<double> xi;
  double eta1 = 0.0, eta2 = 0.0, zeta1 = 0.0;
};

// Nodal derivative: centered in the interior, second-order one-sided at walls.
// The wall stencils match the solver's boundary traces.
inline std::vector<double> gradient(const std::vector<double>& u, double dx) {
  const std::size_t n = u.size();
  std::vector<double> g(n);
  if (n < 3) throw GridTooCoarse("gradient needs at least 3 nodes");
  g[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * dx);
  for (std::size_t i = 1; i + 1 < n; ++i) g[i] = (u[i + 1] - u[i - 1]) / (2.0 * dx);
  g[n - 1] = (3.0 * u[n - 1] - 4.0 * u[n - 2] + u[n - 3]) / (2.0 * dx);
  return g;
}

inline bool all_finite(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::isfinite(s);
}

}  // namespace dynwave

#endif  // DYNWAVE_STATES_HPP
