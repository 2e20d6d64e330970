#ifndef DYNWAVE_SPECTRAL_HPP
#define DYNWAVE_SPECTRAL_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <mutex>
#include <random>
#include <thread>
#include <utility>
#include <vector>

#include "dynwave/model.hpp"

// Discretization of the semigroup generator on the constrained energy space,
// spectrum and resolvent-sweep computations in the weighted (energy) norm,
// and the dissipativity identity check.
//
// State layout: [ g_0 .. g_{N-1} | v_1 .. v_{N-1} | eta1 eta2 zeta1 ] where
// g_i = (u_{i+1} - u_i)/dx is the slope on cell i. The constraints
// u(1) = eta2, v(1) = eta1, v(0) = zeta1 are eliminated, so the Gram form
// (the discrete energy inner product) is a genuine norm.

namespace dynwave {

struct GeneratorMatrix {
  int n_cells = 0;
  int dim = 0;
  double viscosity = 0.0;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd gram_weights;

  int g_slot(int i) const { return i; }
  int v_slot(int i) const { return n_cells + (i - 1); }
  int eta1_slot() const { return 2 * n_cells - 1; }
  int eta2_slot() const { return 2 * n_cells; }
  int zeta1_slot() const { return 2 * n_cells + 1; }
};

struct SpectralReport {
  std::vector<std::complex<double>> eigenvalues;  // sorted by real part, descending
  double abscissa = 0.0;
  bool h1_ok = false;  // no eigenvalue with Re >= -1e-10
  std::vector<std::pair<double, double>> resolvent_samples;  // (lambda, norm)
  double resolvent_sup = 0.0;
  double resolvent_argmax = 0.0;
  double dissipativity_residual = 0.0;
  double max_re_form = 0.0;  // max Re<A U, U>_W over samples; must be <= 0
};

inline GeneratorMatrix assemble_generator(const CoefficientSet& coeffs, int n_cells,
                                          double viscosity = 0.0) {
  if (n_cells < 8) throw GridTooCoarse("assemble_generator needs N >= 8");
  if (static_cast<int>(coeffs.a_samples.size()) != n_cells + 1)
    throw LengthMismatch("assemble_generator: coefficient grid mismatch");
  GeneratorMatrix gen;
  gen.n_cells = n_cells;
  gen.dim = 2 * n_cells + 2;
  gen.matrix = Eigen::MatrixXd::Zero(gen.dim, gen.dim);
  gen.gram_weights = Eigen::VectorXd::Zero(gen.dim);
  gen.viscosity = viscosity;

  const int n = n_cells;
  const double dx = 1.0 / n;
  auto& M = gen.matrix;

  // dg_i/dt = (v_{i+1} - v_i)/dx with v_0 = zeta1 and v_N = eta1 substituted
  for (int i = 0; i < n; ++i) {
    const int row = gen.g_slot(i);
    const int up = (i + 1 == n) ? gen.eta1_slot() : gen.v_slot(i + 1);
    const int lo = (i == 0) ? gen.zeta1_slot() : gen.v_slot(i);
    M(row, up) += 1.0 / dx;
    M(row, lo) -= 1.0 / dx;
  }
  // dv_i/dt = (a_{i+1/2} g_i - a_{i-1/2} g_{i-1})/dx - q_i v_i, plus the
  // grid-scale velocity viscosity (zero flux through the outermost faces)
  for (int i = 1; i < n; ++i) {
    const int row = gen.v_slot(i);
    M(row, gen.g_slot(i)) += coeffs.a_mid(i) / dx;
    M(row, gen.g_slot(i - 1)) -= coeffs.a_mid(i - 1) / dx;
    M(row, gen.v_slot(i)) -= coeffs.q_samples[i];
    if (viscosity > 0.0) {
      if (i + 1 < n) {
        M(row, gen.v_slot(i + 1)) += viscosity;
        M(row, gen.v_slot(i)) -= viscosity;
      }
      if (i - 1 > 0) {
        M(row, gen.v_slot(i - 1)) += viscosity;
        M(row, gen.v_slot(i)) -= viscosity;
      }
    }
  }
  // Boundary trace: face flux of the last cell corrected through the PDE,
  // a(1) u_x(1) = a_{N-1/2} g_{N-1} + (dx/2)(v_t + q v)(1), with v_t(1)
  // eliminated by the eta1 equation. Second order, and the energy pairing
  // with weights c1 + dx/2, c2, c3 + dx/2 telescopes exactly (the dx/2 is the
  // trapezoid wall-kinetic weight).
  const double a1 = coeffs.a1(), a0 = coeffs.a0();
  const double qn = coeffs.q_samples[n], q0s = coeffs.q_samples[0];
  const double er = coeffs.beta1 * dx / (2.0 * a1);
  const double el = coeffs.mu1 * dx / (2.0 * a0);
  M(gen.eta1_slot(), gen.eta1_slot()) =
      -(coeffs.alpha1 + coeffs.beta1 * qn * dx / (2.0 * a1)) / (1.0 + er);
  M(gen.eta1_slot(), gen.eta2_slot()) = -coeffs.alpha2 / (1.0 + er);
  M(gen.eta1_slot(), gen.g_slot(n - 1)) =
      -(coeffs.beta1 / a1) / (1.0 + er) * coeffs.a_mid(n - 1);
  M(gen.eta2_slot(), gen.eta1_slot()) = 1.0;
  M(gen.zeta1_slot(), gen.zeta1_slot()) =
      -(coeffs.gamma1 + coeffs.mu1 * q0s * dx / (2.0 * a0)) / (1.0 + el);
  M(gen.zeta1_slot(), gen.g_slot(0)) =
      (coeffs.mu1 / a0) / (1.0 + el) * coeffs.a_mid(0);

  for (int i = 0; i < n; ++i) gen.gram_weights[gen.g_slot(i)] = coeffs.a_mid(i) * dx;
  for (int i = 1; i < n; ++i) gen.gram_weights[gen.v_slot(i)] = dx;
  gen.gram_weights[gen.eta1_slot()] = a1 / coeffs.beta1 + 0.5 * dx;          // c1 + dx/2
  gen.gram_weights[gen.eta2_slot()] = a1 * coeffs.alpha2 / coeffs.beta1;     // c2
  gen.gram_weights[gen.zeta1_slot()] = a0 / coeffs.mu1 + 0.5 * dx;           // c3 + dx/2
  return gen;
}

/// All eigenvalues plus the spectral abscissa.
inline SpectralReport spectrum(const GeneratorMatrix& gen) {
  if (gen.dim > 5000) throw EigensolverFailure("dense eigensolver budget is dim <= 5000");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(gen.matrix, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw EigensolverFailure("eigen decomposition did not converge");
  SpectralReport rep;
  rep.eigenvalues.resize(gen.dim);
  for (int i = 0; i < gen.dim; ++i) rep.eigenvalues[i] = solver.eigenvalues()[i];
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
            [](auto a, auto b) { return a.real() > b.real(); });
  rep.abscissa = rep.eigenvalues.front().real();
  rep.h1_ok = rep.abscissa < -1e-10;
  return rep;
}

namespace detail {

// Similarity transform W^{1/2} M W^{-1/2}: operator norms in the weighted
// inner product become plain 2-norms.
inline Eigen::MatrixXd weighted_similarity(const GeneratorMatrix& gen) {
  Eigen::VectorXd d = gen.gram_weights.array().sqrt();
  Eigen::MatrixXd sym = gen.matrix;
  for (int i = 0; i < gen.dim; ++i)
    for (int j = 0; j < gen.dim; ++j) sym(i, j) *= d[i] / d[j];
  return sym;
}

}  // namespace detail

// Reusable context for resolvent-norm evaluations at many lambda values.
// One orthogonal Hessenberg reduction of the weighted matrix up front; each
// lambda then costs O(n^2): a complex Givens QR of the shifted Hessenberg
// matrix plus power iteration on the inverse normal operator.
class ResolventOperator {
 public:
  explicit ResolventOperator(const GeneratorMatrix& gen) {
    const Eigen::MatrixXd sym = detail::weighted_similarity(gen);
    if (sym.rows() > 2) {
      Eigen::HessenbergDecomposition<Eigen::MatrixXd> hd(sym);
      hess_ = hd.matrixH();  // singular values are invariant under Q
    } else {
      hess_ = sym;
    }
  }

  /// ||(i lambda I - A)^{-1}|| in the energy norm (1/sigma_min of the shift).
  double norm_at(double lambda) const {
    const int n = static_cast<int>(hess_.rows());
    // C = i lambda I - H, upper Hessenberg
    Eigen::MatrixXcd R = (-hess_).cast<std::complex<double>>();
    R.diagonal().array() += std::complex<double>(0.0, lambda);

    // Givens QR: U_{n-2} ... U_0 C = R with U_k = [[conj(c), conj(s)], [-s, c]]
    std::vector<std::complex<double>> cs(std::max(0, n - 1)), sn(std::max(0, n - 1));
    double min_diag = std::numeric_limits<double>::infinity();
    double max_diag = 0.0;
    for (int k = 0; k + 1 < n; ++k) {
      const std::complex<double> a = R(k, k), b = R(k + 1, k);
      const double r = std::hypot(std::abs(a), std::abs(b));
      if (r == 0.0) {
        cs[k] = 1.0;
        sn[k] = 0.0;
        continue;
      }
      const std::complex<double> c = a / r, s = b / r;
      cs[k] = c;
      sn[k] = s;
      for (int j = k; j < n; ++j) {
        const std::complex<double> top = R(k, j), bot = R(k + 1, j);
        R(k, j) = std::conj(c) * top + std::conj(s) * bot;
        R(k + 1, j) = -s * top + c * bot;
      }
    }
    for (int k = 0; k < n; ++k) {
      min_diag = std::min(min_diag, std::abs(R(k, k)));
      max_diag = std::max(max_diag, std::abs(R(k, k)));
    }
    if (!(min_diag > max_diag * 1e-15))
      throw SingularAtLambda("sigma_min at rounding level: imaginary-axis eigenvalue");

    auto solve = [&](Eigen::VectorXcd v) {  // x = C^{-1} v
      for (int k = 0; k + 1 < n; ++k) {
        const std::complex<double> top = v[k], bot = v[k + 1];
        v[k] = std::conj(cs[k]) * top + std::conj(sn[k]) * bot;
        v[k + 1] = -sn[k] * top + cs[k] * bot;
      }
      for (int i = n - 1; i >= 0; --i) {
        std::complex<double> acc = v[i];
        for (int j = i + 1; j < n; ++j) acc -= R(i, j) * v[j];
        v[i] = acc / R(i, i);
      }
      return v;
    };
    auto solve_adjoint = [&](Eigen::VectorXcd v) {  // y = C^{-H} v
      // C^H = R^H U_{n-2} ... U_0, so forward-substitute R^H then undo rotations
      for (int i = 0; i < n; ++i) {
        std::complex<double> acc = v[i];
        for (int j = 0; j < i; ++j) acc -= std::conj(R(j, i)) * v[j];
        v[i] = acc / std::conj(R(i, i));
      }
      for (int k = n - 2; k >= 0; --k) {
        const std::complex<double> top = v[k], bot = v[k + 1];
        v[k] = cs[k] * top - std::conj(sn[k]) * bot;
        v[k + 1] = sn[k] * top + std::conj(cs[k]) * bot;
      }
      return v;
    };

    Eigen::VectorXcd x(n);
    for (int i = 0; i < n; ++i)
      x[i] = std::complex<double>(std::cos(0.7 * (i + 1)), std::sin(1.3 * (i + 1)));
    x.normalize();
    double value = 0.0;
    for (int it = 0; it < 500; ++it) {
      Eigen::VectorXcd w = solve_adjoint(solve(x));
      const double nw = w.norm();
      if (!std::isfinite(nw))
        throw SingularAtLambda("resolvent is singular on the sampled axis point");
      if (nw == 0.0) return 0.0;
      const double next = std::sqrt(nw);  // |w| approximates ||C^{-1}||^2
      w /= nw;
      x.swap(w);
      if (it > 3 && std::abs(next - value) <= 1e-9 * next) {
        value = next;
        break;
      }
      value = next;
    }
    if (1.0 / value < 1e-14)
      throw SingularAtLambda("sigma_min below 1e-14: imaginary-axis eigenvalue");
    return value;
  }

 private:
  Eigen::MatrixXd hess_;
};

/// Samples the resolvent norm on a lambda grid (parallel across samples).
inline std::vector<std::pair<double, double>> resolvent_sweep(
    const GeneratorMatrix& gen, const std::vector<double>& lambda_grid) {
  ResolventOperator op(gen);
  std::vector<std::pair<double, double>> samples(lambda_grid.size());
  const unsigned workers =
      std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  std::atomic<std::size_t> cursor{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = cursor.fetch_add(1); k < lambda_grid.size();
           k = cursor.fetch_add(1)) {
        try {
          samples[k] = {lambda_grid[k], op.norm_at(lambda_grid[k])};
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!err) err = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return samples;
}

/// Refines the sup of the resolvent norm. Starts from the sampled local maxima
/// and the imaginary parts of the least-damped eigenvalues, then contracts a
/// local grid around each candidate.
inline std::pair<double, double> resolvent_sup_refined(
    const GeneratorMatrix& gen, const std::vector<std::pair<double, double>>& samples,
    const std::vector<std::complex<double>>& eigenvalues, double tol = 5e-3) {
  ResolventOperator op(gen);
  std::vector<std::pair<double, double>> candidates;  // (lambda, norm)

  for (std::size_t k = 0; k < samples.size(); ++k) {
    const bool up = k == 0 || samples[k].second >= samples[k - 1].second;
    const bool down =
        k + 1 == samples.size() || samples[k].second >= samples[k + 1].second;
    if (up && down) candidates.push_back(samples[k]);
  }
  std::sort(candidates.begin(), candidates.end(),
            [](auto a, auto b) { return a.second > b.second; });
  if (candidates.size() > 6) candidates.resize(6);

  // near-axis eigenvalues mark the likely resonance peaks
  std::vector<std::pair<double, double>> eig_sorted;
  for (const auto& ev : eigenvalues)
    if (ev.imag() >= 0.0) eig_sorted.push_back({ev.real(), ev.imag()});
  std::sort(eig_sorted.begin(), eig_sorted.end(),
            [](auto a, auto b) { return a.first > b.first; });
  for (std::size_t k = 0; k < std::min<std::size_t>(6, eig_sorted.size()); ++k)
    candidates.push_back({eig_sorted[k].second, op.norm_at(eig_sorted[k].second)});

  double best_norm = 0.0, best_lambda = 0.0;
  for (auto [lambda0, norm0] : candidates) {
    double center = lambda0, value = norm0, step = 0.5;
    while (step > tol) {
      for (double c : {center - step, center + step}) {
        const double v = op.norm_at(c);
        if (v > value) {
          value = v;
          center = c;
        }
      }
      step *= 0.5;
    }
    if (value > best_norm) {
      best_norm = value;
      best_lambda = center;
    }
  }
  return {best_norm, best_lambda};
}

struct DissipativityResult {
  double residual = 0.0;     // max |Re<A U,U>_W + Q(U)| / ||U||_W^2
  double max_re_form = 0.0;  // max Re<A U,U>_W / ||U||_W^2
};

/// Checks the discrete energy identity Re<A U, U>_W = -(int q |v|^2 +
/// c1 alpha1 |eta1|^2 + c3 gamma1 |zeta1|^2) on random complex vectors.
inline DissipativityResult dissipativity_residual(const GeneratorMatrix& gen,
                                                  const CoefficientSet& coeffs,
                                                  int n_samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n = gen.n_cells;
  const double dx = 1.0 / n;
  DissipativityResult out;
  out.max_re_form = -std::numeric_limits<double>::infinity();

  Eigen::VectorXcd U(gen.dim), AU(gen.dim);
  const Eigen::MatrixXcd M = gen.matrix.cast<std::complex<double>>();
  for (int s = 0; s < n_samples; ++s) {
    for (int i = 0; i < gen.dim; ++i) U[i] = std::complex<double>(gauss(rng), gauss(rng));
    AU = M * U;
    std::complex<double> form = 0.0;
    double norm2 = 0.0;
    for (int i = 0; i < gen.dim; ++i) {
      form += gen.gram_weights[i] * AU[i] * std::conj(U[i]);
      norm2 += gen.gram_weights[i] * std::norm(U[i]);
    }
    double q_form = 0.0;
    for (int i = 1; i < n; ++i)
      q_form += dx * coeffs.q_samples[i] * std::norm(U[gen.v_slot(i)]);
    q_form += (coeffs.a1() * coeffs.alpha1 / coeffs.beta1 +
               0.5 * dx * coeffs.q_samples[n]) *
              std::norm(U[gen.eta1_slot()]);
    q_form += (coeffs.a0() * coeffs.gamma1 / coeffs.mu1 +
               0.5 * dx * coeffs.q_samples[0]) *
              std::norm(U[gen.zeta1_slot()]);
    for (int i = 1; i + 1 < n; ++i)
      q_form += gen.viscosity * dx * std::norm(U[gen.v_slot(i + 1)] - U[gen.v_slot(i)]);

    out.residual = std::max(out.residual, std::abs(form.real() + q_form) / norm2);
    out.max_re_form = std::max(out.max_re_form, form.real() / norm2);
  }
  return out;
}

}  // namespace dynwave

#endif  // DYNWAVE_SPECTRAL_HPP
