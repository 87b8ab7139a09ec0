#pragma once

// Self-contained benchmark eigensolver for
//   -psi''/2 + (omega^2 x^2 / 2 + mu x^4 / 4) psi = E psi   (hbar = m = 1)
// on [-L, L] with Dirichlet walls: second-order finite differences, Sturm
// bisection for the lowest eigenvalue, inverse iteration for the eigenvector.
// Accuracy is driven by two ladders: L is doubled at fixed spacing until the
// box truncation is negligible, then the spacing is halved (N -> 2N+1 nests
// the grids exactly) with Richardson extrapolation of the h^2 error.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "aho/oscillator.hpp"

namespace aho {

struct SolverLimits {
  double initial_half_width = 8.0;
  int initial_points = 1024;
  double max_half_width = 64.0;
  int max_points = 1 << 20;
};

struct SolverFailure : std::runtime_error {
  double last_estimate, previous_estimate;
  SolverFailure(const std::string& what, double last, double prev)
      : std::runtime_error(what + " (last bracket " + std::to_string(prev) + " .. " +
                           std::to_string(last) + ")"),
        last_estimate(last),
        previous_estimate(prev) {}
};

class GridHamiltonian {
 public:
  GridHamiltonian(double omega, double mu, double half_width, int points)
      : half_width_(half_width), points_(points) {
    if (!(half_width > 0.0) || points < 3)
      throw std::domain_error("grid hamiltonian: need half_width > 0 and >= 3 points");
    spacing_ = 2.0 * half_width / (points + 1);
    offdiag_ = -0.5 / (spacing_ * spacing_);
    diag_.resize(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
      const double xi = x(i);
      diag_[static_cast<std::size_t>(i)] =
          1.0 / (spacing_ * spacing_) + 0.5 * omega * omega * xi * xi + 0.25 * mu * xi * xi * xi * xi;
    }
  }

  double half_width() const { return half_width_; }
  int points() const { return points_; }
  double spacing() const { return spacing_; }
  double offdiag() const { return offdiag_; }

  // Interior node i = 0..N-1, mirrored so that x(i) == -x(N-1-i) exactly.
  double x(int i) const {
    const int j = points_ - 1 - i;
    if (i == j) return 0.0;
    const double t = half_width_ - (static_cast<double>(std::min(i, j)) + 1.0) * spacing_;
    return i < j ? -t : t;
  }

  // Number of eigenvalues strictly below sigma (Sturm sign count).
  int eigenvalues_below(double sigma) const {
    const double e2 = offdiag_ * offdiag_;
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < diag_.size(); ++i) {
      q = (i == 0) ? diag_[0] - sigma : diag_[i] - sigma - e2 / q;
      if (q == 0.0) q = 1e-300;
      if (q < 0.0) ++count;
    }
    return count;
  }

  double smallest_eigenvalue(double abs_tol) const {
    double lo = diag_[0], hi = diag_[0];
    for (const double d : diag_) {
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    lo -= 2.0 * std::abs(offdiag_);
    hi += 2.0 * std::abs(offdiag_);
    while (hi - lo > abs_tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // spacing exhausted
      (eigenvalues_below(mid) >= 1 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
  }

  // Eigenvector by inverse iteration at shift sigma (a converged eigenvalue).
  // Normalized so that sum psi_i^2 h = 1; overall sign set positive.
  std::vector<double> inverse_iteration(double sigma) const {
    const int n = points_;
    std::vector<double> v(static_cast<std::size_t>(n), 1.0 / std::sqrt(n * spacing_));
    double shift = sigma;
    for (int restart = 0; restart < 4; ++restart) {
      for (int iter = 0; iter < 50; ++iter) {
        std::vector<double> w = solve_shifted(shift, v);
        double norm2 = 0.0;
        for (const double wi : w) norm2 += wi * wi;
        norm2 *= spacing_;
        if (!std::isfinite(norm2) || norm2 == 0.0) break;  // restart with nudged shift
        const double inv = 1.0 / std::sqrt(norm2);
        double dot = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) {
          w[i] *= inv;
          dot += w[i] * v[i];
        }
        if (dot < 0.0)
          for (auto& wi : w) wi = -wi;
        double delta = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) delta = std::max(delta, std::abs(w[i] - v[i]));
        v.swap(w);
        if (delta < 1e-12) {
          std::size_t imax = 0;
          for (std::size_t i = 1; i < v.size(); ++i)
            if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
          if (v[imax] < 0.0)
            for (auto& vi : v) vi = -vi;
          return v;
        }
      }
      shift = shift * (1.0 + 1e-10) + 1e-13;  // stagnation: perturb and retry
    }
    throw SolverFailure("inverse iteration stagnated", shift, sigma);
  }

 private:
  // Tridiagonal solve of (T - shift I) w = rhs, partial pivoting.
  std::vector<double> solve_shifted(double shift, std::vector<double> rhs) const {
    const std::size_t n = diag_.size();
    std::vector<double> d(n), du(n > 1 ? n - 1 : 0, offdiag_), dl(n > 1 ? n - 1 : 0, offdiag_),
        du2(n > 2 ? n - 2 : 0, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = diag_[i] - shift;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == 0.0) d[i] = 1e-300;
        const double fact = dl[i] / d[i];
        d[i + 1] -= fact * du[i];
        rhs[i + 1] -= fact * rhs[i];
        if (i + 2 < n) du2[i] = 0.0;
      } else {
        const double fact = d[i] / dl[i];
        d[i] = dl[i];
        const double tmp = d[i + 1];
        d[i + 1] = du[i] - fact * tmp;
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du2[i];
        }
        du[i] = tmp;
        std::swap(rhs[i], rhs[i + 1]);
        rhs[i + 1] -= fact * rhs[i];
      }
    }
    if (d[n - 1] == 0.0) d[n - 1] = 1e-300;
    rhs[n - 1] /= d[n - 1];
    if (n > 1) rhs[n - 2] = (rhs[n - 2] - du[n - 2] * rhs[n - 1]) / d[n - 2];
    for (std::size_t k = n; k-- > 2;) {
      const std::size_t i = k - 2;
      rhs[i] = (rhs[i] - du[i] * rhs[i + 1] - (i + 2 < n ? du2[i] * rhs[i + 2] : 0.0)) / d[i];
    }
    return rhs;
  }

  double half_width_, spacing_, offdiag_;
  int points_;
  std::vector<double> diag_;
};

namespace detail {

struct EnergyRefinement {
  double energy;       // Richardson-extrapolated
  double half_width;   // converged L
  int points;          // finest N used
};

inline double bisect_tol(double tol) { return std::max(1e-3 * tol, 1e-13); }

inline EnergyRefinement refine_ground_energy(double omega, double mu, double tol,
                                             const SolverLimits& lim) {
  if (!(tol > 0.0)) throw std::domain_error("reference solver: tol must be > 0");
  const double inner = bisect_tol(tol);
  double half_width = lim.initial_half_width;
  int points = lim.initial_points;

  // Box ladder at fixed spacing: L -> 2L, N -> 2N+1 keeps h unchanged.
  for (;;) {
    const double e1 = GridHamiltonian(omega, mu, half_width, points).smallest_eigenvalue(inner);
    const double e2 =
        GridHamiltonian(omega, mu, 2.0 * half_width, 2 * points + 1).smallest_eigenvalue(inner);
    if (std::abs(e2 - e1) < 0.1 * tol) break;
    half_width *= 2.0;
    points = 2 * points + 1;
    if (half_width > lim.max_half_width)
      throw SolverFailure("reference solver: box ladder exceeded max half-width", e2, e1);
  }

  // Spacing ladder with Richardson extrapolation of the h^2 term.
  double e_h = GridHamiltonian(omega, mu, half_width, points).smallest_eigenvalue(inner);
  double prev_rich = std::numeric_limits<double>::quiet_NaN();
  for (;;) {
    const int finer = 2 * points + 1;
    if (finer > lim.max_points)
      throw SolverFailure("reference solver: spacing ladder exceeded max points", e_h, prev_rich);
    const double e_h2 = GridHamiltonian(omega, mu, half_width, finer).smallest_eigenvalue(inner);
    const double rich = (4.0 * e_h2 - e_h) / 3.0;
    points = finer;
    e_h = e_h2;
    if (std::isfinite(prev_rich) && std::abs(rich - prev_rich) < tol)
      return EnergyRefinement{rich, half_width, points};
    prev_rich = rich;
  }
}

}  // namespace detail

// Ground energy in reduced units (hbar = m = 1) at the given omega, mu.
inline double ground_energy_reduced(double omega, double mu, double tol = 1e-8,
                                    const SolverLimits& lim = {}) {
  if (omega < 0.0 || mu < 0.0 || (omega == 0.0 && mu == 0.0))
    throw std::domain_error("reference solver: need omega, mu >= 0 and not both zero");
  return detail::refine_ground_energy(omega, mu, tol, lim).energy;
}

// Ground energy in the units of `params`. Internally hbar and mass are scaled
// out (x -> sqrt(hbar/m) x), which leaves omega unchanged and maps
// mu -> mu hbar / m^2, E -> E / hbar.
inline double ground_energy(const OscillatorParams& params, double tol = 1e-8,
                            const SolverLimits& lim = {}) {
  const OscillatorParams p = validate(params);
  const double mu_r = p.mu * p.hbar / (p.mass * p.mass);
  return p.hbar * ground_energy_reduced(p.omega, mu_r, tol / p.hbar, lim);
}

struct WaveSolution {
  std::vector<double> grid;    // interior nodes, symmetric about 0
  std::vector<double> values;  // sum psi^2 h = 1, psi > 0
  double energy;               // Richardson-extrapolated eigenvalue
  double grid_energy;          // discrete eigenvalue on the returned grid
};

// Normalized, nodeless ground-state eigenvector. After the energy ladders
// converge, the spacing is refined further (nested grids) until successive
// eigenvectors agree pointwise, so the vector error is not limited by the
// energy grid.
inline WaveSolution ground_wavefunction_reduced(double omega, double mu, double tol = 1e-8,
                                                const SolverLimits& lim = {}) {
  if (omega < 0.0 || mu < 0.0 || (omega == 0.0 && mu == 0.0))
    throw std::domain_error("reference solver: need omega, mu >= 0 and not both zero");
  const auto ref = detail::refine_ground_energy(omega, mu, tol, lim);
  const double inner = detail::bisect_tol(tol);
  const double agree = std::max(10.0 * tol, 5e-7);

  int points = ref.points % 2 == 1 ? ref.points : ref.points + 1;
  GridHamiltonian ham(omega, mu, ref.half_width, points);
  double e_grid = ham.smallest_eigenvalue(inner);
  std::vector<double> psi = ham.inverse_iteration(e_grid);
  for (;;) {
    const int finer = 2 * points + 1;
    if (finer > lim.max_points)
      throw SolverFailure("reference solver: eigenvector ladder exceeded max points", e_grid,
                          ref.energy);
    GridHamiltonian fine(omega, mu, ref.half_width, finer);
    const double e_fine = fine.smallest_eigenvalue(inner);
    std::vector<double> psi_fine = fine.inverse_iteration(e_fine);
    double delta = 0.0;  // coarse node i coincides with fine node 2i+1
    for (int i = 0; i < points; ++i)
      delta = std::max(delta, std::abs(psi_fine[static_cast<std::size_t>(2 * i + 1)] -
                                       psi[static_cast<std::size_t>(i)]));
    points = finer;
    e_grid = e_fine;
    psi = std::move(psi_fine);
    if (delta < agree) break;
  }

  WaveSolution out;
  out.energy = ref.energy;
  out.grid_energy = e_grid;
  GridHamiltonian final_ham(omega, mu, ref.half_width, points);
  out.grid.resize(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) out.grid[static_cast<std::size_t>(i)] = final_ham.x(i);
  out.values = std::move(psi);
  return out;
}

inline WaveSolution ground_wavefunction(const OscillatorParams& params, double tol = 1e-8,
                                        const SolverLimits& lim = {}) {
  const OscillatorParams p = validate(params);
  const double mu_r = p.mu * p.hbar / (p.mass * p.mass);
  WaveSolution w = ground_wavefunction_reduced(p.omega, mu_r, tol / p.hbar, lim);
  const double a = std::sqrt(p.hbar / p.mass);  // length scale
  const double root_a = std::sqrt(a);
  for (auto& x : w.grid) x *= a;
  for (auto& v : w.values) v /= root_a;
  w.energy *= p.hbar;
  w.grid_energy *= p.hbar;
  return w;
}

}  // namespace aho
