#pragma once

// Principle of minimal sensitivity: the truncated energy E^(K) depends on the
// artificial frequency only through omega_tilde, so stationary points of
// E^(K)(omega_tilde) are located on [omega, omega_tilde_max] and the one
// where the energy is least sensitive to Omega is selected.
//
// Candidate ranking: interior minima first (flattest |d^2E/dOmega^2| wins),
// then the Omega = 0 boundary, then interior maxima. The boundary is a
// stationary point of E(Omega) by symmetry alone and at odd orders it is
// degenerate (quartically flat), so ranking it above genuine interior minima
// would discard the extrema the expansion actually converges through.

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aho/delta_expansion.hpp"
#include "aho/oscillator.hpp"

namespace aho {

enum class CandidateKind { kBoundaryOmegaZero, kInteriorMin, kInteriorMax };

inline const char* to_string(CandidateKind k) {
  switch (k) {
    case CandidateKind::kBoundaryOmegaZero: return "boundary";
    case CandidateKind::kInteriorMin: return "interior-min";
    case CandidateKind::kInteriorMax: return "interior-max";
  }
  return "?";
}

struct PmsCandidate {
  double omega_tilde;
  double omega_artificial;  // sqrt(omega_tilde^2 - omega^2)
  double energy;            // partial sum at omega_tilde, reduced units
  double abs_slope;         // |dE/d omega_tilde|
  double flatness;          // |d^2 E / d Omega^2|
  CandidateKind kind;
};

struct PmsResult {
  double omega_tilde_star;
  double omega_star;
  double energy;
  double flatness;  // of the selected candidate
  std::vector<PmsCandidate> candidates;  // ascending omega_tilde
};

struct StrongCouplingResult {
  int order;
  double alpha0;  // E = alpha0 (mu/4)^(1/3) coefficient of the pure quartic limit
  double omega_tilde_star;
};

struct NoStationaryPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double partial_energy_at(const OscillatorParams& reduced, int order, double omega_tilde) {
  return expand(reduced, omega_tilde, order).partial_energy();
}

inline double default_omega_tilde_max(const OscillatorParams& reduced) {
  // The order-3 strong-coupling root grows like mu^(1/3); factor 4 headroom.
  return std::max({10.0 * reduced.omega, 10.0, 4.0 * std::cbrt(reduced.mu)});
}

namespace pms_detail {
inline constexpr double kSlopeStep = 1e-5;      // relative central-difference step, dE/d omega_tilde
inline constexpr double kCurvatureStep = 1e-4;  // relative step for second derivatives
inline constexpr int kScanPoints = 400;
}  // namespace pms_detail

// dE^(K)/d omega_tilde by central differences. Near omega_tilde = omega the
// stencil evaluates just below omega, where the expansion continues smoothly.
inline double energy_slope(const OscillatorParams& reduced, int order, double omega_tilde) {
  const double h = pms_detail::kSlopeStep * std::max(1.0, omega_tilde);
  return (partial_energy_at(reduced, order, omega_tilde + h) -
          partial_energy_at(reduced, order, omega_tilde - h)) /
         (2.0 * h);
}

inline double energy_curvature(const OscillatorParams& reduced, int order, double omega_tilde) {
  const double h = pms_detail::kCurvatureStep * std::max(1.0, omega_tilde);
  return (partial_energy_at(reduced, order, omega_tilde + h) -
          2.0 * partial_energy_at(reduced, order, omega_tilde) +
          partial_energy_at(reduced, order, omega_tilde - h)) /
         (h * h);
}

// |d^2 E / d Omega^2| at the Omega corresponding to omega_tilde.
inline double flatness_in_omega(const OscillatorParams& reduced, int order, double omega_tilde) {
  const double w2 = reduced.omega * reduced.omega;
  const double omega_art = std::sqrt(std::max(omega_tilde * omega_tilde - w2, 0.0));
  const double h = pms_detail::kCurvatureStep * std::max(1.0, omega_art);
  const auto energy_of_omega = [&](double om) {
    return partial_energy_at(reduced, order, std::sqrt(w2 + om * om));
  };
  return std::abs(energy_of_omega(omega_art + h) - 2.0 * energy_of_omega(omega_art) +
                  energy_of_omega(omega_art - h)) /
         (h * h);
}

// Partial-sum energies over a sorted omega_tilde grid.
inline std::vector<std::pair<double, double>> energy_curve(const OscillatorParams& reduced,
                                                           int order,
                                                           std::span<const double> omega_tilde_grid) {
  if (!std::is_sorted(omega_tilde_grid.begin(), omega_tilde_grid.end()))
    throw std::invalid_argument("energy_curve: grid must be sorted");
  std::vector<std::pair<double, double>> out;
  out.reserve(omega_tilde_grid.size());
  for (const double t : omega_tilde_grid) out.emplace_back(t, partial_energy_at(reduced, order, t));
  return out;
}

// All PMS candidates on [omega, omega_tilde_max]: the Omega = 0 boundary
// (omega > 0 only) plus every interior root of dE/d omega_tilde, located by
// sign-change scanning and bisected to relative 1e-10. Roots within the
// derivative stencil of the boundary are the boundary, not interior points.
inline std::vector<PmsCandidate> stationary_points(const OscillatorParams& reduced, int order,
                                                   double omega_tilde_max) {
  const OscillatorParams p = validate(reduced);
  if (!p.is_reduced()) throw std::domain_error("stationary_points: params must be reduced");
  if (!(omega_tilde_max > p.omega))
    throw std::domain_error("stationary_points: omega_tilde_max must exceed omega");

  const int n = pms_detail::kScanPoints;
  const double lo = p.omega > 0.0 ? p.omega : omega_tilde_max / n;
  std::vector<double> roots;
  double t_prev = lo;
  double g_prev = energy_slope(p, order, lo);
  for (int i = 1; i < n; ++i) {
    const double t = lo + (omega_tilde_max - lo) * i / (n - 1);
    const double g = energy_slope(p, order, t);
    if (g_prev == 0.0) {
      roots.push_back(t_prev);
    } else if (g != 0.0 && std::signbit(g) != std::signbit(g_prev)) {
      double a = t_prev, b = t, ga = g_prev;
      while (b - a > 1e-10 * std::max(1.0, 0.5 * (a + b))) {
        const double m = 0.5 * (a + b);
        const double gm = energy_slope(p, order, m);
        if (gm == 0.0) {
          a = b = m;
          break;
        }
        if (std::signbit(gm) == std::signbit(ga)) {
          a = m;
          ga = gm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    t_prev = t;
    g_prev = g;
  }
  if (g_prev == 0.0) roots.push_back(t_prev);

  const double boundary_merge = 4.0 * pms_detail::kSlopeStep * std::max(1.0, p.omega);
  std::vector<PmsCandidate> cands;
  if (p.omega > 0.0) {
    cands.push_back(PmsCandidate{p.omega, 0.0, partial_energy_at(p, order, p.omega),
                                 std::abs(energy_slope(p, order, p.omega)),
                                 flatness_in_omega(p, order, p.omega),
                                 CandidateKind::kBoundaryOmegaZero});
  }
  for (const double r : roots) {
    if (p.omega > 0.0 && r - p.omega <= boundary_merge) continue;
    bool dup = false;
    for (const auto& c : cands)
      if (std::abs(c.omega_tilde - r) <= 1e-8 * std::max(1.0, r)) dup = true;
    if (dup) continue;
    const double omega_art = std::sqrt(std::max(r * r - p.omega * p.omega, 0.0));
    cands.push_back(PmsCandidate{r, omega_art, partial_energy_at(p, order, r),
                                 std::abs(energy_slope(p, order, r)),
                                 flatness_in_omega(p, order, r),
                                 energy_curvature(p, order, r) > 0.0 ? CandidateKind::kInteriorMin
                                                                     : CandidateKind::kInteriorMax});
  }
  std::sort(cands.begin(), cands.end(),
            [](const PmsCandidate& a, const PmsCandidate& b) { return a.omega_tilde < b.omega_tilde; });
  if (cands.empty())
    throw NoStationaryPoint("stationary_points: no candidates in [" + std::to_string(lo) + ", " +
                            std::to_string(omega_tilde_max) + "]; widen omega_tilde_max");
  return cands;
}

inline PmsResult select_pms(std::span<const PmsCandidate> candidates) {
  if (candidates.empty()) throw std::invalid_argument("select_pms: empty candidate list");
  const auto flattest = [&](CandidateKind kind) -> const PmsCandidate* {
    const PmsCandidate* best = nullptr;
    for (const auto& c : candidates) {
      if (c.kind != kind) continue;
      if (!best || c.flatness < best->flatness ||
          (c.flatness == best->flatness && c.omega_artificial < best->omega_artificial))
        best = &c;
    }
    return best;
  };
  const PmsCandidate* pick = flattest(CandidateKind::kInteriorMin);
  if (!pick) pick = flattest(CandidateKind::kBoundaryOmegaZero);
  if (!pick) pick = flattest(CandidateKind::kInteriorMax);
  return PmsResult{pick->omega_tilde, pick->omega_artificial, pick->energy, pick->flatness,
                   std::vector<PmsCandidate>(candidates.begin(), candidates.end())};
}

// stationary_points + select_pms with automatic bracket widening.
inline PmsResult pms_optimize(const OscillatorParams& reduced, int order,
                              double omega_tilde_max = 0.0) {
  double top = omega_tilde_max > 0.0 ? omega_tilde_max : default_omega_tilde_max(reduced);
  for (int attempt = 0;; ++attempt) {
    try {
      return select_pms(stationary_points(reduced, order, top));
    } catch (const NoStationaryPoint&) {
      if (attempt >= 3) throw;
      top *= 2.0;
    }
  }
}

// Strong-coupling coefficient alpha0 at order K. At omega = 0 the energy is
// exactly alpha0 (mu/4)^(1/3), so the PMS energy at mu = 4 is alpha0 itself.
inline StrongCouplingResult strong_coupling_alpha0(int order) {
  if (order < 1 || order > kMaxExpansionOrder)
    throw std::domain_error("strong_coupling_alpha0: order must be in [1, " +
                            std::to_string(kMaxExpansionOrder) + "]");
  const OscillatorParams quartic{1.0, 1.0, 0.0, 4.0};
  const PmsResult r = pms_optimize(quartic, order);
  if (!(r.energy > 0.0))
    throw NoStationaryPoint("strong_coupling_alpha0: selected energy not positive at order " +
                            std::to_string(order));
  return StrongCouplingResult{order, r.energy, r.omega_tilde_star};
}

}  // namespace aho
