#pragma once

// Order-by-order expansion of the transformed ground-state equation.
//
// With hbar = mass = 1 and the envelope exp(-gamma|x|^3 - beta x^2) stripped
// off, the remaining factor xi(x) obeys (x > 0; the x < 0 half follows by
// parity)
//
//   xi'' - [sqrt(2 mu) x^2 + 2 omega_tilde x] xi'
//        + [sqrt(2 mu) omega_tilde x^3 + Omega^2 x^2 - sqrt(2 mu) x
//           + 2 E - omega_tilde] xi = 0,            Omega^2 = omega_tilde^2 - omega^2.
//
// Splitting everything multiplied below by `delta` off the harmonic core and
// expanding xi = sum_k delta^k xi_k, E = sum_k delta^k E_k (delta set to 1 in
// every reported partial sum) gives, at order k >= 1 for the ground state
// (xi_0 = 1, E_0 = omega_tilde / 2),
//
//   xi_k'' - 2 omega_tilde x xi_k' =
//       -2 sum_{j=1..k} E_j xi_{k-j} + sqrt(2 mu) x^2 xi_{k-1}'
//       - [sqrt(2 mu) omega_tilde x^3 + Omega^2 x^2 - sqrt(2 mu) x] xi_{k-1}.
//
// xi_k is a polynomial of degree 3k solved by matching powers x^p downward:
//   p >= 1:  c_p = [(p+1)(p+2) c_{p+2} - R_p] / (2 omega_tilde p)
//   p == 0:  E_k = (R_0 - 2 c_2) / 2     (solvability; R_0 = 0 in practice)
// with the constant term of every xi_k set to zero, which removes the
// component parallel to xi_0 (same role as secular-term removal).

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aho/oscillator.hpp"
#include "aho/polynomial.hpp"

namespace aho {

// Coefficient growth makes orders beyond ~12 untrustworthy in 64-bit floats;
// the per-order max |c_p| is kept as a conditioning record.
inline constexpr int kMaxExpansionOrder = 12;

struct PrecisionExhausted : std::runtime_error {
  int order;
  explicit PrecisionExhausted(int k)
      : std::runtime_error("delta-expansion: non-finite coefficients at order " + std::to_string(k)),
        order(k) {}
};

template <class S = double>
struct DeltaExpansion {
  OscillatorParams params;  // reduced units, hbar = mass = 1
  S omega_tilde{};
  int order = 0;           // K
  int quantum_number = 0;  // n; the recursion below is ground-state only
  std::vector<Polynomial<S>> xi;  // xi[0..K]
  std::vector<S> energies;        // E_0..E_K
  std::vector<double> coeff_scale;  // max |c_p| of xi_k, conditioning record

  // Partial sum E_0 + ... + E_upto (all orders when upto < 0).
  S partial_energy(int upto = -1) const {
    if (upto < 0 || upto > order) upto = order;
    S e{};
    for (int k = 0; k <= upto; ++k) e = e + energies[static_cast<std::size_t>(k)];
    return e;
  }
  Polynomial<S> xi_sum(int upto = -1) const {
    if (upto < 0 || upto > order) upto = order;
    Polynomial<S> s;
    for (int k = 0; k <= upto; ++k) s += xi[static_cast<std::size_t>(k)];
    return s;
  }
};

// Unperturbed solution at effective frequency omega_tilde: the (physicists')
// Hermite polynomial H_n(sqrt(omega_tilde) x) and E = omega_tilde (n + 1/2).
// The recursion consumes only n = 0; general n is supported here.
template <class S = double>
std::pair<Polynomial<S>, S> order_zero(int n, S omega_tilde) {
  if (n < 0) throw std::domain_error("order_zero: quantum number must be >= 0");
  if (!(scalar_value(omega_tilde) > 0.0))
    throw std::domain_error("order_zero: omega_tilde must be > 0");
  const S energy = omega_tilde * S(n + 0.5);
  Polynomial<S> prev{S{1}};  // H_0
  if (n == 0) return {prev, energy};
  using std::sqrt;
  const S two_root = S{2} * sqrt(omega_tilde);
  Polynomial<S> cur = Polynomial<S>::monomial(1, two_root);
  for (int k = 1; k < n; ++k) {
    Polynomial<S> next = cur.times_monomial(1, two_root) - S(2.0 * k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {cur, energy};
}

// One step of the recursion: from a consistent expansion at order k-1,
// produce (xi_k, E_k). Ground state only.
template <class S>
std::pair<Polynomial<S>, S> next_order(const DeltaExpansion<S>& prior) {
  if (prior.quantum_number != 0)
    throw std::domain_error("next_order: recursion implemented for n = 0 only");
  const S omt = prior.omega_tilde;
  if (!(scalar_value(omt) > 0.0)) throw std::domain_error("next_order: omega_tilde must be > 0");

  const int k = prior.order + 1;
  const int deg = 3 * k;
  const double s2mu = std::sqrt(2.0 * prior.params.mu);
  const S omega2 = omt * omt - S(prior.params.omega * prior.params.omega);  // Omega^2

  // Right-hand side R(x), except the unknown -2 E_k xi_0 piece.
  std::vector<S> rhs(static_cast<std::size_t>(deg) + 1, S{});
  const auto& prev = prior.xi[static_cast<std::size_t>(k - 1)].coeffs();
  for (std::size_t p = 0; p < prev.size(); ++p) {
    if (p >= 1) rhs[p + 1] = rhs[p + 1] + S(s2mu * static_cast<double>(p)) * prev[p];
    rhs[p + 3] = rhs[p + 3] - S(s2mu) * omt * prev[p];
    rhs[p + 2] = rhs[p + 2] - omega2 * prev[p];
    rhs[p + 1] = rhs[p + 1] + S(s2mu) * prev[p];
  }
  for (int j = 1; j < k; ++j) {
    const S two_ej = S{2} * prior.energies[static_cast<std::size_t>(j)];
    const auto& xkj = prior.xi[static_cast<std::size_t>(k - j)].coeffs();
    for (std::size_t p = 0; p < xkj.size(); ++p) rhs[p] = rhs[p] - two_ej * xkj[p];
  }

  // Triangular solve, descending powers; c_0 imposed to 0.
  std::vector<S> c(static_cast<std::size_t>(deg) + 1, S{});
  for (int p = deg; p >= 1; --p) {
    const S high = (p + 2 <= deg) ? c[static_cast<std::size_t>(p) + 2] : S{};
    c[static_cast<std::size_t>(p)] =
        (S(static_cast<double>((p + 1) * (p + 2))) * high - rhs[static_cast<std::size_t>(p)]) /
        (S{2} * omt * S(static_cast<double>(p)));
  }
  const S energy = (rhs[0] - S{2} * c[2]) * S{0.5};

  Polynomial<S> xi_k(std::move(c));
  if (!xi_k.all_finite() || !finite_value(energy)) throw PrecisionExhausted(k);
  return {std::move(xi_k), energy};
}

// Full expansion through order K at fixed omega_tilde. Deterministic; pure.
// The meaningful domain is omega_tilde >= omega, but any omega_tilde > 0 is
// accepted: the stationary-point search differentiates across the boundary.
template <class S = double>
DeltaExpansion<S> expand(const OscillatorParams& reduced, S omega_tilde, int order) {
  const OscillatorParams p = validate(reduced);
  if (!p.is_reduced())
    throw std::domain_error("expand: params must be in reduced units (hbar = mass = 1)");
  if (order < 0 || order > kMaxExpansionOrder)
    throw std::domain_error("expand: order must be in [0, " + std::to_string(kMaxExpansionOrder) + "]");
  if (!(scalar_value(omega_tilde) > 0.0))
    throw std::domain_error("expand: omega_tilde must be > 0");

  DeltaExpansion<S> ex;
  ex.params = p;
  ex.omega_tilde = omega_tilde;
  auto [xi0, e0] = order_zero<S>(0, omega_tilde);
  ex.xi.push_back(std::move(xi0));
  ex.energies.push_back(e0);
  ex.coeff_scale.push_back(ex.xi[0].max_abs_coeff());
  for (int k = 1; k <= order; ++k) {
    auto [xik, ek] = next_order(ex);
    ex.coeff_scale.push_back(xik.max_abs_coeff());
    ex.xi.push_back(std::move(xik));
    ex.energies.push_back(ek);
    ex.order = k;
  }
  return ex;
}

// Closed form of the partial sum E_0 + E_1 + E_2 + E_3 in reduced units;
// used as an oracle against expand(..., 3).
inline double third_order_energy(const OscillatorParams& reduced, double omega_tilde) {
  const OscillatorParams p = validate(reduced);
  if (!p.is_reduced())
    throw std::domain_error("third_order_energy: params must be in reduced units");
  if (!(omega_tilde > 0.0)) throw std::domain_error("third_order_energy: omega_tilde must be > 0");
  const double w2 = p.omega * p.omega;
  const double t2 = omega_tilde * omega_tilde;
  const double t5 = t2 * t2 * omega_tilde;
  return (6.0 * p.mu * omega_tilde * (-w2 + 2.0 * t2) +
          (w2 * w2 * w2 - 5.0 * w2 * w2 * t2 + 15.0 * w2 * t2 * t2 + 5.0 * t2 * t2 * t2)) /
         (32.0 * t5);
}

// Substitutes the partial sums xi = sum xi_k, E = sum E_k back into the exact
// transformed equation and returns the maximum |residual| over the grid. The
// leftover is the order delta^(K+1) tail, so it shrinks with K at fixed
// (mu, omega_tilde) for moderate mu.
inline double residual_check(const DeltaExpansion<double>& ex, std::span<const double> x_grid) {
  const Polynomial<double> xi = ex.xi_sum();
  const Polynomial<double> d1 = xi.derivative();
  const Polynomial<double> d2 = d1.derivative();
  const double e_total = ex.partial_energy();
  const double omt = ex.omega_tilde;
  const double s2mu = std::sqrt(2.0 * ex.params.mu);
  const double omega2 = omt * omt - ex.params.omega * ex.params.omega;

  double worst = 0.0;
  for (const double x : x_grid) {
    const double r = d2(x) - (s2mu * x * x + 2.0 * omt * x) * d1(x) +
                     (s2mu * omt * x * x * x + omega2 * x * x - s2mu * x + 2.0 * e_total - omt) * xi(x);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

}  // namespace aho
