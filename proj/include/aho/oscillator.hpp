#pragma once

// Parameters and envelope scales for the quartic anharmonic oscillator
//   H = p^2/(2m) + m omega^2 x^2 / 2 + mu x^4 / 4
// and the three-scale ground-state ansatz
//   psi(x) = exp(-gamma |x|^3 - beta x^2) * xi(x).

#include <cmath>
#include <stdexcept>

namespace aho {

struct OscillatorParams {
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 0.0;  // harmonic frequency, >= 0
  double mu = 0.0;     // quartic coupling, >= 0

  bool is_reduced() const { return hbar == 1.0 && mass == 1.0; }
};

// Returns the input unchanged, or throws std::domain_error naming the
// violated invariant. mu = omega = 0 (free particle) is rejected.
inline OscillatorParams validate(const OscillatorParams& p) {
  if (!std::isfinite(p.hbar) || !std::isfinite(p.mass) ||
      !std::isfinite(p.omega) || !std::isfinite(p.mu))
    throw std::domain_error("oscillator: non-finite parameter");
  if (!(p.hbar > 0.0)) throw std::domain_error("oscillator: hbar must be > 0");
  if (!(p.mass > 0.0)) throw std::domain_error("oscillator: mass must be > 0");
  if (p.omega < 0.0) throw std::domain_error("oscillator: omega must be >= 0");
  if (p.mu < 0.0) throw std::domain_error("oscillator: mu must be >= 0");
  if (p.mu == 0.0 && p.omega == 0.0)
    throw std::domain_error("oscillator: mu = omega = 0 (free particle) excluded");
  return p;
}

// Envelope coefficients. gamma is fixed by the |x| -> infinity asymptotics
// (cubic exponent); beta is the Gaussian scale of an oscillator with the
// effective frequency omega_tilde = sqrt(omega^2 + Omega^2), where Omega is
// the artificial frequency.
struct AnsatzScales {
  double gamma;             // coefficient of |x|^3, sqrt(mu m / 2) / (3 hbar)
  double beta;              // coefficient of x^2, m omega_tilde / (2 hbar)
  double omega_artificial;  // Omega >= 0
  double omega_tilde;       // sqrt(omega^2 + Omega^2) >= omega
};

inline AnsatzScales ansatz_scales(const OscillatorParams& params, double omega_artificial) {
  const OscillatorParams p = validate(params);
  if (!std::isfinite(omega_artificial) || omega_artificial < 0.0)
    throw std::domain_error("ansatz_scales: Omega must be finite and >= 0");
  // Omega = 0 keeps omega_tilde == omega exactly.
  const double omt = omega_artificial == 0.0
                         ? p.omega
                         : std::sqrt(p.omega * p.omega + omega_artificial * omega_artificial);
  return AnsatzScales{
      std::sqrt(p.mu * p.mass / 2.0) / (3.0 * p.hbar),
      p.mass * omt / (2.0 * p.hbar),
      omega_artificial,
      omt,
  };
}

// Reduced-unit form of the problem (hbar = mass = 1) plus the scales that
// map reduced energies/lengths back to the input units.
//   omega > 0:  omega -> 1, mu -> mu*hbar/(m^2 omega^3), energy scale hbar*omega
//   omega = 0:  mu -> 4, energy scale (hbar^4 mu / (4 m^2))^(1/3)
struct ReducedUnits {
  OscillatorParams params;  // hbar = mass = 1
  double energy_scale;
  double length_scale;
};

inline ReducedUnits reduce_units(const OscillatorParams& params) {
  const OscillatorParams p = validate(params);
  if (p.omega > 0.0) {
    const double energy = p.hbar * p.omega;
    const double mu_hat = p.mu * p.hbar / (p.mass * p.mass * p.omega * p.omega * p.omega);
    return ReducedUnits{{1.0, 1.0, 1.0, mu_hat}, energy, p.hbar / std::sqrt(p.mass * energy)};
  }
  const double energy = std::cbrt(p.hbar * p.hbar * p.hbar * p.hbar * p.mu / (4.0 * p.mass * p.mass));
  return ReducedUnits{{1.0, 1.0, 0.0, 4.0}, energy, p.hbar / std::sqrt(p.mass * energy)};
}

}  // namespace aho
