// Acceptance suite: one line per criterion, nonzero exit if any fail.
// Runs against the library the same way the CLI does; reference energies are
// produced live by the finite-difference solver.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "aho/cli.hpp"
#include "aho/delta_expansion.hpp"
#include "aho/pms.hpp"
#include "aho/reference_solver.hpp"
#include "aho/wavefunction.hpp"

using namespace aho;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// 1. first-order coefficients and energy match their closed forms, rel 1e-13
void criterion1() {
  double worst = 0.0;
  for (const double mu : {0.5, 5.0, 50.0}) {
    for (const double omt : {1.0, 1.5, 2.0, 5.0}) {
      const auto ex = expand<double>({1, 1, 1, mu}, omt, 1);
      const double omega2 = omt * omt - 1.0;
      const double a2 = omega2 / (4.0 * omt);
      const double a3 = std::sqrt(mu / 2.0) / 3.0;
      worst = std::max(worst, std::abs(ex.xi[1].coeff(1)));
      worst = std::max(worst, std::abs(ex.xi[1].coeff(2) - a2) / std::max(1.0, std::abs(a2)));
      worst = std::max(worst, std::abs(ex.xi[1].coeff(3) - a3) / a3);
      worst = std::max(worst, std::abs(ex.energies[1] + a2) / std::max(1.0, std::abs(a2)));
    }
  }
  report(1, worst <= 1e-13, "first-order closed form, worst rel dev " + fmt(worst));
}

// 2. order-3 partial sum matches the closed form, rel 1e-12
void criterion2() {
  double worst = 0.0;
  for (const double mu : {0.5, 5.0, 50.0}) {
    for (const double omt : {1.0, 1.5, 2.0, 5.0}) {
      const OscillatorParams p{1, 1, 1, mu};
      const double closed = third_order_energy(p, omt);
      worst = std::max(worst, std::abs(expand(p, omt, 3).partial_energy() - closed) /
                                  std::abs(closed));
    }
  }
  const double spot = expand<double>({1, 1, 1, 5}, 2.0, 3).partial_energy();
  const bool spot_ok = std::abs(spot - 961.0 / 1024.0) <= 1e-12 * (961.0 / 1024.0);
  report(2, worst <= 1e-12 && spot_ok,
         "third-order closed form, worst rel dev " + fmt(worst) + ", spot 961/1024 " +
             (spot_ok ? "exact" : "violated"));
}

// 3. K=1 PMS selects Omega = 0 with E = omega/2 exactly
void criterion3() {
  bool ok = true;
  for (const double mu : {0.5, 5.0, 50.0}) {
    const PmsResult r = pms_optimize({1, 1, 1, mu}, 1);
    ok = ok && r.omega_star == 0.0 && r.energy == 0.5;
  }
  report(3, ok, "order-1 PMS returns Omega = 0 and E = omega/2 exactly");
}

// 4. alpha0^(3) closed form and its 5-7% gap to the solver value
void criterion4() {
  const StrongCouplingResult sc = strong_coupling_alpha0(3);
  const double closed = 3.0 / 16.0 * std::cbrt(75.0 / 2.0);
  const double alpha0_ref = ground_energy_reduced(0.0, 4.0, 1e-9);
  const double rel = std::abs(sc.alpha0 / alpha0_ref - 1.0);
  const bool ok = std::abs(sc.alpha0 - closed) <= 1e-4 && rel >= 0.05 && rel <= 0.07;
  report(4, ok,
         "alpha0(3) = " + fmt(sc.alpha0) + " (closed form " + fmt(closed) + "), " +
             fmt(100 * rel) + "% below reference");
}

// 5. alpha0^(8) within 0.5% of the solver value
void criterion5() {
  const StrongCouplingResult sc = strong_coupling_alpha0(8);
  const double alpha0_ref = ground_energy_reduced(0.0, 4.0, 1e-9);
  const double rel = std::abs(sc.alpha0 / alpha0_ref - 1.0);
  report(5, rel <= 0.005,
         "alpha0(8) = " + fmt(sc.alpha0) + " vs reference " + fmt(alpha0_ref) + ", rel " +
             fmt(rel));
}

// 6. optimized energies stay below the exact ones on the mu-sweep grid
void criterion6() {
  bool ok = true;
  std::string worst_case;
  for (const double mu : {0.1, 1.0, 5.0, 20.0}) {
    const OscillatorParams p{1, 1, 1, mu};
    const double e_ref = ground_energy(p, 1e-8);
    for (int order = 1; order <= 5; ++order) {
      const double e_pms = pms_optimize(p, order).energy;
      if (!(e_pms <= e_ref + 1e-8)) {
        ok = false;
        worst_case = " violated at mu=" + fmt(mu) + " K=" + std::to_string(order) + " (" +
                     fmt(e_pms) + " > " + fmt(e_ref) + ")";
      }
    }
  }
  report(6, ok, "E_pms <= E_ref + 1e-8 for mu in {0.1,1,5,20}, orders 1..5" + worst_case);
}

// 7. omega scan: interior stationary candidates at mu=5, orders 2..5
void criterion7() {
  bool ok = true;
  const OscillatorParams p{1, 1, 1, 5};
  for (int order = 2; order <= 5; ++order) {
    const auto cands = stationary_points(p, order, default_omega_tilde_max(p));
    int interior = 0;
    for (const auto& c : cands)
      if (c.kind != CandidateKind::kBoundaryOmegaZero) ++interior;
    const PmsResult r = select_pms(cands);
    const double slope = std::abs(energy_slope(p, order, r.omega_tilde_star));
    if (interior < 1 || r.omega_star <= 0.0 || slope > 1e-8) ok = false;
  }
  // the scan-omega emitter must produce the corresponding table
  const auto out = std::filesystem::temp_directory_path() / "aho_acceptance_scan_omega.csv";
  cli::RawOptions raw;
  raw.out = out.string();
  const int rc = cli::run(cli::resolve_config("scan-omega", raw));
  std::size_t lines = 0;
  {
    std::ifstream in(out);
    std::string line;
    while (std::getline(in, line)) ++lines;
  }
  std::error_code ec;
  std::filesystem::remove(out, ec);
  ok = ok && rc == 0 && lines == 1 + 4 * 201;
  report(7, ok, "interior optimum per order 2..5 at mu=5, |dE/d omega_tilde| <= 1e-8; scan table " +
                    std::to_string(lines) + " lines");
}

// 8. mu=200 wave functions: order 4 beats order 3; frozen absolute thresholds
void criterion8() {
  const OscillatorParams p{1, 1, 1, 200};
  const WaveSolution ws = ground_wavefunction_reduced(1.0, 200.0, 1e-8);
  const WaveProfile exact = normalize(WaveProfile{ws.grid, ws.values, false, "trapezoid"});
  WaveMetrics m[2];
  for (const int order : {3, 4}) {
    const PmsResult pms = pms_optimize(p, order);
    const auto ex = expand(p, pms.omega_tilde_star, order);
    const WaveProfile approx = normalize(assemble(ex, ansatz_scales(p, pms.omega_star), ws.grid));
    m[order - 3] = compare(approx, exact);
  }
  // absolute thresholds frozen from the first converged run of this suite
  const bool frozen_ok = m[0].linf <= 0.0260 && m[1].linf <= 0.0128 && m[0].overlap >= 0.99978 &&
                         m[1].overlap >= 0.99993;
  const bool order_ok = m[1].linf < m[0].linf && m[1].overlap > m[0].overlap;
  report(8, frozen_ok && order_ok,
         "mu=200: Linf3 = " + fmt(m[0].linf) + ", Linf4 = " + fmt(m[1].linf) + ", overlap3 = " +
             fmt(m[0].overlap) + ", overlap4 = " + fmt(m[1].overlap));
}

// 9. reference-solver correctness: harmonic limit, second-order RS oracle at
// mu = 0.1 within 5e-5, O(h^2) convergence ratio
void criterion9() {
  const double e_harm = ground_energy_reduced(1.0, 0.0, 1e-8);
  const bool harm_ok = std::abs(e_harm - 0.5) <= 1e-8;

  const double lambda = 0.025;
  const double rs2 = 0.5 + 0.75 * lambda - 21.0 / 8.0 * lambda * lambda;
  const double e01 = ground_energy_reduced(1.0, 0.1, 1e-8);
  const bool rs_ok = std::abs(e01 - rs2) <= 5e-5;

  const double e1 = GridHamiltonian(1.0, 0.0, 8.0, 1023).smallest_eigenvalue(1e-13);
  const double e2 = GridHamiltonian(1.0, 0.0, 8.0, 2047).smallest_eigenvalue(1e-13);
  const double ratio = (e1 - 0.5) / (e2 - 0.5);
  const bool ratio_ok = ratio >= 3.5 && ratio <= 4.5;

  report(9, harm_ok && rs_ok && ratio_ok,
         "harmonic " + std::string(harm_ok ? "ok" : "VIOLATED") + "; |E(0.1) - RS2| = " +
             fmt(std::abs(e01 - rs2)) + (rs_ok ? " <= 5e-5" : " > 5e-5 (truncated oracle: the"
             " neglected third-order term is ~3.3e-4, so a convergent solver cannot sit within"
             " 5e-5 of the second-order value)") +
             "; h^2 ratio " + fmt(ratio));
}

// 10. residual of the exact equation decreases monotonically, K = 1..5
void criterion10() {
  std::vector<double> xs(201);
  for (std::size_t i = 0; i < xs.size(); ++i)
    xs[i] = 2.0 * static_cast<double>(i) / static_cast<double>(xs.size() - 1);
  const OscillatorParams p{1, 1, 1, 0.5};
  bool ok = true;
  std::string seq;
  double prev = 0.0;
  for (int order = 1; order <= 5; ++order) {
    const double r = residual_check(expand(p, 1.5, order), xs);
    if (order > 1 && !(r < prev)) ok = false;
    seq += (order > 1 ? " > " : "") + fmt(r);
    prev = r;
  }
  report(10, ok, "residuals at (mu=0.5, omega_tilde=1.5): " + seq);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures == 0)
    std::printf("acceptance: all criteria satisfied\n");
  else
    std::printf("acceptance: %d criteria failed\n", failures);
  return failures;
}
