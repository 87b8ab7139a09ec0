#pragma once

// Command-line front end: flag/config-file parsing, the six subcommands, and
// the self-check suite behind `validate`. Scan outputs are the data behind
// the standard figures (alpha0 ladder, energy vs mu, energy vs Omega, wave
// function at mu = 200).
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure,
// 4 validation-suite failure. Failures emit a one-line JSON error record on
// stderr and leave no partial output files behind.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aho/delta_expansion.hpp"
#include "aho/oscillator.hpp"
#include "aho/pms.hpp"
#include "aho/reference_solver.hpp"
#include "aho/report.hpp"
#include "aho/wavefunction.hpp"

namespace aho::cli {

struct RawOptions {
  std::optional<double> mu, omega_phys, hbar, mass, omega_max, tol;
  std::optional<int> order;
  std::optional<std::string> orders, mu_grid, out, format, config_path;
};

struct RunConfig {
  std::string command;
  OscillatorParams params{1.0, 1.0, 1.0, 1.0};
  int order = 3;
  int orders_lo = 1, orders_hi = 5;
  double mu_start = 0.1, mu_stop = 20.0;
  int mu_count = 40;
  bool mu_single = false;  // scan-mu with an explicit --mu
  double omega_max = 0.0;  // Omega upper bound for scans/PMS bracket; 0 = auto
  double tol = 1e-8;
  std::string out;     // empty = stdout-only command default
  std::string format = "csv";
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"energy",       "scan-omega", "scan-mu",
                                              "alpha0",       "wavefunction", "validate"};
  return names;
}

// ---------------------------------------------------------------------------
// configuration

inline std::pair<int, int> parse_orders(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int k = std::stoi(s);
      return {k, k};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::domain_error("config: cannot parse --orders value '" + s + "' (expected A..B)");
  }
}

inline std::tuple<double, double, int> parse_mu_grid(const std::string& s) {
  const auto c1 = s.find(':');
  const auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::domain_error("config: cannot parse --mu-grid value '" + s +
                            "' (expected start:stop:count)");
  try {
    const double start = std::stod(s.substr(0, c1));
    const double stop = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
    const int count = std::stoi(s.substr(c2 + 1));
    return {start, stop, count};
  } catch (const std::exception&) {
    throw std::domain_error("config: cannot parse --mu-grid value '" + s + "'");
  }
}

// Flat JSON object mirroring the flag names; command-line flags win.
inline void merge_config_file(RawOptions& raw) {
  if (!raw.config_path) return;
  std::ifstream in(*raw.config_path);
  if (!in) throw std::domain_error("config: cannot open " + *raw.config_path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::domain_error("config: invalid JSON in " + *raw.config_path + ": " + e.what());
  }
  if (!j.is_object()) throw std::domain_error("config: expected a flat JSON object");

  const auto num = [&](const char* key, std::optional<double>& slot) {
    if (!slot && j.contains(key)) slot = j.at(key).get<double>();
  };
  const auto integer = [&](const char* key, std::optional<int>& slot) {
    if (!slot && j.contains(key)) slot = j.at(key).get<int>();
  };
  const auto str = [&](const char* key, std::optional<std::string>& slot) {
    if (!slot && j.contains(key)) {
      if (j.at(key).is_string())
        slot = j.at(key).get<std::string>();
      else
        slot = j.at(key).dump();
    }
  };
  static const std::vector<std::string> known{"mu",     "omega-phys", "hbar",   "mass",
                                              "order",  "orders",     "mu-grid", "omega-max",
                                              "tol",    "out",        "format"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw std::domain_error("config: unknown key '" + key + "'");
  }
  num("mu", raw.mu);
  num("omega-phys", raw.omega_phys);
  num("hbar", raw.hbar);
  num("mass", raw.mass);
  num("omega-max", raw.omega_max);
  num("tol", raw.tol);
  integer("order", raw.order);
  str("orders", raw.orders);
  str("mu-grid", raw.mu_grid);
  str("out", raw.out);
  str("format", raw.format);
}

inline RunConfig resolve_config(const std::string& command, RawOptions raw) {
  merge_config_file(raw);
  RunConfig cfg;
  cfg.command = command;

  const double mu_default = command == "scan-omega" ? 5.0
                            : command == "wavefunction" ? 200.0
                                                        : 1.0;
  cfg.params.hbar = raw.hbar.value_or(1.0);
  cfg.params.mass = raw.mass.value_or(1.0);
  cfg.params.omega = raw.omega_phys.value_or(1.0);
  cfg.params.mu = raw.mu.value_or(mu_default);

  cfg.order = raw.order.value_or(command == "scan-omega" ? 5 : 3);
  if (cfg.order < 0 || cfg.order > kMaxExpansionOrder)
    throw std::domain_error("config: order must be in [0, " + std::to_string(kMaxExpansionOrder) + "]");

  if (raw.orders) {
    std::tie(cfg.orders_lo, cfg.orders_hi) = parse_orders(*raw.orders);
  } else if (command == "alpha0") {
    cfg.orders_lo = 1;
    cfg.orders_hi = cfg.order;
  }
  if (cfg.orders_lo < 0 || cfg.orders_hi > kMaxExpansionOrder || cfg.orders_lo > cfg.orders_hi)
    throw std::domain_error("config: orders range must satisfy 0 <= A <= B <= " +
                            std::to_string(kMaxExpansionOrder));

  if (raw.mu_grid) {
    std::tie(cfg.mu_start, cfg.mu_stop, cfg.mu_count) = parse_mu_grid(*raw.mu_grid);
    if (cfg.mu_count < 1 || cfg.mu_stop < cfg.mu_start)
      throw std::domain_error("config: mu grid must have stop >= start and count >= 1");
  } else if (command == "scan-mu" && raw.mu) {
    cfg.mu_single = true;  // explicit --mu collapses the sweep to one point
  }

  cfg.omega_max = raw.omega_max.value_or(0.0);
  if (cfg.omega_max < 0.0) throw std::domain_error("config: omega-max must be >= 0");
  cfg.tol = raw.tol.value_or(1e-8);
  if (!(cfg.tol > 0.0)) throw std::domain_error("config: tol must be > 0");

  cfg.format = raw.format.value_or("csv");
  if (cfg.format != "csv" && cfg.format != "json")
    throw std::domain_error("config: format must be csv or json");

  const bool file_command = command == "scan-omega" || command == "scan-mu" ||
                            command == "alpha0" || command == "wavefunction";
  cfg.out = raw.out.value_or(file_command ? command + "." + cfg.format : "");
  if (!cfg.out.empty() && !report::path_writable(cfg.out))
    throw std::domain_error("config: output path not writable: " + cfg.out);

  validate(cfg.params);
  return cfg;
}

// ---------------------------------------------------------------------------
// helpers shared by the commands

inline void emit_table(const RunConfig& cfg, const report::Table& t) {
  if (cfg.out.empty()) return;
  report::write_atomic(cfg.out, cfg.format == "json" ? report::to_json(t) : report::to_csv(t));
  std::cout << t.rows.size() << " rows -> " << cfg.out << "\n";
}

inline std::vector<std::pair<std::string, std::string>> params_meta(const RunConfig& cfg) {
  using report::format_number;
  return {{"hbar", format_number(cfg.params.hbar)},
          {"mass", format_number(cfg.params.mass)},
          {"omega", format_number(cfg.params.omega)},
          {"mu", format_number(cfg.params.mu)},
          {"tol", format_number(cfg.tol)}};
}

// PMS bracket from the configured Omega cap (reduced units).
inline double bracket_from_omega_max(const OscillatorParams& reduced, double omega_max) {
  if (omega_max <= 0.0) return 0.0;  // auto
  return std::sqrt(reduced.omega * reduced.omega + omega_max * omega_max);
}

// ---------------------------------------------------------------------------
// commands

inline int cmd_energy(const RunConfig& cfg) {
  using report::format_number;
  const ReducedUnits red = reduce_units(cfg.params);
  const PmsResult pms =
      pms_optimize(red.params, cfg.order, bracket_from_omega_max(red.params, cfg.omega_max));
  const double e_pms = pms.energy * red.energy_scale;
  const double e_ref = ground_energy(cfg.params, cfg.tol);

  std::cout << "command = energy\n"
            << "order = " << cfg.order << "\n"
            << "omega_tilde_star = " << format_number(pms.omega_tilde_star) << " (reduced units)\n"
            << "E_pms = " << format_number(e_pms) << "\n"
            << "E_ref = " << format_number(e_ref) << "\n"
            << "abs_gap = " << format_number(std::abs(e_ref - e_pms)) << "\n"
            << "rel_gap = " << format_number(std::abs(e_ref - e_pms) / std::abs(e_ref)) << "\n";

  if (!cfg.out.empty()) {
    report::Table t;
    t.command = "energy";
    t.meta = params_meta(cfg);
    std::string scale;
    const DeltaExpansion<double> ex = expand(red.params, pms.omega_tilde_star, cfg.order);
    for (std::size_t k = 0; k < ex.coeff_scale.size(); ++k) {
      if (k) scale += ' ';
      scale += format_number(ex.coeff_scale[k]);
    }
    t.meta.emplace_back("coeff_scale", scale);
    t.columns = {"order", "energy_pms", "energy_exact", "abs_gap", "rel_gap", "omega_tilde_star"};
    t.rows = {{static_cast<double>(cfg.order), e_pms, e_ref, std::abs(e_ref - e_pms),
               std::abs(e_ref - e_pms) / std::abs(e_ref), pms.omega_tilde_star}};
    emit_table(cfg, t);
  }
  return 0;
}

inline int cmd_scan_omega(const RunConfig& cfg) {
  if (cfg.order < 2) throw std::domain_error("scan-omega: order must be >= 2");
  const ReducedUnits red = reduce_units(cfg.params);
  const double om = red.params.omega;
  double omega_cap = cfg.omega_max;
  if (omega_cap <= 0.0) {
    const double top = default_omega_tilde_max(red.params);
    omega_cap = std::sqrt(std::max(top * top - om * om, 1.0));
  }
  constexpr int kPoints = 201;

  report::Table t;
  t.command = "scan-omega";
  t.meta = params_meta(cfg);
  t.meta.emplace_back("orders", "2.." + std::to_string(cfg.order));
  t.meta.emplace_back("units", "reduced");
  t.columns = {"omega", "omega_tilde", "order", "energy"};
  for (int k = 2; k <= cfg.order; ++k) {
    for (int i = 0; i < kPoints; ++i) {
      const double omega_art = omega_cap * i / (kPoints - 1);
      const double omt = omega_art == 0.0 ? om : std::sqrt(om * om + omega_art * omega_art);
      if (!(omt > 0.0)) continue;  // omega = 0 has no Omega = 0 point
      t.rows.push_back(
          {omega_art, omt, static_cast<double>(k), partial_energy_at(red.params, k, omt)});
    }
    const PmsResult pms =
        pms_optimize(red.params, k, bracket_from_omega_max(red.params, cfg.omega_max));
    std::cout << "order " << k << ": omega_tilde_star = " << report::format_number(pms.omega_tilde_star)
              << ", E_pms = " << report::format_number(pms.energy) << " (reduced units)\n";
  }
  emit_table(cfg, t);
  return 0;
}

inline int cmd_scan_mu(const RunConfig& cfg) {
  std::vector<double> mus;
  if (cfg.mu_single) {
    mus.push_back(cfg.params.mu);
  } else if (cfg.mu_count == 1) {
    mus.push_back(cfg.mu_start);
  } else {
    for (int i = 0; i < cfg.mu_count; ++i)
      mus.push_back(cfg.mu_start + (cfg.mu_stop - cfg.mu_start) * i / (cfg.mu_count - 1));
  }

  report::Table t;
  t.command = "scan-mu";
  t.meta = params_meta(cfg);
  t.meta.emplace_back("orders",
                      std::to_string(cfg.orders_lo) + ".." + std::to_string(cfg.orders_hi));
  t.columns = {"mu", "order", "energy_pms", "energy_exact"};
  for (const double mu : mus) {
    OscillatorParams user = cfg.params;
    user.mu = mu;
    validate(user);
    const ReducedUnits red = reduce_units(user);
    const double e_ref = ground_energy(user, cfg.tol);
    for (int k = cfg.orders_lo; k <= cfg.orders_hi; ++k) {
      const PmsResult pms = pms_optimize(red.params, k);
      t.rows.push_back({mu, static_cast<double>(k), pms.energy * red.energy_scale, e_ref});
    }
  }
  emit_table(cfg, t);
  return 0;
}

inline int cmd_alpha0(const RunConfig& cfg) {
  const double alpha0_ref = ground_energy_reduced(0.0, 4.0, cfg.tol);
  report::Table t;
  t.command = "alpha0";
  t.meta = {{"alpha0_ref", report::format_number(alpha0_ref)},
            {"tol", report::format_number(cfg.tol)}};
  t.columns = {"order", "alpha0", "alpha0_ref", "rel_error"};
  for (int k = cfg.orders_lo; k <= cfg.orders_hi; ++k) {
    if (k < 1) continue;
    try {
      const StrongCouplingResult sc = strong_coupling_alpha0(k);
      t.rows.push_back({static_cast<double>(k), sc.alpha0, alpha0_ref, sc.alpha0 / alpha0_ref - 1.0});
      std::cout << "order " << k << ": alpha0 = " << report::format_number(sc.alpha0)
                << " (rel_error " << report::format_number(sc.alpha0 / alpha0_ref - 1.0) << ")\n";
    } catch (const NoStationaryPoint&) {
      std::cerr << "alpha0: order " << k << " has no stationary point; row skipped\n";
    }
  }
  if (t.rows.empty()) throw NoStationaryPoint("alpha0: no order produced a stationary point");
  emit_table(cfg, t);
  return 0;
}

inline int cmd_wavefunction(const RunConfig& cfg) {
  const ReducedUnits red = reduce_units(cfg.params);
  const WaveSolution ws = ground_wavefunction_reduced(red.params.omega, red.params.mu, cfg.tol);
  const WaveProfile exact = normalize(WaveProfile{ws.grid, ws.values, false, "trapezoid"});

  double display_half_width = 0.0;
  std::vector<WaveProfile> approx;
  for (const int k : {3, 4}) {
    const PmsResult pms = pms_optimize(red.params, k);
    const DeltaExpansion<double> ex = expand(red.params, pms.omega_tilde_star, k);
    const AnsatzScales scales = ansatz_scales(red.params, pms.omega_star);
    approx.push_back(normalize(assemble(ex, scales, ws.grid)));
    display_half_width = std::max(display_half_width, default_half_width(scales));
    const WaveMetrics m = compare(approx.back(), exact);
    std::cout << "order " << k << ": Linf = " << report::format_number(m.linf)
              << ", L2 = " << report::format_number(m.l2)
              << ", overlap = " << report::format_number(m.overlap) << "\n";
  }

  // Display window and stride keep the emitted table plot-sized.
  std::size_t lo = 0, hi = ws.grid.size();
  while (lo < hi && ws.grid[lo] < -display_half_width) ++lo;
  while (hi > lo && ws.grid[hi - 1] > display_half_width) --hi;
  const std::size_t span_n = hi - lo;
  const std::size_t stride = std::max<std::size_t>(1, span_n / 1000);

  const double a = red.length_scale;
  const double amp = 1.0 / std::sqrt(a);
  report::Table t;
  t.command = "wavefunction";
  t.meta = params_meta(cfg);
  t.columns = {"x", "psi_exact", "psi_K3", "psi_K4"};
  for (std::size_t i = lo; i < hi; i += stride)
    t.rows.push_back({ws.grid[i] * a, exact.values[i] * amp, approx[0].values[i] * amp,
                      approx[1].values[i] * amp});
  emit_table(cfg, t);
  return 0;
}

// ---------------------------------------------------------------------------
// validate: quick pass over the module invariants

struct PropertyCheck {
  std::string name;
  bool passed;
  std::string detail;
};

inline std::vector<PropertyCheck> run_validation_suite(double tol);

inline int cmd_validate(const RunConfig& cfg) {
  const auto checks = run_validation_suite(cfg.tol);
  int failures = 0;
  for (const auto& c : checks) {
    std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
    if (!c.passed) ++failures;
  }
  std::cout << (failures == 0 ? "validation: all properties hold\n"
                              : "validation: " + std::to_string(failures) + " properties failed\n");
  return failures == 0 ? 0 : 4;
}

// ---------------------------------------------------------------------------
// entry point

inline int fail_with_record(int code, const std::string& command, const std::string& message) {
  nlohmann::json j;
  j["error"] = {{"code", code}, {"command", command}, {"message", message}};
  std::cerr << j.dump() << "\n";
  return code;
}

inline int run(const RunConfig& cfg) {
  try {
    if (cfg.command == "energy") return cmd_energy(cfg);
    if (cfg.command == "scan-omega") return cmd_scan_omega(cfg);
    if (cfg.command == "scan-mu") return cmd_scan_mu(cfg);
    if (cfg.command == "alpha0") return cmd_alpha0(cfg);
    if (cfg.command == "wavefunction") return cmd_wavefunction(cfg);
    if (cfg.command == "validate") return cmd_validate(cfg);
    return fail_with_record(2, cfg.command, "unknown command");
  } catch (const PrecisionExhausted& e) {
    return fail_with_record(3, cfg.command, e.what());
  } catch (const NoStationaryPoint& e) {
    return fail_with_record(3, cfg.command, e.what());
  } catch (const SolverFailure& e) {
    return fail_with_record(3, cfg.command, e.what());
  } catch (const std::domain_error& e) {
    return fail_with_record(2, cfg.command, e.what());
  } catch (const std::invalid_argument& e) {
    return fail_with_record(2, cfg.command, e.what());
  } catch (const std::exception& e) {
    return fail_with_record(3, cfg.command, e.what());
  }
}

inline int main_entry(int argc, char** argv) {
  CLI::App app{"three-scale delta expansion for the quartic anharmonic oscillator"};
  app.require_subcommand(1);
  RawOptions raw;

  for (const auto& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name, "");
    sub->add_option("--mu", raw.mu, "quartic coupling");
    sub->add_option("--omega-phys", raw.omega_phys, "harmonic frequency omega");
    sub->add_option("--hbar", raw.hbar, "Planck constant");
    sub->add_option("--mass", raw.mass, "particle mass");
    sub->add_option("--order", raw.order, "expansion order K");
    sub->add_option("--orders", raw.orders, "order range A..B");
    sub->add_option("--mu-grid", raw.mu_grid, "mu sweep start:stop:count");
    sub->add_option("--omega-max", raw.omega_max, "upper bound on the artificial frequency");
    sub->add_option("--tol", raw.tol, "reference-solver tolerance");
    sub->add_option("--out", raw.out, "output path");
    sub->add_option("--format", raw.format, "csv or json");
    sub->add_option("--config", raw.config_path, "flat JSON config file (flags override)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail_with_record(2, "", std::string("cannot parse command line: ") + e.what());
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(resolve_config(command, raw));
  } catch (const std::domain_error& e) {
    return fail_with_record(2, command, e.what());
  } catch (const std::exception& e) {
    return fail_with_record(2, command, e.what());
  }
}

// ---------------------------------------------------------------------------
// validation-suite body

inline std::vector<PropertyCheck> run_validation_suite(double tol) {
  using report::format_number;
  std::vector<PropertyCheck> out;
  const auto check = [&out](const std::string& name, bool ok, const std::string& detail = "") {
    out.push_back(PropertyCheck{name, ok, detail});
  };

  // envelope scales
  {
    bool ok = true;
    std::string detail;
    for (const double om : {0.0, 0.7, 1.0, 2.5}) {
      for (const double mu : {0.3, 2.0, 50.0}) {
        if (om == 0.0 && mu == 0.0) continue;
        const OscillatorParams p{1.0, 1.0, om, mu};
        const double gamma0 = ansatz_scales(p, 0.7).gamma;
        if (ansatz_scales(p, 3.1).gamma != gamma0) ok = false;  // Omega-independent
        if (ansatz_scales(p, 0.0).omega_tilde != om) ok = false;
        double prev = ansatz_scales(p, 0.0).beta;
        for (const double omega_art : {0.5, 1.0, 4.0}) {
          const double b = ansatz_scales(p, omega_art).beta;
          if (!(b > prev)) ok = false;  // strictly increasing in Omega
          prev = b;
        }
      }
    }
    check("ansatz-scale-identities", ok, detail);
  }
  {
    const ReducedUnits a = reduce_units({1.0, 1.0, 2.0, 8.0});
    const ReducedUnits b = reduce_units({1.0, 1.0, 0.0, 32.0});
    const bool ok = std::abs(a.params.mu - 1.0) < 1e-14 && std::abs(a.energy_scale - 2.0) < 1e-14 &&
                    std::abs(b.params.mu - 4.0) < 1e-14 && std::abs(b.energy_scale - 2.0) < 1e-14;
    check("reduce-units-laws", ok);
  }
  {
    bool ok = true;
    double worst = 0.0;
    for (const double mu : {0.5, 5.0, 50.0}) {
      for (const double omt : {1.0, 1.5, 2.0, 5.0}) {
        const auto ex = expand<double>({1.0, 1.0, 1.0, mu}, omt, 1);
        const double om2 = omt * omt - 1.0;
        worst = std::max({worst, std::abs(ex.xi[1].coeff(1)),
                          std::abs(ex.xi[1].coeff(2) - om2 / (4.0 * omt)),
                          std::abs(ex.xi[1].coeff(3) - std::sqrt(mu / 2.0) / 3.0),
                          std::abs(ex.energies[1] + om2 / (4.0 * omt))});
      }
    }
    ok = worst <= 1e-14;
    check("first-order-closed-form", ok, "max abs dev " + format_number(worst));
  }
  {
    double worst = 0.0;
    for (const double om : {0.0, 1.0}) {
      for (const double mu : {0.5, 5.0, 50.0}) {
        for (const double omt : {1.0, 1.5, 2.0, 5.0}) {
          const OscillatorParams p{1.0, 1.0, om, mu};
          const double closed = third_order_energy(p, omt);
          const double sum = expand(p, omt, 3).partial_energy();
          worst = std::max(worst, std::abs(sum - closed) / std::abs(closed));
        }
      }
    }
    check("third-order-closed-form", worst <= 1e-12, "max rel dev " + format_number(worst));
  }
  {
    const auto ex = expand<double>({1.0, 1.0, 1.0, 0.0}, 1.0, 8);
    bool ok = true;
    for (int k = 1; k <= 8; ++k) ok = ok && ex.energies[static_cast<std::size_t>(k)] == 0.0;
    check("mu-zero-orders-vanish", ok);
  }
  {
    const PmsResult r = pms_optimize({1.0, 1.0, 1.0, 5.0}, 1);
    check("k1-pms-exact", r.omega_star == 0.0 && r.energy == 0.5);
  }
  {
    // residual of the full equation shrinks with order
    const OscillatorParams p{1.0, 1.0, 1.0, 0.5};
    std::vector<double> xs(201);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 2.0 * static_cast<double>(i) / (xs.size() - 1);
    double prev = 0.0;
    bool ok = true;
    for (int k = 1; k <= 5; ++k) {
      const double r = residual_check(expand(p, 1.5, k), xs);
      if (k > 1 && !(r < prev)) ok = false;
      prev = r;
    }
    check("residual-monotone", ok);
  }
  {
    const double e = ground_energy_reduced(1.0, 0.0, tol);
    check("solver-harmonic", std::abs(e - 0.5) <= 1e-8, "E = " + format_number(e));
  }
  {
    const double e1 = GridHamiltonian(1.0, 0.0, 8.0, 1023).smallest_eigenvalue(1e-13);
    const double e2 = GridHamiltonian(1.0, 0.0, 8.0, 2047).smallest_eigenvalue(1e-13);
    const double ratio = (e1 - 0.5) / (e2 - 0.5);
    check("solver-h2-ratio", ratio > 3.5 && ratio < 4.5, "ratio = " + format_number(ratio));
  }
  {
    const double e1 = ground_energy_reduced(1.0, 1.0, tol);
    const double e2 = ground_energy_reduced(2.0, 8.0, tol);
    check("solver-scaling", std::abs(e2 - 2.0 * e1) <= 20.0 * tol * 2.0,
          "E(2w,8mu) - 2E(w,mu) = " + format_number(e2 - 2.0 * e1));
  }
  {
    const StrongCouplingResult sc = strong_coupling_alpha0(3);
    const double closed = 3.0 / 16.0 * std::cbrt(75.0 / 2.0);
    check("alpha0-k3-closed-form", std::abs(sc.alpha0 - closed) <= 1e-4,
          "alpha0 = " + format_number(sc.alpha0));
  }
  {
    const OscillatorParams p{1.0, 1.0, 1.0, 5.0};
    const PmsResult pms = pms_optimize(p, 3);
    const auto ex = expand(p, pms.omega_tilde_star, 3);
    const AnsatzScales sc = ansatz_scales(p, pms.omega_star);
    const auto grid = symmetric_grid(default_half_width(sc, ex.xi_sum()), kDefaultProfilePoints);
    const WaveProfile prof = assemble(ex, sc, grid);
    bool ok = prof.values[(grid.size() - 1) / 2] == 1.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (prof.values[i] != prof.values[grid.size() - 1 - i]) ok = false;
    const WaveProfile n = normalize(prof);
    std::vector<double> sq(n.values.size());
    for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = n.values[i] * n.values[i];
    if (std::abs(trapezoid(n.grid, sq) - 1.0) > 1e-10) ok = false;
    check("wave-parity-and-origin", ok);
  }
  return out;
}

}  // namespace aho::cli
