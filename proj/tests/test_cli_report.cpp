#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "aho/cli.hpp"
#include "aho/report.hpp"

namespace fs = std::filesystem;
using aho::cli::RawOptions;
using aho::cli::resolve_config;
using aho::cli::RunConfig;
using nlohmann::json;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "aho_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("number formatting is fixed at 12 significant digits") {
  CHECK(aho::report::format_number(0.5) == "0.5");
  CHECK(aho::report::format_number(961.0 / 1024.0) == "0.9384765625");
  CHECK(aho::report::format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(aho::report::format_number(1e-8) == "1e-08");
}

TEST_CASE("csv emitter: header always present, newline-terminated rows") {
  aho::report::Table t;
  t.columns = {"a", "b"};
  CHECK(aho::report::to_csv(t) == "a,b\n");
  t.rows = {{1.0, 0.25}, {2.0, -3.5}};
  CHECK(aho::report::to_csv(t) == "a,b\n1,0.25\n2,-3.5\n");
}

TEST_CASE("json emitter produces parseable output with null for non-finite") {
  aho::report::Table t;
  t.command = "energy";
  t.meta = {{"mu", "5"}};
  t.columns = {"x"};
  t.rows = {{std::numeric_limits<double>::quiet_NaN()}};
  const json j = json::parse(aho::report::to_json(t));
  CHECK(j["command"] == "energy");
  CHECK(j["meta"]["mu"] == "5");
  CHECK(j["rows"][0][0].is_null());
}

TEST_CASE("orders and mu-grid parsing") {
  CHECK(aho::cli::parse_orders("2..5") == std::pair<int, int>{2, 5});
  CHECK(aho::cli::parse_orders("4") == std::pair<int, int>{4, 4});
  REQUIRE_THROWS_AS(aho::cli::parse_orders("x..y"), std::domain_error);
  const auto [start, stop, count] = aho::cli::parse_mu_grid("0.1:20:40");
  CHECK(start == 0.1);
  CHECK(stop == 20.0);
  CHECK(count == 40);
  REQUIRE_THROWS_AS(aho::cli::parse_mu_grid("1-2-3"), std::domain_error);
}

TEST_CASE("config file fills unset flags; flags win") {
  const fs::path cfg_path = scratch_dir() / "config.json";
  {
    std::ofstream out(cfg_path);
    out << R"({"mu": 5.0, "order": 2, "format": "json"})";
  }
  RawOptions raw;
  raw.order = 4;  // as if passed on the command line
  raw.config_path = cfg_path.string();
  const RunConfig cfg = resolve_config("energy", raw);
  CHECK(cfg.params.mu == 5.0);
  CHECK(cfg.order == 4);
  CHECK(cfg.format == "json");
}

TEST_CASE("unknown config keys are rejected") {
  const fs::path cfg_path = scratch_dir() / "bad.json";
  {
    std::ofstream out(cfg_path);
    out << R"({"mu": 5.0, "typo-key": 1})";
  }
  RawOptions raw;
  raw.config_path = cfg_path.string();
  REQUIRE_THROWS_AS(resolve_config("energy", raw), std::domain_error);
}

TEST_CASE("config invariants are enforced") {
  {
    RawOptions raw;
    raw.order = 99;
    REQUIRE_THROWS_AS(resolve_config("energy", raw), std::domain_error);
  }
  {
    RawOptions raw;
    raw.format = "xml";
    REQUIRE_THROWS_AS(resolve_config("energy", raw), std::domain_error);
  }
  {
    RawOptions raw;
    raw.tol = -1.0;
    REQUIRE_THROWS_AS(resolve_config("energy", raw), std::domain_error);
  }
  {
    RawOptions raw;
    raw.out = "/nonexistent_dir_zzz/x.csv";
    REQUIRE_THROWS_AS(resolve_config("scan-omega", raw), std::domain_error);
  }
  {
    RawOptions raw;
    raw.mu = -3.0;
    REQUIRE_THROWS_AS(resolve_config("energy", raw), std::domain_error);
  }
}

TEST_CASE("scan-omega needs at least two orders to scan") {
  RawOptions raw;
  raw.order = 1;
  CHECK(aho::cli::run(resolve_config("scan-omega", raw)) == 2);
}

TEST_CASE("config file accepts numeric shorthand for orders") {
  const fs::path cfg_path = scratch_dir() / "orders.json";
  {
    std::ofstream out(cfg_path);
    out << R"({"orders": 3})";
  }
  RawOptions raw;
  raw.config_path = cfg_path.string();
  const RunConfig cfg = resolve_config("scan-mu", raw);
  CHECK(cfg.orders_lo == 3);
  CHECK(cfg.orders_hi == 3);
}

TEST_CASE("command defaults mirror the figure configurations") {
  CHECK(resolve_config("scan-omega", {}).params.mu == 5.0);
  CHECK(resolve_config("scan-omega", {}).order == 5);
  CHECK(resolve_config("wavefunction", {}).params.mu == 200.0);
  CHECK(resolve_config("alpha0", {}).orders_lo == 1);
  CHECK(resolve_config("alpha0", {}).orders_hi == 3);
  CHECK(resolve_config("scan-mu", {}).mu_start == 0.1);
  CHECK(resolve_config("scan-mu", {}).mu_stop == 20.0);
  CHECK(resolve_config("scan-mu", {}).out == "scan-mu.csv");
  CHECK(resolve_config("energy", {}).out.empty());
}

TEST_CASE("energy command writes a record that matches the published schema") {
  RawOptions raw;
  raw.mu = 5.0;
  raw.order = 3;
  raw.format = "json";
  raw.out = (scratch_dir() / "energy.json").string();
  const RunConfig cfg = resolve_config("energy", raw);
  REQUIRE(aho::cli::run(cfg) == 0);

  const json doc = json::parse(slurp(raw.out.value()));
  const json schema = json::parse(slurp(fs::path(AHO_SOURCE_DIR) / "docs/output.schema.json"));
  for (const auto& field : schema.at("required")) REQUIRE(doc.contains(field.get<std::string>()));
  CHECK(doc["command"] == "energy");
  REQUIRE(doc["columns"].size() == 6);
  const auto row = doc["rows"][0];
  const double e_pms = row[1].get<double>();
  const double e_ref = row[2].get<double>();
  CHECK(std::isfinite(e_pms));
  CHECK(std::isfinite(e_ref));
  CHECK(e_pms <= e_ref);  // truncated estimate approaches from below here
  CHECK(std::abs(e_pms - 0.81540620) < 1e-6);
  CHECK(std::abs(e_ref - 0.84655356) < 1e-6);
}

TEST_CASE("scan output files are byte-identical across reruns") {
  RawOptions raw;
  raw.order = 2;
  raw.out = (scratch_dir() / "scan-omega.csv").string();
  const RunConfig cfg = resolve_config("scan-omega", raw);
  REQUIRE(aho::cli::run(cfg) == 0);
  const std::string first = slurp(raw.out.value());
  REQUIRE(aho::cli::run(cfg) == 0);
  CHECK(first == slurp(raw.out.value()));
  CHECK(first.substr(0, first.find('\n')) == "omega,omega_tilde,order,energy");
  CHECK(first.back() == '\n');
}

TEST_CASE("scan-mu with an explicit mu=0 reduces to the harmonic values") {
  RawOptions raw;
  raw.mu = 0.0;
  raw.orders = "1";
  raw.out = (scratch_dir() / "scan-mu.csv").string();
  const RunConfig cfg = resolve_config("scan-mu", raw);
  REQUIRE(cfg.mu_single);
  REQUIRE(aho::cli::run(cfg) == 0);
  const std::string body = slurp(raw.out.value());
  std::istringstream lines(body);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "mu,order,energy_pms,energy_exact");
  REQUIRE(std::getline(lines, row));
  double mu, order, e_pms, e_exact;
  REQUIRE(std::sscanf(row.c_str(), "%lf,%lf,%lf,%lf", &mu, &order, &e_pms, &e_exact) == 4);
  CHECK(mu == 0.0);
  CHECK(e_pms == 0.5);
  CHECK(std::abs(e_exact - 0.5) < 1e-7);
}

TEST_CASE("alpha0 skips the orderless first order but keeps the rest") {
  RawOptions raw;
  raw.orders = "1..3";
  raw.out = (scratch_dir() / "alpha0.csv").string();
  const RunConfig cfg = resolve_config("alpha0", raw);
  REQUIRE(aho::cli::run(cfg) == 0);
  const std::string body = slurp(raw.out.value());
  CHECK(body.find("0.627") != std::string::npos);
  int data_rows = 0;
  for (const char c : body)
    if (c == '\n') ++data_rows;
  CHECK(data_rows - 1 == 2);  // orders 2 and 3
}

TEST_CASE("a run that produces no rows fails with no file left behind") {
  RawOptions raw;
  raw.orders = "1..1";
  const fs::path out = scratch_dir() / "alpha0_none.csv";
  raw.out = out.string();
  std::error_code ec;
  fs::remove(out, ec);
  const RunConfig cfg = resolve_config("alpha0", raw);
  CHECK(aho::cli::run(cfg) == 3);
  CHECK_FALSE(fs::exists(out));
  fs::path tmp = out;
  tmp += ".tmp";
  CHECK_FALSE(fs::exists(tmp));
}

TEST_CASE("wavefunction command emits the four-column table") {
  RawOptions raw;
  raw.out = (scratch_dir() / "wavefunction.csv").string();
  raw.tol = 1e-7;  // coarser ladder keeps this test quick
  const RunConfig cfg = resolve_config("wavefunction", raw);
  REQUIRE(aho::cli::run(cfg) == 0);
  const std::string body = slurp(raw.out.value());
  CHECK(body.substr(0, body.find('\n')) == "x,psi_exact,psi_K3,psi_K4");
  int rows = -1;
  for (const char c : body)
    if (c == '\n') ++rows;
  CHECK(rows > 100);
}
