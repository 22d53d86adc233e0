#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "scs/scenario.hpp"

using namespace scs;
namespace fs = std::filesystem;

namespace {

const std::string kBasicScenario = R"(# basic squeezed scenario
model.hbar = 1
model.m0 = 1
model.gamma = 0.1

init.r = 0.3
init.sigma_x0 = 1.0
init.varphi_abs = 1.0
init.theta_varphi = 1.5707963267948966

time.t_start = 0
time.t_end = 10
time.n_samples = 11

output.truncation_eps = 1e-10
)";

fs::path temp_dir() {
  const auto dir = fs::temp_directory_path() / "scs_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const auto path = temp_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

int run_cli(const std::string& args, const fs::path& stdout_to) {
  const std::string cmd =
      std::string(SCS_CLI_PATH) + " " + args + " > " + stdout_to.string() + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("scenario parser round-trips the r-parameterization") {
  std::istringstream in(kBasicScenario);
  const Scenario sc = parse_scenario(in);
  CHECK(sc.r_parameterized);
  CHECK(sc.r == doctest::Approx(0.3));
  CHECK(sc.model.l == doctest::Approx(std::sqrt(2.0) * std::exp(0.3)));
  CHECK(sc.init.f0.real() == doctest::Approx(std::cosh(0.3)));
  CHECK(sc.init.g0.real() == doctest::Approx(std::sinh(0.3)));
  CHECK(std::abs(sc.init.varphi - complexd{0.0, 1.0}) < 1e-12);
  CHECK(sc.time.n_samples == 11);
  CHECK(sc.grid.automatic);
}

TEST_CASE("parser rejects malformed input") {
  std::istringstream bad1("model.hbar 1\n");
  CHECK_THROWS_AS(parse_scenario(bad1), ScenarioParseError);
  std::istringstream bad2("model.hbar = abc\n");
  CHECK_THROWS_AS(parse_scenario(bad2), ScenarioParseError);
  std::istringstream bad3("unknown.key = 1\n");
  CHECK_THROWS_AS(parse_scenario(bad3), ScenarioParseError);
  std::istringstream bad4("init.r = 1\ninit.f0_re = 1\n");
  CHECK_THROWS_AS(parse_scenario(bad4), ScenarioParseError);
  std::istringstream bad5("model.hbar = 1\nmodel.hbar = 2\n");
  CHECK_THROWS_AS(parse_scenario(bad5), ScenarioParseError);
}

TEST_CASE("validation rejects bad ranges") {
  std::istringstream in1("time.n_samples = 1\n");
  CHECK_THROWS_AS(parse_scenario(in1), ScenarioValidationError);
  std::istringstream in2("output.truncation_eps = 1e-3\n");
  CHECK_THROWS_AS(parse_scenario(in2), ScenarioValidationError);
  std::istringstream in3("model.hbar = -1\n");
  CHECK_THROWS_AS(parse_scenario(in3), std::invalid_argument);
}

TEST_CASE("cli: moments of a real-squeeze state start at minimum uncertainty") {
  const auto scen = write_file("basic.scenario", kBasicScenario);
  const auto out = temp_dir() / "moments.csv";
  REQUIRE(run_cli("moments " + scen.string(), out) == 0);

  // first data row is t = 0; column 7 is sigma_x_sigma_p
  std::ifstream in(out);
  std::string line;
  bool header_seen = false;
  std::vector<std::string> row;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(cell);
    break;
  }
  REQUIRE(row.size() == 8);
  CHECK(std::stod(row[0]) == 0.0);
  CHECK(std::stod(row[6]) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("cli: identical runs produce byte-identical output") {
  const auto scen = write_file("basic.scenario", kBasicScenario);
  const auto out1 = temp_dir() / "det1.csv";
  const auto out2 = temp_dir() / "det2.csv";
  REQUIRE(run_cli("coeffs " + scen.string() + " --t 2.5", out1) == 0);
  REQUIRE(run_cli("coeffs " + scen.string() + " --t 2.5", out2) == 0);
  const std::string a = slurp(out1);
  const std::string b = slurp(out2);
  CHECK(a == b);
  CHECK(!a.empty());
  CHECK(a.find("\r") == std::string::npos);  // LF endings only
}

TEST_CASE("cli: exit codes distinguish parse, validation and numerical errors") {
  const auto devnull = fs::path("/dev/null");
  const auto bad_parse = write_file("bad_parse.scenario", "model.hbar\n");
  CHECK(run_cli("moments " + bad_parse.string(), devnull) == 2);

  const auto bad_valid = write_file("bad_valid.scenario",
                                    "model.hbar = 1\ntime.n_samples = 1\n");
  CHECK(run_cli("moments " + bad_valid.string(), devnull) == 3);

  // admissible squeeze whose expansion needs far more levels than the cap
  const auto numerical = write_file("numerical.scenario",
                                    "init.r = 12\ninit.sigma_x0 = 1\n"
                                    "init.varphi_abs = 0\ninit.theta_varphi = 0\n");
  CHECK(run_cli("coeffs " + numerical.string() + " --t 0", devnull) == 4);

  CHECK(run_cli("moments " + std::string("/nonexistent.scenario"), devnull) == 2);
}

TEST_CASE("cli: run writes the requested artifacts and a manifest") {
  const std::string scenario = R"(model.gamma = 0.1
model.gamma_list = 0.1, -0.1
init.r = 0
init.sigma_x0 = 1
init.varphi_abs = 0.5
init.theta_varphi = 1.5707963267948966
time.t_start = 0
time.t_end = 5
time.n_samples = 6
output.artifacts = uncertainty, moments, transition, quadrature
)";
  const auto scen = write_file("run.scenario", scenario);
  const auto out_dir = temp_dir() / "run_out";
  fs::remove_all(out_dir);
  REQUIRE(run_cli("run " + scen.string() + " " + out_dir.string(), "/dev/null") == 0);
  CHECK(fs::exists(out_dir / "uncertainty.csv"));
  CHECK(fs::exists(out_dir / "moments.csv"));
  CHECK(fs::exists(out_dir / "transition.csv"));
  CHECK(fs::exists(out_dir / "quadrature.csv"));
  CHECK(fs::exists(out_dir / "manifest.json"));

  const std::string uncertainty = slurp(out_dir / "uncertainty.csv");
  // match the %.17g rendering by prefix only
  CHECK(uncertainty.find("sigma_x_sigma_p(gamma=0.1") != std::string::npos);
  CHECK(uncertainty.find("sigma_x_sigma_p(gamma=-0.1") != std::string::npos);
  const std::string manifest = slurp(out_dir / "manifest.json");
  CHECK(manifest.find("\"library_version\"") != std::string::npos);
  CHECK(manifest.find("\"truncation_eps\"") != std::string::npos);
}

TEST_CASE("cli: json format emits parseable structured output") {
  const auto scen = write_file("basic.scenario", kBasicScenario);
  const auto out = temp_dir() / "moments.json";
  REQUIRE(run_cli("moments " + scen.string() + " --format json", out) == 0);
  const std::string body = slurp(out);
  CHECK(body.find("\"columns\"") != std::string::npos);
  CHECK(body.find("sigma_x_sigma_p") != std::string::npos);
}
