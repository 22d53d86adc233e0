#ifndef SCS_SCENARIO_HPP
#define SCS_SCENARIO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "scs/model.hpp"
#include "scs/position.hpp"

namespace scs {

struct ScenarioParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ScenarioValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TimeSpec {
  double t_start = 0.0;
  double t_end = 1.0;
  int n_samples = 2;

  double sample(int i) const {
    return t_start + (t_end - t_start) * i / static_cast<double>(n_samples - 1);
  }
};

struct GridSpec {
  bool automatic = true;
  SpatialGrid grid{};   // used when automatic == false
  int n_points = 1024;  // used when automatic == true
};

// Flat key = value scenario file with dotted section keys:
//   model.*   hbar, m0, gamma (or gamma_list), l
//   init.*    either f0_re/f0_im, g0_re/g0_im, varphi_re/varphi_im
//             or r, sigma_x0, varphi_abs, theta_varphi  (then l = sqrt(2) e^r sigma_x0)
//   time.*    t_start, t_end, n_samples
//   grid.*    mode = auto | explicit, x_min, x_max, n_points
//   output.*  truncation_eps, artifacts (comma-separated)
struct Scenario {
  ModelParams model;
  std::vector<double> gamma_list;  // optional sweep for the uncertainty artifact
  InitialConditions init;

  bool r_parameterized = false;
  double r = 0.0;
  double sigma_x0 = 1.0;
  double varphi_abs = 0.0;
  double theta_varphi = 0.0;

  TimeSpec time;
  GridSpec grid;
  double truncation_eps = 1e-10;
  std::vector<std::string> outputs;

  void validate() const;  // throws ScenarioValidationError
};

Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::string& path);

}  // namespace scs

#endif
