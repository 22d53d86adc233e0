#include "scs/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace scs {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double out;
  try {
    out = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ScenarioParseError("scenario: bad numeric value for '" + key + "': " + value);
  }
  if (pos != value.size())
    throw ScenarioParseError("scenario: trailing characters in value for '" + key + "': " + value);
  return out;
}

int to_int(const std::string& key, const std::string& value) {
  const double d = to_double(key, value);
  if (d != std::floor(d) || std::abs(d) > 1e9)
    throw ScenarioParseError("scenario: expected an integer for '" + key + "': " + value);
  return static_cast<int>(d);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

void Scenario::validate() const {
  model.validate();
  init.validate();
  if (time.n_samples < 2)
    throw ScenarioValidationError("scenario: time.n_samples must be >= 2");
  if (!(time.t_end > time.t_start))
    throw ScenarioValidationError("scenario: time.t_end must exceed time.t_start");
  if (!(truncation_eps > 0.0) || truncation_eps > 1e-4)
    throw ScenarioValidationError("scenario: output.truncation_eps must be in (0, 1e-4]");
  if (!grid.automatic) {
    try {
      grid.grid.validate();
    } catch (const std::invalid_argument& e) {
      throw ScenarioValidationError(std::string("scenario: ") + e.what());
    }
  } else if (grid.n_points < 8) {
    throw ScenarioValidationError("scenario: grid.n_points must be >= 8");
  }
  for (double g : gamma_list) {
    if (!std::isfinite(g))
      throw ScenarioValidationError("scenario: model.gamma_list entries must be finite");
  }
}

Scenario parse_scenario(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ScenarioParseError("scenario: line " + std::to_string(line_no) +
                               ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ScenarioParseError("scenario: line " + std::to_string(line_no) +
                               ": empty key or value");
    if (kv.count(key))
      throw ScenarioParseError("scenario: duplicate key '" + key + "'");
    kv[key] = value;
  }

  Scenario sc;
  auto take = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) return std::pair<bool, std::string>{false, {}};
    std::pair<bool, std::string> out{true, it->second};
    kv.erase(it);
    return out;
  };
  auto take_double = [&](const std::string& key, double& dst) {
    if (auto [found, v] = take(key); found) {
      dst = to_double(key, v);
      return true;
    }
    return false;
  };
  auto take_int = [&](const std::string& key, int& dst) {
    if (auto [found, v] = take(key); found) {
      dst = to_int(key, v);
      return true;
    }
    return false;
  };

  take_double("model.hbar", sc.model.hbar);
  take_double("model.m0", sc.model.m0);
  take_double("model.gamma", sc.model.gamma);
  take_double("model.l", sc.model.l);
  if (auto [found, v] = take("model.gamma_list"); found) {
    for (const auto& item : split_list(v))
      sc.gamma_list.push_back(to_double("model.gamma_list", item));
    if (sc.gamma_list.empty())
      throw ScenarioParseError("scenario: model.gamma_list must not be empty");
  }

  const bool has_r = kv.count("init.r") != 0;
  const bool has_fg = kv.count("init.f0_re") || kv.count("init.f0_im") ||
                      kv.count("init.g0_re") || kv.count("init.g0_im") ||
                      kv.count("init.varphi_re") || kv.count("init.varphi_im");
  if (has_r && has_fg)
    throw ScenarioParseError(
        "scenario: init.r and init.f0/g0/varphi parameterizations are mutually exclusive");
  if (has_r) {
    sc.r_parameterized = true;
    take_double("init.r", sc.r);
    take_double("init.sigma_x0", sc.sigma_x0);
    take_double("init.varphi_abs", sc.varphi_abs);
    take_double("init.theta_varphi", sc.theta_varphi);
    if (!(sc.sigma_x0 > 0.0))
      throw ScenarioParseError("scenario: init.sigma_x0 must be > 0");
    sc.model.l = std::sqrt(2.0) * std::exp(sc.r) * sc.sigma_x0;
    sc.init = InitialConditions::from_squeeze(
        sc.r, std::polar(sc.varphi_abs, sc.theta_varphi));
  } else {
    double f0_re = 1.0, f0_im = 0.0, g0_re = 0.0, g0_im = 0.0, vp_re = 0.0, vp_im = 0.0;
    take_double("init.f0_re", f0_re);
    take_double("init.f0_im", f0_im);
    take_double("init.g0_re", g0_re);
    take_double("init.g0_im", g0_im);
    take_double("init.varphi_re", vp_re);
    take_double("init.varphi_im", vp_im);
    sc.init.f0 = {f0_re, f0_im};
    sc.init.g0 = {g0_re, g0_im};
    sc.init.varphi = {vp_re, vp_im};
  }

  take_double("time.t_start", sc.time.t_start);
  take_double("time.t_end", sc.time.t_end);
  take_int("time.n_samples", sc.time.n_samples);

  if (auto [found, v] = take("grid.mode"); found) {
    if (v == "auto") {
      sc.grid.automatic = true;
    } else if (v == "explicit") {
      sc.grid.automatic = false;
    } else {
      throw ScenarioParseError("scenario: grid.mode must be 'auto' or 'explicit', got: " + v);
    }
  }
  take_double("grid.x_min", sc.grid.grid.x_min);
  take_double("grid.x_max", sc.grid.grid.x_max);
  int gp = 0;
  if (take_int("grid.n_points", gp)) {
    sc.grid.n_points = gp;
    sc.grid.grid.n_points = gp;
  }

  take_double("output.truncation_eps", sc.truncation_eps);
  if (auto [found, v] = take("output.artifacts"); found) sc.outputs = split_list(v);

  if (!kv.empty())
    throw ScenarioParseError("scenario: unknown key '" + kv.begin()->first + "'");

  sc.validate();
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioParseError("scenario: cannot open file: " + path);
  return parse_scenario(in);
}

}  // namespace scs
