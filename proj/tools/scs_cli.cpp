// Scenario-driven front end for the scs library. Every library module is
// exposed as a subcommand; `run` writes one CSV per requested artifact plus
// a JSON manifest. Exit codes: 0 ok, 2 parse error, 3 validation error,
// 4 numerical failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "scs/fock.hpp"
#include "scs/model.hpp"
#include "scs/overlap.hpp"
#include "scs/position.hpp"
#include "scs/scenario.hpp"
#include "scs/statistics.hpp"
#include "scs/verify.hpp"
#include "scs/version.hpp"

namespace {

using nlohmann::json;
using namespace scs;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNumerical = 4;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// One table: '#'-prefixed metadata lines, one header row, LF endings.
struct CsvTable {
  std::vector<std::string> meta;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& out) const {
    for (const auto& m : meta) out << "# " << m << "\n";
    for (std::size_t i = 0; i < header.size(); ++i)
      out << header[i] << (i + 1 < header.size() ? "," : "");
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << row[i] << (i + 1 < row.size() ? "," : "");
      out << "\n";
    }
  }

  json to_json() const {
    json j;
    j["columns"] = header;
    json data = json::array();
    for (const auto& row : rows) {
      json r = json::array();
      for (const auto& cell : row) {
        try {
          std::size_t pos = 0;
          const double d = std::stod(cell, &pos);
          if (pos == cell.size()) {
            r.push_back(d);
            continue;
          }
        } catch (const std::exception&) {
        }
        r.push_back(cell);
      }
      data.push_back(std::move(r));
    }
    j["data"] = std::move(data);
    return j;
  }
};

void emit(const CsvTable& table, const std::string& format) {
  if (format == "json")
    std::cout << table.to_json().dump(2) << "\n";
  else
    table.write(std::cout);
}

SpatialGrid resolve_grid(const Scenario& sc, const EvolvedParams& ep) {
  if (!sc.grid.automatic) return sc.grid.grid;
  return auto_grid(ep, sc.model, sc.grid.n_points);
}

std::vector<std::string> scenario_meta(const Scenario& sc) {
  std::vector<std::string> meta;
  meta.push_back("library_version = " + std::string(kVersion));
  meta.push_back("model.hbar = " + fmt(sc.model.hbar));
  meta.push_back("model.m0 = " + fmt(sc.model.m0));
  meta.push_back("model.gamma = " + fmt(sc.model.gamma));
  meta.push_back("model.l = " + fmt(sc.model.l));
  meta.push_back("init.f0 = " + fmt(sc.init.f0.real()) + " + " + fmt(sc.init.f0.imag()) + "i");
  meta.push_back("init.g0 = " + fmt(sc.init.g0.real()) + " + " + fmt(sc.init.g0.imag()) + "i");
  meta.push_back("init.varphi = " + fmt(sc.init.varphi.real()) + " + " +
                 fmt(sc.init.varphi.imag()) + "i");
  return meta;
}

CsvTable table_evolve(const Scenario& sc) {
  CsvTable t;
  t.meta = scenario_meta(sc);
  t.header = {"t",       "f_re",    "f_im", "g_re",      "g_im", "xi_re",
              "xi_im",   "zeta_re", "zeta_im", "mu",     "phase_phi"};
  for (int i = 0; i < sc.time.n_samples; ++i) {
    const double ti = sc.time.sample(i);
    const auto ep = evolve_closed_form(sc.model, sc.init, ti);
    t.rows.push_back({fmt(ep.t), fmt(ep.f.real()), fmt(ep.f.imag()), fmt(ep.g.real()),
                      fmt(ep.g.imag()), fmt(ep.xi.real()), fmt(ep.xi.imag()),
                      fmt(ep.zeta.real()), fmt(ep.zeta.imag()), fmt(ep.mu),
                      fmt(ep.phase_phi)});
  }
  return t;
}

CsvTable table_coeffs(const Scenario& sc, double t_at) {
  const auto ep = evolve_closed_form(sc.model, sc.init, t_at);
  const auto fe = coeffs_closed_form(ep, 0, sc.truncation_eps);
  CsvTable t;
  t.meta = scenario_meta(sc);
  t.meta.push_back("t = " + fmt(t_at));
  t.meta.push_back("tail_bound = " + fmt(fe.tail_bound));
  t.header = {"n", "c_re", "c_im", "abs2"};
  for (std::size_t n = 0; n < fe.coeffs.size(); ++n)
    t.rows.push_back({std::to_string(n), fmt(fe.coeffs[n].real()), fmt(fe.coeffs[n].imag()),
                      fmt(std::norm(fe.coeffs[n]))});
  return t;
}

CsvTable table_density(const Scenario& sc, double t_at) {
  const auto ep = evolve_closed_form(sc.model, sc.init, t_at);
  const auto grid = resolve_grid(sc, ep);
  const auto field = scs_wavefunction(ep, sc.model, grid);
  const auto rho = probability_density(ep, sc.model, grid);
  CsvTable t;
  t.meta = scenario_meta(sc);
  t.meta.push_back("t = " + fmt(t_at));
  t.meta.push_back("grid_norm = " + fmt(field.norm_estimate));
  if (field.narrow_grid_warning) t.meta.push_back("warning = grid may be too narrow");
  t.header = {"x", "rho", "psi_re", "psi_im"};
  for (int i = 0; i < grid.n_points; ++i)
    t.rows.push_back({fmt(grid.point(i)), fmt(rho[i]), fmt(field.values[i].real()),
                      fmt(field.values[i].imag())});
  return t;
}

CsvTable table_moments(const Scenario& sc) {
  CsvTable t;
  t.meta = scenario_meta(sc);
  t.header = {"t",       "mean_x",   "mean_p",           "sigma_x",
              "sigma_p", "sigma_xp", "sigma_x_sigma_p",  "robertson_schrodinger"};
  for (int i = 0; i < sc.time.n_samples; ++i) {
    const double ti = sc.time.sample(i);
    const auto ep = evolve_closed_form(sc.model, sc.init, ti);
    const auto gm = moments(ep, sc.model);
    t.rows.push_back({fmt(ti), fmt(gm.mean_x), fmt(gm.mean_p), fmt(gm.sigma_x), fmt(gm.sigma_p),
                      fmt(gm.sigma_xp), fmt(gm.uncertainty_product()),
                      fmt(gm.robertson_schrodinger())});
  }
  return t;
}

CsvTable table_transition(const Scenario& sc, double t_at) {
  const auto ep = evolve_closed_form(sc.model, sc.init, t_at);
  const auto ts = transition_probabilities(ep, 0, sc.truncation_eps);
  CsvTable t;
  t.meta = scenario_meta(sc);
  t.meta.push_back("t = " + fmt(t_at));
  t.meta.push_back("total = " + fmt(ts.total));
  t.header = {"n", "P_n"};
  for (std::size_t n = 0; n < ts.probs.size(); ++n)
    t.rows.push_back({std::to_string(n), fmt(ts.probs[n])});
  return t;
}

CsvTable table_overlap(const Scenario& sc, const std::optional<std::string>& other_path,
                       double t_at) {
  const auto ep1 = evolve_closed_form(sc.model, sc.init, t_at);
  EvolvedParams ep2 = ep1;
  if (other_path) {
    const Scenario other = load_scenario(*other_path);
    ep2 = evolve_closed_form(other.model, other.init, t_at);
  }
  const auto res = overlap(ep1, ep2, sc.model);
  CsvTable t;
  t.meta = scenario_meta(sc);
  t.meta.push_back("t = " + fmt(t_at));
  if (res.ill_conditioned) t.meta.push_back("warning = overlap is ill-conditioned");
  t.header = {"overlap_re", "overlap_im", "magnitude"};
  t.rows.push_back({fmt(res.value.real()), fmt(res.value.imag()), fmt(res.magnitude)});
  return t;
}

CsvTable table_completeness(const Scenario& sc, double t_at, int n_max, int quad_order) {
  const auto ep = evolve_closed_form(sc.model, sc.init, t_at);
  const auto m = completeness_check(ep.zeta, ep.mu, n_max, quad_order);
  CsvTable t;
  t.meta = scenario_meta(sc);
  t.meta.push_back("t = " + fmt(t_at));
  t.meta.push_back("n_max = " + std::to_string(n_max));
  t.meta.push_back("quad_order = " + std::to_string(quad_order));
  t.meta.push_back("max_identity_residual = " + fmt(completeness_residual(m)));
  t.header = {"n", "n_prime", "M_re", "M_im"};
  for (int n = 0; n < m.rows(); ++n)
    for (int np = 0; np < m.cols(); ++np)
      t.rows.push_back({std::to_string(n), std::to_string(np), fmt(m(n, np).real()),
                        fmt(m(n, np).imag())});
  return t;
}

CsvTable table_verify(const Scenario& sc, double t_at, int dx_order, double dt_step) {
  const auto ep0 = evolve_closed_form(sc.model, sc.init, t_at);
  const auto grid = resolve_grid(sc, ep0);
  const auto ep_at = [&](double tau) { return evolve_closed_form(sc.model, sc.init, tau); };
  const auto rep = schrodinger_residual(ep_at, sc.model, grid, t_at, dx_order, dt_step);
  CsvTable t;
  t.meta = scenario_meta(sc);
  t.header = {"t",  "l2_residual", "relative_residual", "space_order",
              "time_order", "dx", "dt"};
  t.rows.push_back({fmt(rep.t), fmt(rep.l2_residual), fmt(rep.relative_residual),
                    std::to_string(rep.space_order), std::to_string(rep.time_order),
                    fmt(rep.dx), fmt(rep.dt)});
  return t;
}

CsvTable table_uncertainty_sweep(const Scenario& sc) {
  std::vector<double> gammas = sc.gamma_list;
  if (gammas.empty()) gammas.push_back(sc.model.gamma);
  CsvTable t;
  t.meta = scenario_meta(sc);
  t.header = {"t"};
  for (double g : gammas) t.header.push_back("sigma_x_sigma_p(gamma=" + fmt(g) + ")");
  for (int i = 0; i < sc.time.n_samples; ++i) {
    const double ti = sc.time.sample(i);
    std::vector<std::string> row{fmt(ti)};
    for (double g : gammas) {
      ModelParams mp = sc.model;
      mp.gamma = g;
      const auto ep = evolve_closed_form(mp, sc.init, ti);
      row.push_back(fmt(uncertainty_product(ep, mp)));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable table_quadrature(const Scenario& sc) {
  if (!sc.r_parameterized)
    throw ScenarioValidationError("quadrature artifact requires the init.r parameterization");
  std::vector<double> taus(sc.time.n_samples);
  for (int i = 0; i < sc.time.n_samples; ++i) taus[i] = sc.time.sample(i);
  const auto trace = quadrature_trace(sc.r, taus);
  CsvTable t;
  t.meta = scenario_meta(sc);
  t.meta.push_back("r = " + fmt(sc.r));
  t.header = {"tau", "sigma_Q", "sigma_P"};
  for (const auto& rec : trace)
    t.rows.push_back({fmt(rec.tau), fmt(rec.sigma_Q), fmt(rec.sigma_P)});
  return t;
}

CsvTable table_density_trace(const Scenario& sc) {
  const auto ep0 = evolve_closed_form(sc.model, sc.init, sc.time.t_start);
  const auto gm0 = moments(ep0, sc.model);
  CsvTable t;
  t.meta = scenario_meta(sc);
  t.header = {"t", "x", "rho", "xbar_classical"};
  for (int i = 0; i < sc.time.n_samples; ++i) {
    const double ti = sc.time.sample(i);
    const auto ep = evolve_closed_form(sc.model, sc.init, ti);
    const auto grid = resolve_grid(sc, ep);
    const auto rho = probability_density(ep, sc.model, grid);
    const auto [xc, pc] = classical_trajectory(gm0.mean_x, gm0.mean_p, sc.model, ti);
    for (int k = 0; k < grid.n_points; ++k)
      t.rows.push_back({fmt(ti), fmt(grid.point(k)), fmt(rho[k]), fmt(xc)});
  }
  return t;
}

CsvTable table_transition_trace(const Scenario& sc) {
  CsvTable t;
  t.meta = scenario_meta(sc);
  t.header = {"t", "n", "P_n"};
  for (int i = 0; i < sc.time.n_samples; ++i) {
    const double ti = sc.time.sample(i);
    const auto ep = evolve_closed_form(sc.model, sc.init, ti);
    const auto ts = transition_probabilities(ep, 0, sc.truncation_eps);
    for (std::size_t n = 0; n < ts.probs.size(); ++n)
      t.rows.push_back({fmt(ti), std::to_string(n), fmt(ts.probs[n])});
  }
  return t;
}

json scenario_to_json(const Scenario& sc) {
  json j;
  j["model"] = {{"hbar", sc.model.hbar},
                {"m0", sc.model.m0},
                {"gamma", sc.model.gamma},
                {"l", sc.model.l}};
  if (!sc.gamma_list.empty()) j["model"]["gamma_list"] = sc.gamma_list;
  j["init"] = {{"f0_re", sc.init.f0.real()},   {"f0_im", sc.init.f0.imag()},
               {"g0_re", sc.init.g0.real()},   {"g0_im", sc.init.g0.imag()},
               {"varphi_re", sc.init.varphi.real()},
               {"varphi_im", sc.init.varphi.imag()}};
  if (sc.r_parameterized) {
    j["init"]["r"] = sc.r;
    j["init"]["sigma_x0"] = sc.sigma_x0;
    j["init"]["varphi_abs"] = sc.varphi_abs;
    j["init"]["theta_varphi"] = sc.theta_varphi;
  }
  j["time"] = {{"t_start", sc.time.t_start},
               {"t_end", sc.time.t_end},
               {"n_samples", sc.time.n_samples}};
  if (sc.grid.automatic) {
    j["grid"] = {{"mode", "auto"}, {"n_points", sc.grid.n_points}};
  } else {
    j["grid"] = {{"mode", "explicit"},
                 {"x_min", sc.grid.grid.x_min},
                 {"x_max", sc.grid.grid.x_max},
                 {"n_points", sc.grid.grid.n_points}};
  }
  j["output"] = {{"truncation_eps", sc.truncation_eps}, {"artifacts", sc.outputs}};
  return j;
}

int run_scenario(const std::string& scenario_path, const std::string& out_dir) {
  const auto wall_start = std::chrono::steady_clock::now();
  const Scenario sc = load_scenario(scenario_path);
  if (sc.outputs.empty())
    throw ScenarioValidationError("run: scenario requests no artifacts (output.artifacts)");

  std::filesystem::create_directories(out_dir);
  json manifest;
  manifest["library_version"] = kVersion;
  manifest["scenario_file"] = scenario_path;
  manifest["scenario"] = scenario_to_json(sc);
  manifest["artifacts"] = json::array();

  for (const auto& name : sc.outputs) {
    CsvTable table;
    if (name == "uncertainty") {
      table = table_uncertainty_sweep(sc);
    } else if (name == "quadrature") {
      table = table_quadrature(sc);
    } else if (name == "density") {
      table = table_density_trace(sc);
    } else if (name == "transition") {
      table = table_transition_trace(sc);
    } else if (name == "moments") {
      table = table_moments(sc);
    } else if (name == "coeffs") {
      table = table_coeffs(sc, sc.time.t_start);
    } else {
      throw ScenarioValidationError("run: unknown artifact '" + name + "'");
    }
    const auto path = std::filesystem::path(out_dir) / (name + ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("run: cannot write " + path.string());
    table.write(out);
    manifest["artifacts"].push_back({{"name", name}, {"file", name + ".csv"}});
  }

  manifest["wall_time_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  std::ofstream mout(std::filesystem::path(out_dir) / "manifest.json", std::ios::binary);
  mout << manifest.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"squeezed coherent states of a free particle with time-varying mass"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string format = "csv";
  std::string out_dir = ".";
  std::optional<std::string> other_path;
  double t_at = 0.0;
  int n_max = 8;
  int quad_order = 64;
  int dx_order = 4;
  double dt_step = 0.0;

  auto add_common = [&](CLI::App* cmd, bool with_t) {
    cmd->add_option("scenario", scenario_path, "scenario file")->required();
    cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    if (with_t) cmd->add_option("--t", t_at, "evaluation time");
  };

  auto* c_run = app.add_subcommand("run", "write all requested artifacts plus a manifest");
  c_run->add_option("scenario", scenario_path, "scenario file")->required();
  c_run->add_option("out_dir", out_dir, "output directory")->required();

  auto* c_evolve = app.add_subcommand("evolve", "evolution parameters over the time grid");
  add_common(c_evolve, false);
  auto* c_coeffs = app.add_subcommand("coeffs", "Fock coefficients at time --t");
  add_common(c_coeffs, true);
  auto* c_density = app.add_subcommand("density", "probability density at time --t");
  add_common(c_density, true);
  auto* c_moments = app.add_subcommand("moments", "Gaussian moments over the time grid");
  add_common(c_moments, false);
  auto* c_transition = app.add_subcommand("transition", "transition probabilities at time --t");
  add_common(c_transition, true);
  auto* c_overlap = app.add_subcommand("overlap", "overlap with a second scenario's state");
  add_common(c_overlap, true);
  c_overlap->add_option("--other", other_path, "second scenario file (defaults to self)");
  auto* c_completeness =
      app.add_subcommand("completeness", "resolution-of-identity matrix at time --t");
  add_common(c_completeness, true);
  c_completeness->add_option("--n-max", n_max, "largest Fock index")->check(CLI::Range(0, 12));
  c_completeness->add_option("--quad-order", quad_order, "Gauss-Hermite order")
      ->check(CLI::Range(1, 512));
  auto* c_verify = app.add_subcommand("verify", "Schrodinger-equation residual at time --t");
  add_common(c_verify, true);
  c_verify->add_option("--dx-order", dx_order, "space stencil order (2 or 4)")
      ->check(CLI::IsMember({2, 4}));
  c_verify->add_option("--dt", dt_step, "time stencil step (0 = automatic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (c_run->parsed()) return run_scenario(scenario_path, out_dir);

    const Scenario sc = load_scenario(scenario_path);
    CsvTable table;
    if (c_evolve->parsed()) table = table_evolve(sc);
    else if (c_coeffs->parsed()) table = table_coeffs(sc, t_at);
    else if (c_density->parsed()) table = table_density(sc, t_at);
    else if (c_moments->parsed()) table = table_moments(sc);
    else if (c_transition->parsed()) table = table_transition(sc, t_at);
    else if (c_overlap->parsed()) table = table_overlap(sc, other_path, t_at);
    else if (c_completeness->parsed()) table = table_completeness(sc, t_at, n_max, quad_order);
    else if (c_verify->parsed()) table = table_verify(sc, t_at, dx_order, dt_step);
    emit(table, format);
    return kExitOk;
  } catch (const ScenarioParseError& e) {
    std::cerr << json{{"error", "parse"}, {"message", e.what()}}.dump() << "\n";
    return kExitParse;
  } catch (const ScenarioValidationError& e) {
    std::cerr << json{{"error", "validation"}, {"message", e.what()}}.dump() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", "validation"}, {"message", e.what()}}.dump() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "numerical"}, {"message", e.what()}}.dump() << "\n";
    return kExitNumerical;
  }
}
