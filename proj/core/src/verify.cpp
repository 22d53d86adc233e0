#include "scs/verify.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace scs {

namespace {

constexpr complexd kImag{0.0, 1.0};

double interior_l2(const std::vector<complexd>& v, int margin, double dx) {
  double s = 0.0;
  for (int i = margin; i < static_cast<int>(v.size()) - margin; ++i) s += std::norm(v[i]);
  return std::sqrt(s * dx);
}

}  // namespace

double default_dt_step(const ModelParams& mp, double t) {
  // natural time scale of the phase, clamped so m(t + dt) ~ m(t)
  double dt = 1e-4 * 2.0 * mp.l * mp.l * mp.mass_at(t) / mp.hbar;
  if (mp.gamma != 0.0) dt = std::min(dt, 1e-3 / std::abs(mp.gamma));
  return dt;
}

ResidualReport schrodinger_residual(const WaveFactory& psi_at, const ModelParams& mp, double t,
                                    double dt_step, int dx_order) {
  if (dx_order != 2 && dx_order != 4)
    throw std::invalid_argument("schrodinger_residual: dx_order must be 2 or 4");
  if (!(dt_step > 0.0))
    throw std::invalid_argument("schrodinger_residual: dt_step must be > 0");

  const WaveField now = psi_at(t);
  const WaveField before = psi_at(t - dt_step);
  const WaveField after = psi_at(t + dt_step);
  const int n = now.grid.n_points;
  if (static_cast<int>(before.values.size()) != n || static_cast<int>(after.values.size()) != n)
    throw std::invalid_argument("schrodinger_residual: factory changed the grid size");

  const double dx = now.grid.spacing();
  const double kin = -mp.hbar * mp.hbar / (2.0 * mp.mass_at(t));
  const int margin = dx_order / 2;
  const auto& v = now.values;

  std::vector<complexd> residual(n, complexd{0.0, 0.0});
  std::vector<complexd> hamiltonian(n, complexd{0.0, 0.0});
  for (int i = margin; i < n - margin; ++i) {
    complexd d2;
    if (dx_order == 2) {
      d2 = (v[i - 1] - 2.0 * v[i] + v[i + 1]) / (dx * dx);
    } else {
      d2 = (-v[i - 2] + 16.0 * v[i - 1] - 30.0 * v[i] + 16.0 * v[i + 1] - v[i + 2]) /
           (12.0 * dx * dx);
    }
    const complexd h_psi = kin * d2;
    const complexd dt_psi = (after.values[i] - before.values[i]) / (2.0 * dt_step);
    hamiltonian[i] = h_psi;
    residual[i] = h_psi - kImag * mp.hbar * dt_psi;
  }

  ResidualReport rep;
  rep.t = t;
  rep.space_order = dx_order;
  rep.time_order = 2;
  rep.dx = dx;
  rep.dt = dt_step;
  rep.l2_residual = interior_l2(residual, margin, dx);
  const double h_norm = interior_l2(hamiltonian, margin, dx);
  rep.relative_residual = (h_norm > 0.0) ? rep.l2_residual / h_norm
                                         : std::numeric_limits<double>::quiet_NaN();
  return rep;
}

ResidualReport schrodinger_residual(const std::function<EvolvedParams(double)>& ep_at,
                                    const ModelParams& mp, const SpatialGrid& grid, double t,
                                    int dx_order, double dt_step) {
  if (dt_step <= 0.0) dt_step = default_dt_step(mp, t);
  const WaveFactory factory = [&](double tau) { return scs_wavefunction(ep_at(tau), mp, grid); };
  return schrodinger_residual(factory, mp, t, dt_step, dx_order);
}

}  // namespace scs
