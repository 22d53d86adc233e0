#include "scs/position.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scs/statistics.hpp"

namespace scs {

namespace {

constexpr complexd kImag{0.0, 1.0};

double grid_norm(const std::vector<complexd>& values, double spacing) {
  double s = 0.0;
  for (const auto& v : values) s += std::norm(v);
  return s * spacing;
}

void finalize_field(WaveField& field) {
  field.norm_estimate = grid_norm(field.values, field.grid.spacing());
  field.narrow_grid_warning = std::abs(field.norm_estimate - 1.0) > kGridNormTol;
}

}  // namespace

SpatialGrid SpatialGrid::centered(double center, double half_width, int n_points) {
  SpatialGrid g{center - half_width, center + half_width, n_points};
  g.validate();
  return g;
}

void SpatialGrid::validate() const {
  if (n_points < 8) throw std::invalid_argument("SpatialGrid: n_points must be >= 8");
  if (!(x_max > x_min)) throw std::invalid_argument("SpatialGrid: x_max must exceed x_min");
}

double fock_function(int n, double x, const ModelParams& mp) {
  if (n < 0) throw std::invalid_argument("fock_function: n must be >= 0");
  const double X = x / mp.l;
  // normalized Hermite-function ladder: values stay O(1), no overflow
  const double psi0 =
      std::exp(-0.5 * X * X) / std::sqrt(mp.l * std::sqrt(std::numbers::pi_v<double>));
  if (n == 0) return psi0;
  double prev = psi0;
  double cur = std::numbers::sqrt2_v<double> * X * psi0;
  for (int k = 1; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1.0)) * X * cur - std::sqrt(k / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

SpatialGrid auto_grid(const EvolvedParams& ep, const ModelParams& mp, int n_points) {
  const auto gm = moments(ep, mp);
  const double half_width = std::max(5.0 * gm.sigma_x, 5.0 * mp.l);
  return SpatialGrid::centered(gm.mean_x, half_width, n_points);
}

WaveField scs_wavefunction(const EvolvedParams& ep, const ModelParams& mp,
                           const SpatialGrid& grid) {
  grid.validate();
  if (std::abs(ep.zeta) > 1.0 - kZetaAdmissibleMargin)
    throw std::invalid_argument("scs_wavefunction: requires |zeta| < 1");

  const complexd zeta = ep.zeta;
  const complexd xi = ep.xi;
  const double one_minus = 1.0 - std::norm(zeta);
  const double l = mp.l;
  // principal branch of sqrt(1 - zeta) in the prefactor
  const complexd pref = std::pow(one_minus, 0.25) /
                        std::sqrt(std::sqrt(std::numbers::pi_v<double>) * l * (1.0 - zeta));
  const complexd width = (1.0 + zeta) / (2.0 * l * l * (1.0 - zeta));
  const complexd shift = std::numbers::sqrt2_v<double> * l * xi / (1.0 + zeta);
  const complexd offset = (1.0 + std::conj(zeta)) * xi * xi / (2.0 * (1.0 + zeta) * one_minus) -
                          std::norm(xi) / (2.0 * one_minus) + kImag * ep.phase_phi;

  WaveField field;
  field.grid = grid;
  field.t = ep.t;
  field.values.resize(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    const complexd u = grid.point(i) + shift;
    field.values[i] = pref * std::exp(-width * u * u + offset);
  }
  finalize_field(field);
  return field;
}

WaveField scs_wavefunction_basis_sum(const EvolvedParams& ep, const ModelParams& mp,
                                     const SpatialGrid& grid, double eps) {
  grid.validate();
  // run the expansion past the probability-tail cutoff: a tail bound of eps in
  // probability is only sqrt(eps) in amplitude, so the pointwise sum needs the
  // extra geometric decay of ~64 further levels
  const FockExpansion head = coeffs_closed_form(ep, 0, eps);
  const FockExpansion fe =
      coeffs_closed_form(ep, std::min(head.truncation + 64, kTruncationCap - 1), eps);

  WaveField field;
  field.grid = grid;
  field.t = ep.t;
  field.values.assign(grid.n_points, complexd{0.0, 0.0});

  // Stream the normalized Fock-function ladder across all grid points at once.
  const double l = mp.l;
  std::vector<double> X(grid.n_points), prev(grid.n_points), cur(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    X[i] = grid.point(i) / l;
    cur[i] = std::exp(-0.5 * X[i] * X[i]) /
             std::sqrt(l * std::sqrt(std::numbers::pi_v<double>));
    field.values[i] += fe.coeffs[0] * cur[i];
  }
  for (int n = 1; n <= fe.truncation; ++n) {
    for (int i = 0; i < grid.n_points; ++i) {
      const double next = std::sqrt(2.0 / n) * X[i] * cur[i] -
                          std::sqrt((n - 1.0) / n) * prev[i];
      prev[i] = cur[i];
      cur[i] = next;
      field.values[i] += fe.coeffs[n] * cur[i];
    }
  }
  finalize_field(field);
  return field;
}

std::vector<double> probability_density(const EvolvedParams& ep, const ModelParams& mp,
                                        const SpatialGrid& grid) {
  grid.validate();
  const auto gm = moments(ep, mp);
  const double norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi_v<double>) * gm.sigma_x);
  std::vector<double> rho(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    const double d = grid.point(i) - gm.mean_x;
    rho[i] = norm * std::exp(-d * d / (2.0 * gm.sigma_x * gm.sigma_x));
  }
  return rho;
}

WaveField semiclassical_wavefunction(double mean_x, double mean_p, const EvolvedParams& ep,
                                     const ModelParams& mp, const SpatialGrid& grid) {
  grid.validate();
  const auto gm = moments(ep, mp);
  const double sx = gm.sigma_x;
  const double sxp = gm.sigma_xp;
  const complexd pref =
      std::pow(1.0 / (2.0 * std::numbers::pi_v<double> * sx * sx) * (1.0 - std::conj(ep.zeta)) /
                   (1.0 - ep.zeta),
               0.25);
  const complexd width = (mp.hbar - 2.0 * kImag * sxp) / (4.0 * mp.hbar * sx * sx);

  WaveField field;
  field.grid = grid;
  field.t = ep.t;
  field.values.resize(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    const double x = grid.point(i);
    const double d = x - mean_x;
    field.values[i] = pref * std::exp(-width * d * d +
                                      kImag * (mean_p * (2.0 * x - mean_x) / (2.0 * mp.hbar) +
                                               ep.phase_phi));
  }
  finalize_field(field);
  return field;
}

complexd xi_from_means(double mean_x, double mean_p, complexd zeta, const ModelParams& mp) {
  const double sqrt2 = std::numbers::sqrt2_v<double>;
  return -(1.0 + zeta) / sqrt2 * mean_x / mp.l -
         (1.0 - zeta) / sqrt2 * kImag * mp.l * mean_p / mp.hbar;
}

}  // namespace scs
