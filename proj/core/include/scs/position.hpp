#ifndef SCS_POSITION_HPP
#define SCS_POSITION_HPP

#include <vector>

#include "scs/fock.hpp"
#include "scs/model.hpp"

namespace scs {

struct SpatialGrid {
  double x_min = -1.0;
  double x_max = 1.0;
  int n_points = 8;

  double spacing() const { return (x_max - x_min) / (n_points - 1); }
  double point(int i) const { return x_min + spacing() * i; }

  static SpatialGrid centered(double center, double half_width, int n_points);
  void validate() const;
};

struct WaveField {
  SpatialGrid grid;
  std::vector<complexd> values;
  double t = 0.0;
  double norm_estimate = 0.0;  // sum |psi|^2 * spacing
  bool narrow_grid_warning = false;
};

// Flag the field when the grid quadrature of |psi|^2 misses 1 by more.
inline constexpr double kGridNormTol = 1e-6;

/// Fock function Psi_n(x) = H_n(x/l) exp(-x^2/2l^2) / sqrt(l sqrt(pi) 2^n n!),
/// evaluated by the normalized-function recurrence (stable to large n).
double fock_function(int n, double x, const ModelParams& mp);

/// Grid centered on mean_x with half-width max(5 sigma_x, 5 l).
SpatialGrid auto_grid(const EvolvedParams& ep, const ModelParams& mp, int n_points = 1024);

/// SCS wavefunction by the direct Gaussian form (complex width), including
/// the e^{i phi} phase.
WaveField scs_wavefunction(const EvolvedParams& ep, const ModelParams& mp,
                           const SpatialGrid& grid);

/// Same state as the truncated basis sum sum_n c_n Psi_n(x); cross-check path.
WaveField scs_wavefunction_basis_sum(const EvolvedParams& ep, const ModelParams& mp,
                                     const SpatialGrid& grid,
                                     double eps = kDefaultTruncationEps);

/// Gaussian probability density with the analytic mean and width; equals
/// |psi|^2 pointwise.
std::vector<double> probability_density(const EvolvedParams& ep, const ModelParams& mp,
                                        const SpatialGrid& grid);

/// Semiclassical form parameterized by the phase-space means; identical to
/// scs_wavefunction once (mean_x, mean_p) are mapped to xi.
WaveField semiclassical_wavefunction(double mean_x, double mean_p, const EvolvedParams& ep,
                                     const ModelParams& mp, const SpatialGrid& grid);

/// Map the phase-space means to the displacement parameter:
///   xi = -(1+zeta)/sqrt(2) * mean_x/l - (1-zeta)/sqrt(2) * i l mean_p/hbar.
complexd xi_from_means(double mean_x, double mean_p, complexd zeta, const ModelParams& mp);

}  // namespace scs

#endif
