#ifndef SCS_STATISTICS_HPP
#define SCS_STATISTICS_HPP

#include <span>
#include <utility>
#include <vector>

#include "scs/model.hpp"

namespace scs {

struct GaussianMoments {
  double mean_x = 0.0;
  double mean_p = 0.0;
  double sigma_x = 0.0;
  double sigma_p = 0.0;
  double sigma_xp = 0.0;

  double uncertainty_product() const { return sigma_x * sigma_p; }
  // sigma_x^2 sigma_p^2 - sigma_xp^2, equal to hbar^2/4 for every state
  // in this family.
  double robertson_schrodinger() const {
    return sigma_x * sigma_x * sigma_p * sigma_p - sigma_xp * sigma_xp;
  }
};

struct QuadratureRecord {
  double tau = 0.0;
  double sigma_Q = 0.0;
  double sigma_P = 0.0;
  double r = 0.0;
};

/// Means, standard deviations and covariance of x and p for the snapshot.
GaussianMoments moments(const EvolvedParams& ep, const ModelParams& mp);

/// Classical phase-space trajectory (x0 + p0/m0 * T(t), p0).
std::pair<double, double> classical_trajectory(double x0, double p0, const ModelParams& mp,
                                               double t);

/// sigma_x * sigma_p for the snapshot.
double uncertainty_product(const EvolvedParams& ep, const ModelParams& mp);

/// Dimensionless quadrature widths along the rescaled time tau:
///   sigma_Q = e^{-r}/sqrt(2) * sqrt(1 + (1 - exp(-e^{2r} tau))^2),
///   sigma_P = e^{r}/sqrt(2).
std::vector<QuadratureRecord> quadrature_trace(double r, std::span<const double> tau_samples);

/// |varphi|, the quantity the semiclassicality condition |varphi| >> 1/2
/// bounds (theta_xi = pi/2 convention).
double semiclassicality_ratio(const InitialConditions& ic, const ModelParams& mp);

inline constexpr double kSemiclassicalThreshold = 5.0;

bool is_semiclassical(const InitialConditions& ic, const ModelParams& mp,
                      double threshold = kSemiclassicalThreshold);

/// General-angle ratio hbar / (2 sigma_x0 |p0|); semiclassical when << 1.
double raw_semiclassical_ratio(double sigma_x0, double p0, const ModelParams& mp);

}  // namespace scs

#endif
