#ifndef SCS_VERIFY_HPP
#define SCS_VERIFY_HPP

#include <functional>

#include "scs/model.hpp"
#include "scs/position.hpp"

namespace scs {

struct ResidualReport {
  double t = 0.0;
  double l2_residual = 0.0;        // ||H psi - i hbar d_t psi||_2
  double relative_residual = 0.0;  // divided by ||H psi||_2
  int space_order = 4;
  int time_order = 2;
  double dx = 0.0;
  double dt = 0.0;
};

/// Evaluates the state on the verification grid at a given time.
using WaveFactory = std::function<WaveField(double t)>;

/// Finite-difference Schrodinger residual R = -hbar^2/(2m) psi'' - i hbar psi'
/// for an arbitrary wavefunction family: central stencils of order dx_order
/// (2 or 4) in space and 2 in time (symmetric two-point evaluation at
/// t +/- dt_step). Norms are grid L2 norms over the stencil interior.
ResidualReport schrodinger_residual(const WaveFactory& psi_at, const ModelParams& mp, double t,
                                    double dt_step, int dx_order = 4);

/// Same, for a family of evolved snapshots rendered through the closed-form
/// coordinate representation on the given grid. dt_step <= 0 picks
/// 1e-4 * 2 l^2 m(t)/hbar, clamped so the mass barely changes per step.
ResidualReport schrodinger_residual(const std::function<EvolvedParams(double)>& ep_at,
                                    const ModelParams& mp, const SpatialGrid& grid, double t,
                                    int dx_order = 4, double dt_step = 0.0);

/// Default time step for the residual stencil at time t.
double default_dt_step(const ModelParams& mp, double t);

}  // namespace scs

#endif
