#ifndef SCS_MODEL_HPP
#define SCS_MODEL_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

namespace scs {

using complexd = std::complex<double>;

// |zeta0| must stay at least this far from the unit circle; the normalization
// and the coordinate-representation prefactors divide by 1 - |zeta|^2.
inline constexpr double kZetaAdmissibleMargin = 1e-12;

/// Physical constants and the exponential mass law m(t) = m0 * exp(gamma * t).
struct ModelParams {
  double hbar = 1.0;
  double m0 = 1.0;
  double gamma = 0.0;  // damping parameter, either sign
  double l = 1.0;      // ladder-operator length scale

  double mass_at(double t) const { return m0 * std::exp(gamma * t); }
  void validate() const;
};

/// Initial data (f0, g0, varphi) of the invariant operator f*a + g*a† + varphi.
struct InitialConditions {
  complexd f0{1.0, 0.0};
  complexd g0{0.0, 0.0};
  complexd varphi{0.0, 0.0};

  // f0 = cosh(r), g0 = sinh(r); gives mu = 1 and zeta0 = tanh(r).
  static InitialConditions from_squeeze(double r, complexd varphi);

  complexd zeta0() const { return g0 / f0; }
  complexd xi0() const { return varphi / f0; }
  double mu() const { return std::norm(f0) - std::norm(g0); }

  void validate() const;
};

/// Time-t snapshot of the evolution parameters.
struct EvolvedParams {
  double t = 0.0;
  complexd f{1.0, 0.0};
  complexd g{0.0, 0.0};
  complexd xi{0.0, 0.0};    // displacement parameter, xi = varphi / f
  complexd zeta{0.0, 0.0};  // squeeze parameter, zeta = g / f
  double mu = 1.0;          // |f|^2 (1 - |zeta|^2), conserved
  double phase_phi = 0.0;   // real phase of the normalization constant
  // Set by cs_regime_params: the coherent-state family solves the dynamics
  // only in the large-mass limit gamma*t -> infinity.
  bool asymptotic_only = false;
};

struct IntegrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Stable evaluation of T(t) = (1 - exp(-gamma t)) / gamma, with a series
/// switch for |gamma t| < 1e-4 and the exact t limit at gamma = 0.
double ramp(double t, double gamma);

/// Closed-form evolution of (f, g, xi, zeta, mu) plus the phase integral,
/// the latter by adaptive quadrature (absolute tolerance 1e-12).
EvolvedParams evolve_closed_form(const ModelParams& mp, const InitialConditions& ic, double t);

/// Same result by adaptive Runge-Kutta integration of the coupled ODEs for
/// (f, g) and the phase. Independent cross-check of evolve_closed_form.
EvolvedParams evolve_ode(const ModelParams& mp, const InitialConditions& ic, double t,
                         double rel_tol = 1e-10);

/// Large-mass coherent-state family: zeta = 0 with the displacement evolving
/// by a pure phase. Valid only asymptotically (gamma * t -> infinity); the
/// returned snapshot carries asymptotic_only = true. Requires gamma > 0.
EvolvedParams cs_regime_params(const ModelParams& mp, complexd xi0, double t);

/// Standalone snapshot with consistent (f, g) for a given (xi, zeta): f is
/// chosen real with mu = 1. For states not tied to an evolution history.
inline EvolvedParams make_snapshot(complexd xi, complexd zeta, double phase = 0.0) {
  if (std::abs(zeta) > 1.0 - kZetaAdmissibleMargin)
    throw std::invalid_argument("make_snapshot: requires |zeta| < 1");
  EvolvedParams ep;
  ep.f = 1.0 / std::sqrt(1.0 - std::norm(zeta));
  ep.g = zeta * ep.f;
  ep.xi = xi;
  ep.zeta = zeta;
  ep.mu = 1.0;
  ep.phase_phi = phase;
  return ep;
}

}  // namespace scs

#endif
