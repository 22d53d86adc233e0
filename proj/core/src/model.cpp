#include "scs/model.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "scs/ode.hpp"

namespace scs {

namespace {

constexpr complexd kImag{0.0, 1.0};

double phase_quadrature(const ModelParams& mp, const InitialConditions& ic, double t) {
  if (t == 0.0) return 0.0;
  const complexd slope =
      kImag * mp.hbar * (ic.f0 + ic.g0) / (2.0 * mp.l * mp.l * mp.m0);
  auto integrand = [&](double tau) {
    const double T = ramp(tau, mp.gamma);
    const complexd f = ic.f0 + slope * T;
    const complexd g = ic.g0 - slope * T;
    return ((g / f).real() + 1.0) / mp.mass_at(tau);
  };
  using quad = boost::math::quadrature::gauss_kronrod<double, 31>;
  double integral;
  if (t > 0) {
    integral = quad::integrate(integrand, 0.0, t, 15, 1e-13);
  } else {
    integral = -quad::integrate(integrand, t, 0.0, 15, 1e-13);
  }
  return -mp.hbar / (4.0 * mp.l * mp.l) * integral;
}

}  // namespace

void ModelParams::validate() const {
  if (!(hbar > 0.0)) throw std::invalid_argument("ModelParams: hbar must be > 0");
  if (!(m0 > 0.0)) throw std::invalid_argument("ModelParams: m0 must be > 0");
  if (!(l > 0.0)) throw std::invalid_argument("ModelParams: l must be > 0");
  if (!std::isfinite(gamma)) throw std::invalid_argument("ModelParams: gamma must be finite");
}

InitialConditions InitialConditions::from_squeeze(double r, complexd varphi) {
  InitialConditions ic;
  ic.f0 = std::cosh(r);
  ic.g0 = std::sinh(r);
  ic.varphi = varphi;
  return ic;
}

void InitialConditions::validate() const {
  if (!(mu() > 0.0)) throw std::invalid_argument("InitialConditions: |f0|^2 - |g0|^2 must be > 0");
  if (std::abs(zeta0()) > 1.0 - kZetaAdmissibleMargin)
    throw std::invalid_argument("InitialConditions: |g0/f0| must be < 1 (non-normalizable family)");
}

double ramp(double t, double gamma) {
  const double gt = gamma * t;
  if (std::abs(gt) < 1e-4) {
    // cancellation-safe series: t (1 - gt/2 + gt^2/6 - gt^3/24)
    return t * (1.0 - gt / 2.0 + gt * gt / 6.0 - gt * gt * gt / 24.0);
  }
  return (1.0 - std::exp(-gt)) / gamma;
}

EvolvedParams evolve_closed_form(const ModelParams& mp, const InitialConditions& ic, double t) {
  mp.validate();
  ic.validate();
  if (!std::isfinite(t)) throw std::invalid_argument("evolve_closed_form: t must be finite");

  const complexd slope =
      kImag * mp.hbar * (ic.f0 + ic.g0) / (2.0 * mp.l * mp.l * mp.m0);
  const double T = ramp(t, mp.gamma);

  EvolvedParams ep;
  ep.t = t;
  ep.f = ic.f0 + slope * T;
  ep.g = ic.g0 - slope * T;
  ep.xi = ic.varphi / ep.f;
  ep.zeta = ep.g / ep.f;
  // mu is conserved identically: |f|^2 - |g|^2 picks up 2 T Re[s (f0+g0)*],
  // and s is i * (real) * (f0 + g0). Evaluating |f|^2 - |g|^2 in doubles
  // would cancel catastrophically once |sT| is large.
  ep.mu = ic.mu();
  ep.phase_phi = phase_quadrature(mp, ic, t);
  return ep;
}

EvolvedParams evolve_ode(const ModelParams& mp, const InitialConditions& ic, double t,
                         double rel_tol) {
  mp.validate();
  ic.validate();
  if (!std::isfinite(t)) throw std::invalid_argument("evolve_ode: t must be finite");

  // state: (Re f, Im f, Re g, Im g, phase)
  auto deriv = [&](double tau, const std::array<double, 5>& y) {
    const complexd f{y[0], y[1]};
    const complexd g{y[2], y[3]};
    const double m = mp.mass_at(tau);
    const complexd coupling = kImag * mp.hbar / (2.0 * mp.l * mp.l * m) * (f + g);
    const complexd fd = coupling;
    const complexd gd = -coupling;
    const double phased = -mp.hbar / (4.0 * mp.l * mp.l) * ((g / f).real() + 1.0) / m;
    return std::array<double, 5>{fd.real(), fd.imag(), gd.real(), gd.imag(), phased};
  };

  const std::array<double, 5> y0{ic.f0.real(), ic.f0.imag(), ic.g0.real(), ic.g0.imag(), 0.0};
  const auto y = integrate_adaptive(deriv, y0, 0.0, t, rel_tol);

  EvolvedParams ep;
  ep.t = t;
  ep.f = {y[0], y[1]};
  ep.g = {y[2], y[3]};
  ep.xi = ic.varphi / ep.f;
  ep.zeta = ep.g / ep.f;
  ep.mu = std::norm(ep.f) * (1.0 - std::norm(ep.zeta));
  ep.phase_phi = y[4];
  return ep;
}

EvolvedParams cs_regime_params(const ModelParams& mp, complexd xi0, double t) {
  mp.validate();
  if (!(mp.gamma > 0.0))
    throw std::invalid_argument("cs_regime_params: requires gamma > 0 (large-mass limit)");
  if (!std::isfinite(t)) throw std::invalid_argument("cs_regime_params: t must be finite");

  EvolvedParams ep;
  ep.t = t;
  ep.f = 1.0;
  ep.g = 0.0;
  ep.zeta = 0.0;
  ep.mu = 1.0;
  ep.xi = xi0 * std::exp(kImag * mp.hbar / (2.0 * mp.l * mp.l * mp.m0) *
                         (std::exp(-mp.gamma * t) - 1.0) / mp.gamma);
  ep.phase_phi = mp.hbar / (4.0 * mp.l * mp.l * mp.mass_at(t) * mp.gamma);
  ep.asymptotic_only = true;
  return ep;
}

}  // namespace scs
