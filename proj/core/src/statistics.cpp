#include "scs/statistics.hpp"

#include <cmath>
#include <numbers>

namespace scs {

GaussianMoments moments(const EvolvedParams& ep, const ModelParams& mp) {
  if (!(ep.mu > 0.0)) throw std::invalid_argument("moments: requires mu > 0");
  // (f, g) form of the (xi, zeta) moment formulas. Unlike the zeta form it
  // stays exact when the squeeze approaches the unit circle (|g| -> |f|),
  // where 1 - |zeta|^2 is lost to rounding.
  const double sqrt2 = std::numbers::sqrt2_v<double>;
  const complexd varphi = ep.xi * ep.f;
  GaussianMoments gm;
  gm.mean_x = -sqrt2 * mp.l * (std::conj(ep.f - ep.g) * varphi).real() / ep.mu;
  gm.mean_p = -sqrt2 * mp.hbar / mp.l * (std::conj(ep.f + ep.g) * varphi).imag() / ep.mu;
  gm.sigma_x = mp.l / sqrt2 * std::abs(ep.f - ep.g) / std::sqrt(ep.mu);
  gm.sigma_p = mp.hbar / (sqrt2 * mp.l) * std::abs(ep.f + ep.g) / std::sqrt(ep.mu);
  gm.sigma_xp = -mp.hbar * (ep.g * std::conj(ep.f)).imag() / ep.mu;
  return gm;
}

std::pair<double, double> classical_trajectory(double x0, double p0, const ModelParams& mp,
                                               double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("classical_trajectory: t must be finite");
  return {x0 + p0 / mp.m0 * ramp(t, mp.gamma), p0};
}

double uncertainty_product(const EvolvedParams& ep, const ModelParams& mp) {
  const auto gm = moments(ep, mp);
  return gm.uncertainty_product();
}

std::vector<QuadratureRecord> quadrature_trace(double r, std::span<const double> tau_samples) {
  std::vector<QuadratureRecord> out;
  out.reserve(tau_samples.size());
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2_v<double>;
  const double er = std::exp(r);
  for (double tau : tau_samples) {
    QuadratureRecord rec;
    rec.tau = tau;
    rec.r = r;
    const double growth = 1.0 - std::exp(-er * er * tau);
    rec.sigma_Q = inv_sqrt2 / er * std::sqrt(1.0 + growth * growth);
    rec.sigma_P = inv_sqrt2 * er;
    out.push_back(rec);
  }
  return out;
}

double semiclassicality_ratio(const InitialConditions& ic, const ModelParams&) {
  return std::abs(ic.varphi);
}

bool is_semiclassical(const InitialConditions& ic, const ModelParams& mp, double threshold) {
  return semiclassicality_ratio(ic, mp) >= threshold;
}

double raw_semiclassical_ratio(double sigma_x0, double p0, const ModelParams& mp) {
  if (!(sigma_x0 > 0.0))
    throw std::invalid_argument("raw_semiclassical_ratio: sigma_x0 must be > 0");
  return mp.hbar / (2.0 * sigma_x0 * std::abs(p0));
}

}  // namespace scs
