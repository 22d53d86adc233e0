#include "scs/fock.hpp"

#include <cmath>

#include "scs/hermite.hpp"

namespace scs {

namespace {

void check_admissible(complexd zeta) {
  if (std::abs(zeta) > 1.0 - kZetaAdmissibleMargin)
    throw std::invalid_argument("fock: requires |zeta| < 1");
}

FockExpansion finalize(std::vector<complexd> coeffs, double sum_sq, double eps, int cap,
                       bool extended_to_tail) {
  FockExpansion fe;
  fe.coeffs = std::move(coeffs);
  fe.truncation = static_cast<int>(fe.coeffs.size()) - 1;
  fe.tail_bound = 1.0 - sum_sq;
  if (extended_to_tail && fe.tail_bound >= eps && fe.truncation + 1 >= cap)
    throw TruncationError(fe.tail_bound, fe.truncation);
  return fe;
}

}  // namespace

TruncationError::TruncationError(double tail, int n)
    : std::runtime_error("fock: truncation cap reached at n = " + std::to_string(n) +
                         " with tail bound " + std::to_string(tail)),
      tail_bound(tail),
      truncation(n) {}

complexd leading_coefficient(complexd xi, complexd zeta, double phase) {
  const double one_minus = 1.0 - std::norm(zeta);
  const complexd exponent =
      -0.5 * (std::norm(xi) - std::conj(zeta) * xi * xi) / one_minus + complexd{0.0, phase};
  return std::pow(one_minus, 0.25) * std::exp(exponent);
}

FockExpansion coeffs_closed_form(const EvolvedParams& ep, int n_min, double eps, int cap) {
  check_admissible(ep.zeta);
  const complexd c0 = leading_coefficient(ep.xi, ep.zeta, ep.phase_phi);
  std::vector<complexd> c;
  c.reserve(n_min + 1);
  double sum_sq = 0.0;

  if (std::abs(ep.zeta) < kZetaZeroTol) {
    // coherent-state series c_n = c0 (-xi)^n / sqrt(n!)
    complexd term = c0;
    for (int n = 0; static_cast<int>(c.size()) < cap; ++n) {
      c.push_back(term);
      sum_sq += std::norm(term);
      if (n >= n_min && 1.0 - sum_sq < eps) break;
      term *= -ep.xi / std::sqrt(static_cast<double>(n + 1));
    }
    return finalize(std::move(c), sum_sq, eps, cap, true);
  }

  const complexd w = std::sqrt(ep.zeta / 2.0);  // principal branch
  const complexd y = ep.xi / (2.0 * w);
  ScaledHermite hermite(y);
  ScaledFactor pref;  // (-w)^n / sqrt(n!)
  for (int n = 0; static_cast<int>(c.size()) < cap; ++n) {
    const complexd cn =
        c0 * scaled_to_complex(hermite.mantissa() * pref.mantissa(),
                               hermite.exponent2() + pref.exponent2());
    c.push_back(cn);
    sum_sq += std::norm(cn);
    if (n >= n_min && 1.0 - sum_sq < eps) break;
    hermite.advance();
    pref.multiply(-w / std::sqrt(static_cast<double>(n + 1)));
  }
  return finalize(std::move(c), sum_sq, eps, cap, true);
}

FockExpansion coeffs_recurrence(const EvolvedParams& ep, int n_min, double eps, int cap) {
  check_admissible(ep.zeta);
  std::vector<complexd> c;
  c.reserve(n_min + 1);
  c.push_back(leading_coefficient(ep.xi, ep.zeta, ep.phase_phi));
  double sum_sq = std::norm(c[0]);
  for (int n = 0; static_cast<int>(c.size()) < cap; ++n) {
    if (n >= n_min && 1.0 - sum_sq < eps) break;
    const double np1 = static_cast<double>(n + 1);
    const complexd prev = (n >= 1) ? c[n - 1] : complexd{0.0, 0.0};
    const complexd cn1 =
        -std::sqrt(static_cast<double>(n)) / std::sqrt(np1) * ep.zeta * prev -
        ep.xi / std::sqrt(np1) * c[n];
    c.push_back(cn1);
    sum_sq += std::norm(cn1);
  }
  return finalize(std::move(c), sum_sq, eps, cap, true);
}

TransitionSpectrum transition_probabilities(const EvolvedParams& ep, int n_min, double eps,
                                            int cap) {
  check_admissible(ep.zeta);
  TransitionSpectrum ts;
  const double abs_zeta = std::abs(ep.zeta);

  if (abs_zeta < kZetaZeroTol) {
    // Poisson law P_n = |xi|^{2n} exp(-|xi|^2) / n!
    const double lambda = std::norm(ep.xi);
    double p = std::exp(-lambda);
    for (int n = 0; static_cast<int>(ts.probs.size()) < cap; ++n) {
      ts.probs.push_back(p);
      ts.total += p;
      if (n >= n_min && 1.0 - ts.total < eps) break;
      p *= lambda / static_cast<double>(n + 1);
    }
  } else {
    const double one_minus = 1.0 - abs_zeta * abs_zeta;
    const double amplitude =
        std::sqrt(one_minus) *
        std::exp(((std::conj(ep.zeta) * ep.xi * ep.xi).real() - std::norm(ep.xi)) / one_minus);
    const complexd y = ep.xi / std::sqrt(2.0 * ep.zeta);
    ScaledHermite hermite(y);
    ScaledFactor pref;  // |zeta|^n / (2^n n!)
    for (int n = 0; static_cast<int>(ts.probs.size()) < cap; ++n) {
      const complexd h2 = scaled_to_complex(hermite.mantissa() * std::conj(hermite.mantissa()) *
                                                pref.mantissa(),
                                            2 * hermite.exponent2() + pref.exponent2());
      const double p = amplitude * h2.real();
      ts.probs.push_back(std::max(p, 0.0));
      ts.total += p;
      if (n >= n_min && 1.0 - ts.total < eps) break;
      hermite.advance();
      pref.multiply(abs_zeta / (2.0 * static_cast<double>(n + 1)));
    }
  }
  if (1.0 - ts.total >= eps && static_cast<int>(ts.probs.size()) >= cap)
    throw TruncationError(1.0 - ts.total, static_cast<int>(ts.probs.size()) - 1);
  return ts;
}

double phase_angle(const EvolvedParams& ep) { return ep.phase_phi; }

std::vector<complexd> coefficient_polynomials(complexd xi, complexd zeta, int n_max) {
  check_admissible(zeta);
  std::vector<complexd> t(n_max + 1);
  if (std::abs(zeta) < kZetaZeroTol) {
    complexd term = 1.0;
    for (int n = 0; n <= n_max; ++n) {
      t[n] = term;
      term *= -xi / std::sqrt(static_cast<double>(n + 1));
    }
    return t;
  }
  const complexd w = std::sqrt(zeta / 2.0);
  const complexd y = xi / (2.0 * w);
  ScaledHermite hermite(y);
  ScaledFactor pref;
  for (int n = 0; n <= n_max; ++n) {
    t[n] = scaled_to_complex(hermite.mantissa() * pref.mantissa(),
                             hermite.exponent2() + pref.exponent2());
    hermite.advance();
    pref.multiply(-w / std::sqrt(static_cast<double>(n + 1)));
  }
  return t;
}

}  // namespace scs
