#include "scs/overlap.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "scs/fock.hpp"
#include "scs/hermite.hpp"

namespace scs {

namespace {
constexpr complexd kImag{0.0, 1.0};
}

OverlapResult overlap(const EvolvedParams& ep1, const EvolvedParams& ep2, const ModelParams&) {
  if (std::abs(ep1.t - ep2.t) > 1e-12 * std::max(1.0, std::abs(ep1.t)))
    throw std::invalid_argument("overlap: snapshots must share the same time");
  if (std::abs(ep1.zeta) > 1.0 - kZetaAdmissibleMargin ||
      std::abs(ep2.zeta) > 1.0 - kZetaAdmissibleMargin)
    throw std::invalid_argument("overlap: requires |zeta| < 1 for both states");

  const complexd z1 = ep1.zeta, z2 = ep2.zeta;
  const complexd x1 = ep1.xi, x2 = ep2.xi;
  const complexd den = 1.0 - std::conj(z1) * z2;

  OverlapResult res;
  res.ill_conditioned = std::abs(den) < 1e-12;

  const double q1 = 1.0 - std::norm(z1);
  const double q2 = 1.0 - std::norm(z2);
  const complexd cross =
      0.5 * (2.0 * std::conj(x1) * x2 - z2 * std::conj(x1) * std::conj(x1) -
             std::conj(z1) * x2 * x2) /
      den;
  const complexd self2 = 0.5 * (std::conj(z2) * x2 * x2 - std::norm(x2)) / q2;
  const complexd self1 = 0.5 * (z1 * std::conj(x1) * std::conj(x1) - std::norm(x1)) / q1;
  // relative phase: each snapshot carries its own phase integral
  const complexd phase = kImag * (ep2.phase_phi - ep1.phase_phi);

  res.value = std::pow(q1, 0.25) * std::pow(q2, 0.25) / std::sqrt(den) *
              std::exp(cross + self1 + self2 + phase);
  res.magnitude = std::abs(res.value);
  return res;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_hermite(int order) {
  if (order < 1 || order > 512)
    throw std::invalid_argument("gauss_hermite: order must be in [1, 512]");
  // Golub-Welsch: Jacobi matrix of the Hermite polynomials has zero diagonal
  // and off-diagonal beta_k = sqrt(k/2).
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double beta = std::sqrt(k / 2.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  Eigen::VectorXd nodes = solver.eigenvalues();
  Eigen::VectorXd weights(order);
  const double sqrt_pi = std::sqrt(std::numbers::pi_v<double>);
  for (int k = 0; k < order; ++k) {
    const double v0 = solver.eigenvectors()(0, k);
    weights(k) = sqrt_pi * v0 * v0;
  }
  return {std::move(nodes), std::move(weights)};
}

Eigen::MatrixXcd completeness_check(complexd zeta, double mu, int n_max, int quad_order) {
  const double abs_zeta = std::abs(zeta);
  if (abs_zeta < 1e-6 || abs_zeta > 1.0 - kZetaAdmissibleMargin)
    throw std::invalid_argument("completeness_check: requires 1e-6 <= |zeta| < 1");
  if (!(mu > 0.0)) throw std::invalid_argument("completeness_check: mu must be > 0");
  if (n_max < 0 || n_max > 12)
    throw std::invalid_argument("completeness_check: n_max must be in [0, 12] (cost guard)");

  // Appendix-style geometry: Gaussian weights in the rotated (z1, z2) plane.
  const double a = 2.0 * abs_zeta / (1.0 + abs_zeta);
  const double b = 2.0 * abs_zeta / (1.0 - abs_zeta);
  const double f_sq = mu / (1.0 - abs_zeta * abs_zeta);  // |f|^2 for this snapshot
  const complexd sqrt_2zeta = std::sqrt(2.0 * zeta);

  const auto [nodes, weights] = gauss_hermite(quad_order);
  const double pref = 2.0 * f_sq * abs_zeta / (std::numbers::pi_v<double> * mu) /
                      std::sqrt(a * b) * std::sqrt(1.0 - abs_zeta * abs_zeta);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1);
  for (int i = 0; i < quad_order; ++i) {
    const double z1 = nodes(i) / std::sqrt(a);
    for (int j = 0; j < quad_order; ++j) {
      const double z2 = nodes(j) / std::sqrt(b);
      // xi such that xi / sqrt(2 zeta) = z1 + i z2; the coefficient formula
      // from the Fock module is the single source of truth for <n|phi,zeta>.
      const complexd xi = sqrt_2zeta * complexd{z1, z2};
      const auto t = coefficient_polynomials(xi, zeta, n_max);
      const double wij = weights(i) * weights(j);
      for (int n = 0; n <= n_max; ++n)
        for (int np = 0; np <= n_max; ++np) m(n, np) += wij * t[n] * std::conj(t[np]);
    }
  }
  return pref * m;
}

double completeness_residual(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd diff =
      m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return diff.cwiseAbs().maxCoeff();
}

complexd hermite_orthogonality_check(double a, double b, int n, int n_prime, int quad_order) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("hermite_orthogonality_check: a, b must be > 0");
  const auto [nodes, weights] = gauss_hermite(quad_order);

  complexd sum{0.0, 0.0};
  for (int i = 0; i < quad_order; ++i) {
    const double x = nodes(i) / std::sqrt(a);
    for (int j = 0; j < quad_order; ++j) {
      const double y = nodes(j) / std::sqrt(b);
      ScaledHermite hp(complexd{x, y});
      ScaledHermite hm(complexd{x, -y});
      while (hp.n() < n) hp.advance();
      while (hm.n() < n_prime) hm.advance();
      const complexd prod = scaled_to_complex(hp.mantissa() * hm.mantissa(),
                                              hp.exponent2() + hm.exponent2());
      sum += weights(i) * weights(j) * prod;
    }
  }
  return sum / std::sqrt(a * b);
}

double hermite_orthogonality_exact(double a, double b, int n) {
  double value = std::numbers::pi_v<double> / std::sqrt(a * b);
  for (int k = 1; k <= n; ++k) value *= 2.0 * k * (a + b) / (a * b);
  return value;
}

}  // namespace scs
