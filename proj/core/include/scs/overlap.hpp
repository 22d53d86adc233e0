#ifndef SCS_OVERLAP_HPP
#define SCS_OVERLAP_HPP

#include <Eigen/Dense>
#include <utility>

#include "scs/model.hpp"

namespace scs {

struct OverlapResult {
  complexd value{0.0, 0.0};
  double magnitude = 0.0;
  // Set when |1 - conj(zeta1) zeta2| < 1e-12 (branch-cut proximity).
  bool ill_conditioned = false;
};

/// <zeta1,xi1 | xi2,zeta2> for two snapshots at the same time, including the
/// relative phase. Throws std::invalid_argument if the times differ.
OverlapResult overlap(const EvolvedParams& ep1, const EvolvedParams& ep2, const ModelParams& mp);

/// Gauss-Hermite nodes and weights (weight exp(-x^2)) by Golub-Welsch
/// eigen-decomposition of the symmetric Jacobi matrix.
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_hermite(int order);

/// Resolution-of-identity matrix M_{nn'} = integral of <n|phi,zeta><zeta,phi|n'>
/// over the varphi-plane with weight (pi mu)^{-1}, by tensor Gauss-Hermite
/// quadrature in the rotated (z1, z2) variables. Approximates the identity.
Eigen::MatrixXcd completeness_check(complexd zeta, double mu, int n_max, int quad_order);

/// max |M - I| of a completeness matrix.
double completeness_residual(const Eigen::MatrixXcd& m);

/// Double integral of H_n(x+iy) H_{n'}(x-iy) exp(-a x^2 - b y^2) by tensor
/// Gauss-Hermite quadrature.
complexd hermite_orthogonality_check(double a, double b, int n, int n_prime, int quad_order);

/// Closed-form diagonal value pi/sqrt(ab) * 2^n n! * ((a+b)/(ab))^n.
double hermite_orthogonality_exact(double a, double b, int n);

}  // namespace scs

#endif
