#ifndef SCS_FOCK_HPP
#define SCS_FOCK_HPP

#include <stdexcept>
#include <vector>

#include "scs/model.hpp"

namespace scs {

// Default tail mass tolerance and truncation ceiling for auto-extension.
// The ceiling is sized for the admissible box |zeta| <= 0.9, |xi| <= 4,
// whose physical mean occupation reaches ~1600 in the worst corner.
inline constexpr double kDefaultTruncationEps = 1e-10;
inline constexpr int kTruncationCap = 4096;

// Below this |zeta| the Hermite argument xi / sqrt(2 zeta) is treated as
// singular and the coherent-state series is used instead.
inline constexpr double kZetaZeroTol = 1e-12;

struct FockExpansion {
  std::vector<complexd> coeffs;  // c_0 .. c_N
  int truncation = 0;            // N
  double tail_bound = 0.0;       // 1 - sum |c_n|^2
};

struct TransitionSpectrum {
  std::vector<double> probs;  // P_0 .. P_N
  double total = 0.0;
};

struct TruncationError : std::runtime_error {
  TruncationError(double tail, int n);
  double tail_bound;
  int truncation;
};

/// Leading coefficient c_0 = (1-|zeta|^2)^{1/4}
///   * exp(-(|xi|^2 - conj(zeta) xi^2) / (2 (1-|zeta|^2)) + i phase).
complexd leading_coefficient(complexd xi, complexd zeta, double phase);

/// Coefficients from the Hermite closed form
///   c_n = c_0 (-1)^n (zeta/2)^{n/2} H_n(xi / sqrt(2 zeta)) / sqrt(n!),
/// principal branch for sqrt(zeta). Computes at least n_min + 1 entries and
/// auto-extends until tail_bound < eps; throws TruncationError at the cap.
FockExpansion coeffs_closed_form(const EvolvedParams& ep, int n_min = 0,
                                 double eps = kDefaultTruncationEps, int cap = kTruncationCap);

/// Coefficients from the recurrence
///   c_{n+1} = -sqrt(n)/sqrt(n+1) zeta c_{n-1} - xi/sqrt(n+1) c_n,
/// seeded with the same c_0. Independent of the Hermite route.
FockExpansion coeffs_recurrence(const EvolvedParams& ep, int n_min = 0,
                                double eps = kDefaultTruncationEps, int cap = kTruncationCap);

/// P_n = |<n|xi,zeta>|^2 by the closed form; Poisson law for zeta = 0.
TransitionSpectrum transition_probabilities(const EvolvedParams& ep, int n_min = 0,
                                            double eps = kDefaultTruncationEps,
                                            int cap = kTruncationCap);

/// Phase convention accessor: the real phase all downstream states share.
double phase_angle(const EvolvedParams& ep);

/// Polynomial part t_n = (-1)^n (zeta/2)^{n/2} H_n(xi / sqrt(2 zeta)) / sqrt(n!)
/// of the coefficients, so c_n = c_0 t_n with c_0 from leading_coefficient.
/// The completeness quadrature integrates these against the Gaussian weight
/// that the amplitude |c_0|^2 contributes analytically.
std::vector<complexd> coefficient_polynomials(complexd xi, complexd zeta, int n_max);

}  // namespace scs

#endif
