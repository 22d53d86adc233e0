#ifndef SCS_HERMITE_HPP
#define SCS_HERMITE_HPP

#include <complex>
#include <vector>

#include "scs/model.hpp"

namespace scs {

struct HermiteSequence {
  int order = 0;
  std::vector<complexd> values;  // H_0(y) .. H_order(y)
};

/// H_0 .. H_N at a fixed complex argument by the forward three-term
/// recurrence. Throws std::overflow_error once any |H_n| exceeds 1e300;
/// reduce N or use the exponent-scaled iterator below.
HermiteSequence hermite_all(complexd y, int n_max);

/// |exp(2yz - z^2) - sum_{n<=N} H_n(y) z^n / n!|. Test oracle for the
/// generating function; requires |z| <= 0.9.
double generating_function_check(complexd y, complexd z, int n_max);

/// sum_{n<=N} H_n(x) H_n(y) z^n / (2^n n!), |z| < 1. The closed form is
/// (1-z^2)^{-1/2} exp[(2xyz - (x^2+y^2) z^2) / (1-z^2)].
complexd mehler_sum(complexd x, complexd y, complexd z, int n_max);

/// Closed form of the Mehler sum, for comparison.
complexd mehler_closed_form(complexd x, complexd y, complexd z);

// Exponent-scaled Hermite recurrence: H_n(y) = mantissa() * 2^exponent2().
// Never overflows; used wherever n can run into the hundreds.
class ScaledHermite {
 public:
  explicit ScaledHermite(complexd y) : y_(y) {}

  int n() const { return n_; }
  complexd mantissa() const { return h_; }
  long exponent2() const { return e_; }

  void advance() {
    const complexd next = 2.0 * y_ * h_ - 2.0 * static_cast<double>(n_) * hm1_;
    hm1_ = h_;
    h_ = next;
    ++n_;
    normalize();
  }

 private:
  // Thresholds keep products of up to three mantissas inside double range.
  void normalize() {
    const double m = std::max(std::abs(h_.real()), std::abs(h_.imag()));
    if (m > 1e80) {
      const double s = 0x1p-266;
      h_ *= s;
      hm1_ *= s;
      e_ += 266;
    } else if (m > 0 && m < 1e-80) {
      const double s = 0x1p266;
      h_ *= s;
      hm1_ *= s;
      e_ -= 266;
    }
  }

  complexd y_;
  complexd hm1_{0.0, 0.0};
  complexd h_{1.0, 0.0};
  long e_ = 0;
  int n_ = 0;
};

// Running product prefactor with base-2 exponent tracking, for terms like
// (-w)^n / sqrt(n!).
class ScaledFactor {
 public:
  complexd mantissa() const { return m_; }
  long exponent2() const { return e_; }

  void multiply(complexd v) {
    m_ *= v;
    const double a = std::max(std::abs(m_.real()), std::abs(m_.imag()));
    if (a > 1e80) {
      m_ *= 0x1p-266;
      e_ += 266;
    } else if (a > 0 && a < 1e-80) {
      m_ *= 0x1p266;
      e_ -= 266;
    }
  }

 private:
  complexd m_{1.0, 0.0};
  long e_ = 0;
};

/// mantissa * 2^e folded back into a double complex (0 on deep underflow).
inline complexd scaled_to_complex(complexd mantissa, long e) {
  if (e < -2000) return {0.0, 0.0};
  if (e > 2000) return {std::ldexp(mantissa.real(), 1000), std::ldexp(mantissa.imag(), 1000)};
  const int ei = static_cast<int>(e);
  return {std::ldexp(mantissa.real(), ei), std::ldexp(mantissa.imag(), ei)};
}

}  // namespace scs

#endif
