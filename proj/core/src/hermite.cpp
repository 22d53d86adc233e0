#include "scs/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace scs {

HermiteSequence hermite_all(complexd y, int n_max) {
  if (n_max < 0) throw std::invalid_argument("hermite_all: n_max must be >= 0");
  HermiteSequence seq;
  seq.order = n_max;
  seq.values.resize(n_max + 1);
  seq.values[0] = 1.0;
  if (n_max >= 1) seq.values[1] = 2.0 * y;
  for (int n = 1; n < n_max; ++n) {
    seq.values[n + 1] = 2.0 * y * seq.values[n] - 2.0 * static_cast<double>(n) * seq.values[n - 1];
    const complexd& h = seq.values[n + 1];
    if (std::abs(h.real()) > 1e300 || std::abs(h.imag()) > 1e300)
      throw std::overflow_error("hermite_all: |H_n| exceeded 1e300 at n = " +
                                std::to_string(n + 1) + "; reduce N or rescale");
  }
  return seq;
}

double generating_function_check(complexd y, complexd z, int n_max) {
  if (std::abs(z) > 0.9)
    throw std::invalid_argument("generating_function_check: requires |z| <= 0.9");
  const auto seq = hermite_all(y, n_max);
  complexd sum = 0.0;
  complexd zn_over_fact = 1.0;  // z^n / n!
  for (int n = 0; n <= n_max; ++n) {
    sum += seq.values[n] * zn_over_fact;
    zn_over_fact *= z / static_cast<double>(n + 1);
  }
  return std::abs(std::exp(2.0 * y * z - z * z) - sum);
}

complexd mehler_sum(complexd x, complexd y, complexd z, int n_max) {
  if (std::abs(z) >= 1.0) throw std::invalid_argument("mehler_sum: requires |z| < 1");
  ScaledHermite hx(x), hy(y);
  ScaledFactor pref;  // (z/2)^n / n!
  complexd sum = 0.0;
  for (int n = 0;; ++n) {
    sum += scaled_to_complex(hx.mantissa() * hy.mantissa() * pref.mantissa(),
                             hx.exponent2() + hy.exponent2() + pref.exponent2());
    if (n == n_max) break;
    hx.advance();
    hy.advance();
    pref.multiply(z / (2.0 * static_cast<double>(n + 1)));
  }
  return sum;
}

complexd mehler_closed_form(complexd x, complexd y, complexd z) {
  const complexd one_minus_z2 = 1.0 - z * z;
  return std::exp((2.0 * x * y * z - (x * x + y * y) * z * z) / one_minus_z2) /
         std::sqrt(one_minus_z2);
}

}  // namespace scs
