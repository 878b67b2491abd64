#pragma once

// Characteristic power series of the L- and A-hat genera.
//
// Both are built from the exponential series with exact arithmetic. For the
// L-genus the closed formula b_k = (-1)^{k-1} 2^{2k} B_k / (2k)! is evaluated
// as a second, independent route and the two must agree coefficient for
// coefficient.

#include "bernoulli.hpp"
#include "power_series.hpp"

#include <stdexcept>

namespace hirzebruch {

namespace detail {
// Even/odd parts of exp(w) evaluated at w = c*sqrt(z), as series in z:
//   cosh(c sqrt z)           = sum c^{2n} z^n / (2n)!
//   sinh(c sqrt z)/(c sqrt z) = sum c^{2n} z^n / (2n+1)!
inline PowerSeries cosh_sqrt(std::size_t order, const Rational& c2) {
  const PowerSeries e = exp_series(2 * order + 1);
  PowerSeries s(order);
  Rational scale = 1;
  for (std::size_t n = 0; n <= order; ++n, scale *= c2) s[n] = scale * e[2 * n];
  return s;
}

inline PowerSeries sinhc_sqrt(std::size_t order, const Rational& c2) {
  const PowerSeries e = exp_series(2 * order + 1);
  PowerSeries s(order);
  Rational scale = 1;
  for (std::size_t n = 0; n <= order; ++n, scale *= c2) s[n] = scale * e[2 * n + 1];
  return s;
}
}  // namespace detail

/// sqrt(z)/tanh(sqrt(z)) via exp -> sinh, cosh -> tanh(sqrt z)/sqrt z -> reciprocal.
inline PowerSeries char_series_L_from_exp(std::size_t order) {
  const PowerSeries tanhc = series_mul(detail::sinhc_sqrt(order, 1), series_reciprocal(detail::cosh_sqrt(order, 1)));
  return series_reciprocal(tanhc);
}

/// b_0 = 1, b_k = (-1)^{k-1} 2^{2k} B_k / (2k)!.
inline PowerSeries char_series_L_closed(std::size_t order) {
  PowerSeries b(order);
  b[0] = 1;
  for (unsigned k = 1; k <= order; ++k) {
    Rational bk = Rational(pow2(2 * k)) * bernoulli(k) / Rational(factorial(2 * k));
    b[k] = (k % 2 == 1) ? bk : Rational(-bk);
  }
  return b;
}

/// Characteristic series of the L-genus. Both construction routes are run and
/// must coincide exactly; a mismatch throws std::logic_error.
inline PowerSeries char_series_L(std::size_t order) {
  PowerSeries from_exp = char_series_L_from_exp(order);
  if (from_exp != char_series_L_closed(order))
    throw std::logic_error("char_series_L: closed formula and series construction disagree");
  return from_exp;
}

/// (sqrt(z)/2)/sinh(sqrt(z)/2).
inline PowerSeries char_series_Ahat(std::size_t order) {
  return series_reciprocal(detail::sinhc_sqrt(order, Rational(1, 4)));
}

}  // namespace hirzebruch
