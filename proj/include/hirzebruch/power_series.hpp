#pragma once

// Truncated formal power series in one variable with exact coefficients.

#include "rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hirzebruch {

/// a_0 + a_1 z + ... + a_order z^order  (mod z^{order+1}).
///
/// The coefficient list always has exactly order+1 entries. Binary operations
/// require both operands to share the same order; a mismatch is an error
/// rather than a silent truncation.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}

  /// Builds a series from explicit coefficients; missing ones are zero and
  /// extra ones beyond `order` are dropped.
  PowerSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
  }

  PowerSeries(std::size_t order, std::initializer_list<Rational> coeffs)
      : PowerSeries(order, std::vector<Rational>(coeffs)) {}

  static PowerSeries one(std::size_t order) {
    PowerSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  Rational& operator[](std::size_t k) { return coeffs_.at(k); }

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Same series viewed at a lower order.
  PowerSeries truncated(std::size_t order) const {
    if (order > this->order())
      throw std::invalid_argument("PowerSeries::truncated: cannot raise order " +
                                  std::to_string(this->order()) + " to " + std::to_string(order));
    return PowerSeries(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

namespace detail {
inline void require_same_order(const PowerSeries& a, const PowerSeries& b, const char* op) {
  if (a.order() != b.order())
    throw std::invalid_argument(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()) + ")");
}
}  // namespace detail

inline PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) {
  detail::require_same_order(a, b, "series_add");
  PowerSeries c(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) c[k] = a[k] + b[k];
  return c;
}

/// Cauchy product truncated at the common order.
inline PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  detail::require_same_order(a, b, "series_mul");
  const std::size_t n = a.order();
  PowerSeries c(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

/// Multiplicative inverse; the constant term must be nonzero.
inline PowerSeries series_reciprocal(const PowerSeries& a) {
  if (a[0] == 0) throw std::domain_error("series_reciprocal: constant term is zero");
  const std::size_t n = a.order();
  PowerSeries b(n);
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -acc * inv0;
  }
  return b;
}

/// Coefficients 1/m! of exp(z) for m = 0..order.
inline PowerSeries exp_series(std::size_t order) {
  PowerSeries e(order);
  Rational term = 1;
  for (std::size_t m = 0; m <= order; ++m) {
    if (m > 0) term /= static_cast<unsigned>(m);
    e[m] = term;
  }
  return e;
}

}  // namespace hirzebruch
