#pragma once

// Exact scalars used for every coefficient in the library.
//
// Rational is Boost.Multiprecision's cpp_rational, which keeps numerator and
// denominator coprime with a positive denominator after every operation.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hirzebruch {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::int64_t factorial_i64(unsigned n) {
  if (n > 20) throw std::overflow_error("factorial_i64: n > 20");
  std::int64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= static_cast<std::int64_t>(i);
  return f;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

inline Integer pow2(unsigned e) { return Integer(1) << e; }

/// Canonical text: "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p", "-p" or "p/q" (optional sign on p, q > 0).
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("denominator must be an unsigned integer");
  Integer den = parse_int(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace hirzebruch
