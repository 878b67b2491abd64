#pragma once

// Human-readable renderings of a degree-k polynomial in the Pontryagin
// classes. Terms follow the table order (descending partitions). With more
// than one term the least common denominator is pulled out:
//   text   (7*p2 - p1^2)/45
//   latex  \frac{1}{45}\left(7 p_{2} - p_{1}^{2}\right)

#include "genus.hpp"
#include "rational.hpp"

#include <string>
#include <vector>

namespace hirzebruch {

namespace detail {

struct ScaledTerm {
  Integer numerator;  // coefficient * common denominator
  const IntegerPartition* partition;
};

inline std::vector<ScaledTerm> scaled_terms(const CoefficientTable& table, Integer& common) {
  common = 1;
  for (const auto& [J, c] : table.entries)
    if (c != 0) common = boost::multiprecision::lcm(common, denominator(c));
  std::vector<ScaledTerm> out;
  for (const auto& [J, c] : table.entries)
    if (c != 0) out.push_back({numerator(c) * (common / denominator(c)), &J});
  return out;
}

// p2*p1, p1^3
inline std::string text_monomial(const IntegerPartition& J) {
  std::string out;
  const auto& parts = J.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t e = 1;
    while (i + e < parts.size() && parts[i + e] == parts[i]) ++e;
    if (!out.empty()) out += "*";
    out += "p" + std::to_string(parts[i]);
    if (e > 1) out += "^" + std::to_string(e);
    i += e;
  }
  return out;
}

inline std::string latex_monomial(const IntegerPartition& J) {
  std::string out;
  const auto& parts = J.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t e = 1;
    while (i + e < parts.size() && parts[i + e] == parts[i]) ++e;
    if (!out.empty()) out += " ";
    out += "p_{" + std::to_string(parts[i]) + "}";
    if (e > 1) out += "^{" + std::to_string(e) + "}";
    i += e;
  }
  return out;
}

// Joins integer-coefficient terms: "7*p2 - p1^2" or "7 p_{2} - p_{1}^{2}".
template <typename Monomial>
std::string join_terms(const std::vector<ScaledTerm>& terms, const std::string& times, Monomial&& monomial) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Integer& n = terms[i].numerator;
    const Integer mag = abs(n);
    if (i == 0)
      out += n < 0 ? "-" : "";
    else
      out += n < 0 ? " - " : " + ";
    const std::string mono = monomial(*terms[i].partition);
    if (mono.empty())
      out += mag.str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.str() + times + mono;
  }
  return out;
}

}  // namespace detail

inline std::string render_text(const CoefficientTable& table) {
  Integer common;
  const auto terms = detail::scaled_terms(table, common);
  if (terms.empty()) return "0";
  if (table.degree == 0) return to_string(table.entries.begin()->second);
  if (terms.size() == 1) {
    const Rational c = Rational(terms[0].numerator, common);
    const std::string mono = detail::text_monomial(*terms[0].partition);
    if (c == 1) return mono;
    if (c == -1) return "-" + mono;
    if (denominator(c) == 1) return to_string(c) + "*" + mono;
    return std::string(c < 0 ? "-" : "") + "(" + to_string(abs(c)) + ")*" + mono;
  }
  const std::string body = detail::join_terms(terms, "*", detail::text_monomial);
  return common == 1 ? body : "(" + body + ")/" + common.str();
}

inline std::string render_latex(const CoefficientTable& table) {
  Integer common;
  const auto terms = detail::scaled_terms(table, common);
  if (terms.empty()) return "0";
  if (table.degree == 0) return to_string(table.entries.begin()->second);
  auto frac = [](const Integer& n, const Integer& d) {
    return "\\frac{" + n.str() + "}{" + d.str() + "}";
  };
  if (terms.size() == 1) {
    const Rational c = Rational(terms[0].numerator, common);
    const std::string mono = detail::latex_monomial(*terms[0].partition);
    const std::string sign = c < 0 ? "-" : "";
    if (abs(c) == 1) return sign + mono;
    if (denominator(c) == 1) return sign + Integer(abs(numerator(c))).str() + " " + mono;
    return sign + frac(abs(numerator(c)), denominator(c)) + " " + mono;
  }
  const std::string body = detail::join_terms(terms, " ", detail::latex_monomial);
  return common == 1 ? body : frac(1, common) + "\\left(" + body + "\\right)";
}

}  // namespace hirzebruch
