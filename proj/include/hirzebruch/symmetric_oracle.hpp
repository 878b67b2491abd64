#pragma once

// Independent oracle for multiplicative-sequence coefficients.
//
// With m = k formal variables x_1..x_m, K_k is the z^k coefficient of
// prod_i Q(x_i z) rewritten in elementary symmetric polynomials e_j(x) and read
// with e_j -> p_j. The expansion is done with explicit multivariate
// polynomials and the rewrite by leading-term elimination; nothing from the
// set-partition formula is used.

#include "genus.hpp"
#include "integer_partition.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hirzebruch {

inline constexpr unsigned kMaxOracleDegree = 8;

namespace detail {

using Exponents = std::vector<std::uint8_t>;

/// Polynomial in a fixed number of variables; no zero coefficients stored.
class MultiPoly {
 public:
  explicit MultiPoly(unsigned vars) : vars_(vars) {}

  static MultiPoly constant(unsigned vars, const Rational& c) {
    MultiPoly p(vars);
    if (c != 0) p.terms_.emplace(Exponents(vars, 0), c);
    return p;
  }

  /// e_j(x_1..x_vars).
  static MultiPoly elementary(unsigned vars, unsigned j) {
    MultiPoly p(vars);
    if (j > vars) return p;
    Exponents e(vars, 0);
    std::fill(e.begin(), e.begin() + j, 1);
    // std::prev_permutation walks all 0/1 vectors with j ones.
    do p.terms_.emplace(e, 1);
    while (std::prev_permutation(e.begin(), e.end()));
    return p;
  }

  unsigned vars() const noexcept { return vars_; }
  bool empty() const noexcept { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }

  void add(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Product, dropping every monomial of total degree > max_degree.
  MultiPoly times(const MultiPoly& other, unsigned max_degree) const {
    MultiPoly out(vars_);
    Exponents e(vars_);
    for (const auto& [ea, ca] : terms_) {
      const unsigned da = degree(ea);
      for (const auto& [eb, cb] : other.terms_) {
        if (da + degree(eb) > max_degree) continue;
        for (unsigned i = 0; i < vars_; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
        out.add(e, ca * cb);
      }
    }
    return out;
  }

  MultiPoly homogeneous_part(unsigned d) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_)
      if (degree(e) == d) out.terms_.emplace(e, c);
    return out;
  }

  static unsigned degree(const Exponents& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }

 private:
  unsigned vars_;
  std::map<Exponents, Rational> terms_;
};

/// Conjugate of a partition given as a non-increasing exponent vector.
inline IntegerPartition conjugate(const Exponents& lambda) {
  std::vector<unsigned> mu;
  const unsigned top = lambda.empty() ? 0 : lambda.front();
  for (unsigned j = 1; j <= top; ++j) {
    unsigned count = 0;
    for (auto x : lambda) count += (x >= j) ? 1 : 0;
    mu.push_back(count);
  }
  return IntegerPartition(std::move(mu));
}

/// Writes a symmetric homogeneous polynomial as sum_mu c_mu e_mu by repeatedly
/// subtracting c * e_{lambda'} for the lexicographically leading monomial x^lambda.
inline std::map<IntegerPartition, Rational, std::greater<>> to_elementary_basis(MultiPoly f, unsigned degree) {
  const unsigned m = f.vars();
  std::vector<MultiPoly> e;
  for (unsigned j = 0; j <= m; ++j) e.push_back(MultiPoly::elementary(m, j));
  std::map<IntegerPartition, Rational, std::greater<>> out;
  while (!f.empty()) {
    const auto& [lead, c] = *f.terms().rbegin();
    if (!std::is_sorted(lead.begin(), lead.end(), std::greater<>()))
      throw std::logic_error("to_elementary_basis: polynomial is not symmetric");
    const IntegerPartition mu = conjugate(lead);
    const Rational coeff = c;
    MultiPoly e_mu = MultiPoly::constant(m, 1);
    for (unsigned part : mu.parts()) {
      if (part > m) throw std::logic_error("to_elementary_basis: too few variables");
      e_mu = e_mu.times(e[part], degree);
    }
    for (const auto& [ex, cx] : e_mu.terms()) f.add(ex, -coeff * cx);
    out.emplace(mu, coeff);
  }
  return out;
}

}  // namespace detail

/// Table of K_k computed from the symmetric-function definition, k <= 8.
inline CoefficientTable coefficient_table_oracle(const GenusSpec& genus, unsigned k) {
  if (k < 1 || k > kMaxOracleDegree)
    throw std::out_of_range("coefficient_table_oracle: k = " + std::to_string(k) +
                            " outside 1..8 (the multivariate expansion grows too quickly beyond 8)");
  if (genus.order() < k) throw std::invalid_argument("coefficient_table_oracle: series order below k");
  const unsigned m = k;
  detail::MultiPoly prod = detail::MultiPoly::constant(m, 1);
  for (unsigned i = 0; i < m; ++i) {
    detail::MultiPoly factor(m);
    detail::Exponents e(m, 0);
    for (unsigned d = 0; d <= k; ++d) {
      e[i] = static_cast<std::uint8_t>(d);
      factor.add(e, genus.b[d]);
    }
    prod = prod.times(factor, k);
  }
  auto basis = detail::to_elementary_basis(prod.homogeneous_part(k), k);
  CoefficientTable t;
  t.degree = k;
  for (const auto& J : integer_partitions(k)) {
    auto it = basis.find(J);
    t.entries.emplace(J, it == basis.end() ? Rational(0) : it->second);
  }
  return t;
}

}  // namespace hirzebruch
