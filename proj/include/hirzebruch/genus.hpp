#pragma once

// Coefficients of multiplicative sequences K_k = sum_J lambda_J p_{j_1}...p_{j_r}.
//
// The characteristic series Q(z) = sum b_k z^k is read as the generating
// function of elementary symmetric functions of formal roots; lambda_k is
// then the k-th power sum of those roots (Newton's identities), and every
// lambda_J is the monomial symmetric function m_J of the roots. Expanding
// m_J in power sums gives
//
//   lambda_J = 1/(alpha_1! ... alpha_k!) sum_P (-1)^{r-l} c_P lambda_{k_1} ... lambda_{k_l}
//
// over all set partitions P = {P_1..P_l} of {1..r}, c_P = prod (|P_m|-1)!,
// k_m = sum_{i in P_m} j_i.

#include "bernoulli.hpp"
#include "characteristic_series.hpp"
#include "integer_partition.hpp"
#include "power_series.hpp"
#include "set_partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hirzebruch {

inline constexpr unsigned kMaxMonomialWeight = 12;

/// A genus given by its characteristic power series; b_0 must be exactly 1.
struct GenusSpec {
  std::string name;
  PowerSeries b;

  GenusSpec(std::string name_, PowerSeries b_) : name(std::move(name_)), b(std::move(b_)) {
    if (b[0] != 1) throw std::invalid_argument("GenusSpec '" + name + "': constant term must be 1");
  }

  static GenusSpec L(std::size_t order) { return {"L", char_series_L(order)}; }
  static GenusSpec Ahat(std::size_t order) { return {"Ahat", char_series_Ahat(order)}; }

  /// "L" or "Ahat" (case-sensitive), at the given truncation order.
  static GenusSpec builtin(const std::string& name, std::size_t order) {
    if (name == "L") return L(order);
    if (name == "Ahat") return Ahat(order);
    throw std::invalid_argument("unknown genus '" + name + "' (expected L or Ahat)");
  }

  std::size_t order() const noexcept { return b.order(); }
};

/// Coefficients of K_k keyed by partitions of k, iterated as (k), ..., (1,...,1).
struct CoefficientTable {
  unsigned degree = 0;
  std::map<IntegerPartition, Rational, std::greater<>> entries;
};

/// sum_J c_J p_J, all J of one weight.
using PowerSumExpansion = std::map<IntegerPartition, Rational, std::greater<>>;

/// [lambda_1, ..., lambda_K] via Newton's identities with e_j = b_j:
///   p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k.
inline std::vector<Rational> leading_coefficients(const GenusSpec& genus, unsigned K) {
  if (genus.order() < K)
    throw std::invalid_argument("leading_coefficients: series order " + std::to_string(genus.order()) +
                                " < requested degree " + std::to_string(K));
  const PowerSeries& e = genus.b;
  std::vector<Rational> p(K + 1);
  for (unsigned k = 1; k <= K; ++k) {
    Rational acc = Rational(k) * e[k];
    if (k % 2 == 0) acc = -acc;
    for (unsigned i = 1; i < k; ++i) acc += (i % 2 == 1) ? Rational(e[i] * p[k - i]) : Rational(-e[i] * p[k - i]);
    p[k] = acc;
  }
  return {p.begin() + 1, p.end()};
}

/// h_k = 2^{2k} (2^{2k-1} - 1) B_k / (2k)!.
inline Rational leading_coefficient_L_closed(unsigned k) {
  return Rational(pow2(2 * k) * (pow2(2 * k - 1) - 1)) * bernoulli(k) / Rational(factorial(2 * k));
}

/// a_k = (-1)^k B_{2k} / (2 (2k)!) with the signed Bernoulli number B_{2k};
/// equivalently -zeta(2k)/(2 pi)^{2k}, negative for every k.
inline Rational leading_coefficient_Ahat_closed(unsigned k) {
  Rational a = bernoulli_standard(2 * k) / Rational(2 * factorial(2 * k));
  return (k % 2 == 0) ? a : Rational(-a);
}

namespace detail {

/// Integer numerators of the power-sum expansion of m_I before division by
/// alpha!: for each J, sum of (-1)^{r-l} c_P over set partitions P with block
/// sums J. Every set partition is visited; nothing is deduplicated.
inline std::map<IntegerPartition, std::int64_t, std::greater<>> power_sum_numerators(const IntegerPartition& I) {
  const unsigned r = static_cast<unsigned>(I.length());
  if (r > kMaxSetPartitionSize)
    throw std::out_of_range("partition length " + std::to_string(r) + " exceeds the set-partition guard (12)");
  for (unsigned j : I.parts())
    if (j > 255) throw std::out_of_range("partition part exceeds 255");
  std::unordered_map<std::string, std::int64_t> acc;
  std::vector<unsigned> sums(r), sizes(r);
  std::int64_t fact[kMaxSetPartitionSize + 1];
  for (unsigned i = 0; i <= kMaxSetPartitionSize; ++i) fact[i] = factorial_i64(i);
  std::string key;
  for_each_set_partition_rgs(r, [&](const std::vector<std::uint8_t>& rgs, unsigned len) {
    std::fill(sums.begin(), sums.begin() + len, 0u);
    std::fill(sizes.begin(), sizes.begin() + len, 0u);
    for (unsigned i = 0; i < r; ++i) {
      sums[rgs[i]] += I[i];
      ++sizes[rgs[i]];
    }
    std::int64_t c = ((r - len) % 2 == 0) ? 1 : -1;
    for (unsigned m = 0; m < len; ++m) c *= fact[sizes[m] - 1];
    std::sort(sums.begin(), sums.begin() + len, std::greater<>());
    key.assign(len, '\0');
    for (unsigned m = 0; m < len; ++m) key[m] = static_cast<char>(sums[m]);
    acc[key] += c;
  });
  std::map<IntegerPartition, std::int64_t, std::greater<>> out;
  for (const auto& [k, c] : acc) {
    if (c == 0) continue;
    std::vector<unsigned> parts;
    for (char ch : k) parts.push_back(static_cast<unsigned char>(ch));
    out.emplace(IntegerPartition(std::move(parts)), c);
  }
  return out;
}

}  // namespace detail

/// m_I = 1/(alpha_1! ... alpha_k!) sum_P (-1)^{r-l} c_P p_J, weight(I) <= 12.
inline PowerSumExpansion monomial_to_power_sum(const IntegerPartition& I) {
  if (I.weight() > kMaxMonomialWeight)
    throw std::out_of_range("monomial_to_power_sum: weight " + std::to_string(I.weight()) + " exceeds 12");
  const Rational scale = Rational(1) / Rational(I.multiplicity_factorial());
  PowerSumExpansion out;
  for (const auto& [J, c] : detail::power_sum_numerators(I)) out.emplace(J, scale * c);
  return out;
}

/// Exact coefficients of one multiplicative sequence, with the products
/// lambda_{k_1}...lambda_{k_l} memoized. Safe for concurrent use.
class MultiplicativeSequence {
 public:
  explicit MultiplicativeSequence(GenusSpec genus)
      : genus_(std::move(genus)), lambda_(leading_coefficients(genus_, static_cast<unsigned>(genus_.order()))) {}

  const GenusSpec& genus() const noexcept { return genus_; }

  /// lambda_k for 1 <= k <= order.
  const Rational& leading(unsigned k) const {
    if (k < 1 || k > lambda_.size())
      throw std::out_of_range("leading coefficient index " + std::to_string(k) + " outside 1.." +
                              std::to_string(lambda_.size()));
    return lambda_[k - 1];
  }

  /// lambda_J via the set-partition formula.
  Rational coefficient(const IntegerPartition& J) const {
    if (J.length() == 0) return 1;
    if (J.weight() > genus_.order())
      throw std::invalid_argument("coefficient: weight " + std::to_string(J.weight()) + " exceeds series order " +
                                  std::to_string(genus_.order()));
    Rational acc = 0;
    for (const auto& [K, c] : detail::power_sum_numerators(J)) acc += Rational(c) * product(K);
    return acc / Rational(J.multiplicity_factorial());
  }

  CoefficientTable table(unsigned k) const {
    CoefficientTable t;
    t.degree = k;
    for (const auto& J : integer_partitions(k)) t.entries.emplace(J, coefficient(J));
    return t;
  }

 private:
  Rational product(const IntegerPartition& K) const {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = products_.find(K); it != products_.end()) return it->second;
    }
    Rational p = 1;
    for (unsigned k : K.parts()) p *= leading(k);
    std::lock_guard<std::mutex> lock(mutex_);
    return products_.emplace(K, std::move(p)).first->second;
  }

  GenusSpec genus_;
  std::vector<Rational> lambda_;
  mutable std::mutex mutex_;
  mutable std::map<IntegerPartition, Rational> products_;
};

/// One-shot form of MultiplicativeSequence::coefficient.
inline Rational coefficient_closed_form(const GenusSpec& genus, const IntegerPartition& J) {
  return MultiplicativeSequence(genus).coefficient(J);
}

}  // namespace hirzebruch
