#pragma once

// Numerical evaluation of zeta-type series in double precision.
//
// Every multi-index series is evaluated by a dynamic programme over the
// indices: one sweep per level with running (compensated) prefix sums, so the
// cost is O(rN) rather than O(N^r). Truncation means every index is <= N.
//
// Error bounds are estimates: monotone sums use an Euler-Maclaurin tail for
// the outer index and the two-sided bracket
//   P(N) + Z(N) * inner(N)  <=  value  <=  P(N) + Z(N) * inner_upper,
// alternating sums use first-omitted-term bounds. They are validated by the
// doubling tests rather than proven.

#include "bernoulli.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hirzebruch {

struct EvalConfig {
  /// Largest index N; 0 picks the default for the series depth.
  std::size_t depth = 0;
  double target_tol = 1e-6;
  /// Every exponent must satisfy s >= 1 + delta.
  double delta = 0.05;

  static std::size_t default_depth(std::size_t r) { return r <= 2 ? 1'000'000 : 200'000; }

  std::size_t depth_for(std::size_t r) const { return depth == 0 ? default_depth(r) : depth; }

  void validate() const {
    if (depth != 0 && depth < 2) throw std::invalid_argument("EvalConfig: depth must be >= 2");
    if (!(target_tol > 0)) throw std::invalid_argument("EvalConfig: tol must be positive");
    if (!(delta > 0)) throw std::invalid_argument("EvalConfig: delta must be positive");
  }
};

struct SeriesValue {
  double value = 0;      // best estimate of the infinite sum
  double err_bound = 0;  // estimated |value - true sum|
  double truncated = 0;  // raw sum over indices <= depth
  std::size_t depth = 0;
};

/// Neumaier's compensated summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

/// c * pi^power with exact rational c.
struct PiPowerRational {
  Rational coefficient;
  unsigned power = 0;
  double to_double() const { return hirzebruch::to_double(coefficient) * std::pow(std::numbers::pi, power); }
};

/// zeta*(2k) = pi^{2k} (2^{2k-1} - 1) B_k / (2k)!.
inline PiPowerRational zeta_star_even_exact(unsigned k) {
  if (k == 0) throw std::invalid_argument("zeta_star_even_exact: k >= 1");
  return {Rational(pow2(2 * k - 1) - 1) * bernoulli(k) / Rational(factorial(2 * k)), 2 * k};
}

/// zeta(2k) = zeta*(2k) / (1 - 2^{1-2k}) = pi^{2k} 2^{2k-1} B_k / (2k)!.
inline PiPowerRational zeta_even_exact(unsigned k) {
  PiPowerRational eta = zeta_star_even_exact(k);
  const Rational factor = 1 - Rational(1) / Rational(pow2(2 * k - 1));
  return {eta.coefficient / factor, eta.power};
}

namespace detail {

constexpr double kEps = std::numeric_limits<double>::epsilon();

inline void check_exponents(std::span<const double> s, const EvalConfig& cfg, bool allow_empty = false) {
  cfg.validate();
  if (s.empty() && !allow_empty) throw std::invalid_argument("series needs at least one exponent");
  for (double x : s)
    if (!(x >= 1 + cfg.delta - 1e-12))
      throw std::domain_error("exponent " + std::to_string(x) + " is below 1 + delta = " +
                              std::to_string(1 + cfg.delta));
}

inline double inv_pow(std::size_t n, double s) { return std::pow(static_cast<double>(n), -s); }

struct Tail {
  double value;
  double err;
};

/// sum_{n > N} n^{-s} for s > 1: a short explicit sum followed by
/// Euler-Maclaurin with five Bernoulli corrections.
inline Tail zeta_tail(double s, std::size_t N) {
  constexpr std::size_t kStart = 64;
  const std::size_t M = std::max(N + 1, kStart);
  CompensatedSum head;
  for (std::size_t n = M - 1; n > N; --n) head.add(inv_pow(n, s));
  const double m = static_cast<double>(M);
  CompensatedSum em;
  em.add(std::pow(m, 1 - s) / (s - 1));
  em.add(0.5 * std::pow(m, -s));
  // B_2j / (2j)! for j = 1..6
  static constexpr double kB[] = {1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600, 1.0 / 47900160,
                                  -691.0 / 1307674368000.0};
  double rising = s;  // s (s+1) ... (s+2j-2)
  double last = 0;
  for (int j = 1; j <= 6; ++j) {
    const double term = kB[j - 1] * rising * std::pow(m, -s - 2 * j + 1);
    if (j < 6) em.add(term);
    else last = term;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
  }
  const double total = head.value() + em.value();
  return {total, std::abs(last) + 4 * kEps * total};
}

/// Full zeta(s) from a tail at N = 0; used for absolute-value bounds.
inline double zeta_value(double s) {
  const Tail t = zeta_tail(s, 0);
  return t.value;
}

/// Forward dynamic programme for the nested monotone sums (strict or not).
/// Returns prefix sums of the outermost level at depth N, and the bracket.
inline SeriesValue monotone_nested(std::span<const double> s, std::size_t N, bool strict) {
  const std::size_t r = s.size();
  std::vector<double> prefix(N + 1, 0.0), next(N + 1, 0.0);
  // Innermost level.
  {
    CompensatedSum acc;
    for (std::size_t n = 1; n <= N; ++n) {
      acc.add(inv_pow(n, s[r - 1]));
      prefix[n] = acc.value();
    }
  }
  Tail t = zeta_tail(s[r - 1], N);
  double hi = prefix[N] + t.value;  // upper estimate of the level's infinite sum
  double lo = hi;
  double err = t.err;
  for (std::size_t j = r - 1; j-- > 0;) {
    CompensatedSum acc;
    for (std::size_t n = 1; n <= N; ++n) {
      acc.add(inv_pow(n, s[j]) * (strict ? prefix[n - 1] : prefix[n]));
      next[n] = acc.value();
    }
    const double inner_truncated = prefix[N];
    std::swap(prefix, next);
    t = zeta_tail(s[j], N);
    lo = prefix[N] + t.value * inner_truncated;
    hi = prefix[N] + t.value * hi;
    err = t.err * hi + t.value * err;
  }
  SeriesValue v;
  v.depth = N;
  v.truncated = prefix[N];
  v.value = 0.5 * (lo + hi);
  v.err_bound = 0.5 * (hi - lo) + err + 8 * kEps * static_cast<double>(r) * hi;
  return v;
}

/// Forward DP for chains n_1 >=_2 ... >=_2 n_r >= base with alternating signs.
/// Returns the truncated sum over n_1 <= N (N even).
inline double alternating_chain(std::span<const double> s, std::size_t N, std::size_t base) {
  const std::size_t r = s.size();
  std::vector<double> prefix(N + 1, 0.0), next(N + 1, 0.0);
  auto sgn = [](std::size_t n) { return (n % 2 == 0) ? 1.0 : -1.0; };
  {
    CompensatedSum acc;
    for (std::size_t n = base; n <= N; ++n) {
      acc.add(sgn(n) * inv_pow(n, s[r - 1]));
      prefix[n] = acc.value();
    }
  }
  for (std::size_t j = r - 1; j-- > 0;) {
    CompensatedSum acc;
    for (std::size_t n = 1; n <= N; ++n) {
      // n_j = n >=_2 n_{j+1}: strictly below n, or equal when n is even.
      const double inner = (n % 2 == 0) ? prefix[n] : prefix[n - 1];
      const double t = sgn(n) * inv_pow(n, s[j]) * inner;
      acc.add(t);
      next[n] = acc.value();
    }
    std::swap(prefix, next);
  }
  return prefix[N];
}

/// Tail estimate for the alternating chain sums beyond n_1 = N (N even).
/// abs_bound[i] bounds sum_{n >= base} n^{-s_i}.
inline double alternating_chain_tail(std::span<const double> s, std::size_t N, std::size_t base) {
  const std::size_t r = s.size();
  std::vector<double> abs_bound(r);
  for (std::size_t i = 0; i < r; ++i) abs_bound[i] = base <= 1 ? zeta_value(s[i]) : zeta_tail(s[i], base - 1).value;
  auto product_from = [&](std::size_t i) {
    double p = 1;
    for (std::size_t j = i; j < r; ++j) p *= abs_bound[j];
    return p;
  };
  const double first = inv_pow(N + 1, s[0]);
  if (r == 1) return first;
  // Pairs (2m-1, 2m) beyond N: a telescoping alternating part bounded by the
  // first omitted term times |inner|, plus the change of the inner prefix
  // across the pair.
  const double a1 = product_from(1);
  const double a2 = product_from(2);
  const double shift = std::pow(1.0 + 1.0 / static_cast<double>(N), s[1]);
  return first * a1 + 2.0 * a2 * shift * zeta_tail(s[0] + s[1], N).value;
}

inline double chain_abs_sum(std::span<const double> s, std::size_t base) {
  double p = 1;
  for (double x : s) p *= base <= 1 ? zeta_value(x) : zeta_tail(x, base - 1).value;
  return p;
}

}  // namespace detail

/// Riemann zeta(s) = sum_{n >= 1} n^{-s}; direct sum to N plus Euler-Maclaurin tail.
inline SeriesValue zeta(double s, const EvalConfig& cfg = {}) {
  const double exps[] = {s};
  detail::check_exponents(exps, cfg);
  const std::size_t N = cfg.depth_for(1);
  CompensatedSum acc;
  for (std::size_t n = 1; n <= N; ++n) acc.add(detail::inv_pow(n, s));
  const detail::Tail t = detail::zeta_tail(s, N);
  SeriesValue v;
  v.depth = N;
  v.truncated = acc.value();
  v.value = v.truncated + t.value;
  v.err_bound = t.err + 8 * detail::kEps * v.value;
  return v;
}

/// zeta*(s) = sum (-1)^{n-1} n^{-s}, summed as positive pairs
/// (2m-1)^{-s} - (2m)^{-s}. Bound: the first omitted term.
inline SeriesValue zeta_star(double s, const EvalConfig& cfg = {}) {
  const double exps[] = {s};
  detail::check_exponents(exps, cfg);
  std::size_t N = cfg.depth_for(1);
  N += N % 2;
  CompensatedSum acc;
  for (std::size_t m = 1; 2 * m <= N; ++m) acc.add(detail::inv_pow(2 * m - 1, s) - detail::inv_pow(2 * m, s));
  SeriesValue v;
  v.depth = N;
  v.truncated = v.value = acc.value();
  v.err_bound = detail::inv_pow(N + 1, s) + 4 * detail::kEps * v.value;
  return v;
}

/// Strict multiple zeta value: sum over n_1 > ... > n_r >= 1.
inline SeriesValue mzv_strict(std::span<const double> s, const EvalConfig& cfg = {}) {
  detail::check_exponents(s, cfg);
  return detail::monotone_nested(s, cfg.depth_for(s.size()), true);
}

/// Non-strict sum S(s_1..s_r) over n_1 >= ... >= n_r >= 1.
inline SeriesValue mzv_star(std::span<const double> s, const EvalConfig& cfg = {}) {
  detail::check_exponents(s, cfg);
  return detail::monotone_nested(s, cfg.depth_for(s.size()), false);
}

/// T_{2k}(s_1..s_r): sum over n_1 >=_2 ... >=_2 n_r >= 2k of
/// (-1)^{n_1+...+n_r} / (n_1^{s_1} ... n_r^{s_r}), where n >=_2 m means n >= m
/// with equality only for even n. The empty tuple gives exactly 1.
inline SeriesValue t_series_shifted(unsigned k, std::span<const double> s, const EvalConfig& cfg = {}) {
  if (k == 0) throw std::invalid_argument("t_series_shifted: k >= 1");
  detail::check_exponents(s, cfg, /*allow_empty=*/true);
  std::size_t N = cfg.depth_for(std::max<std::size_t>(s.size(), 1));
  N += N % 2;
  SeriesValue v;
  v.depth = N;
  if (s.empty()) {
    v.value = v.truncated = 1;
    return v;
  }
  const std::size_t base = 2 * static_cast<std::size_t>(k);
  v.truncated = v.value = base > N ? 0.0 : detail::alternating_chain(s, N, base);
  v.err_bound = detail::alternating_chain_tail(s, N, base) +
                8 * detail::kEps * static_cast<double>(s.size()) * detail::chain_abs_sum(s, base);
  return v;
}

/// T(s_1..s_r): as T_{2k} but the final index only satisfies n_r >= 1.
inline SeriesValue t_series(std::span<const double> s, const EvalConfig& cfg = {}) {
  detail::check_exponents(s, cfg);
  std::size_t N = cfg.depth_for(s.size());
  N += N % 2;
  SeriesValue v;
  v.depth = N;
  v.truncated = v.value = detail::alternating_chain(s, N, 1);
  v.err_bound = detail::alternating_chain_tail(s, N, 1) +
                8 * detail::kEps * static_cast<double>(s.size()) * detail::chain_abs_sum(s, 1);
  return v;
}

/// Truncated T_{2k}(s_1..s_q) for every prefix length q = 0..r and every
/// k = 1..N/2, computed top-down (outermost index first) with suffix sums:
/// table[q][k]. Independent of the forward programme used by t_series.
inline std::vector<std::vector<double>> t_series_shifted_table(std::span<const double> s, std::size_t N) {
  N += N % 2;
  const std::size_t r = s.size();
  const std::size_t K = N / 2;
  std::vector<std::vector<double>> table(r + 1, std::vector<double>(K + 2, 0.0));
  std::fill(table[0].begin(), table[0].end(), 1.0);
  // suffix[m] = sum_{n=m}^{N} U_q(n), U_q(n) = sum over chains ending at n_q = n.
  std::vector<double> suffix(N + 2, 0.0), next(N + 2, 0.0);
  for (std::size_t q = 1; q <= r; ++q) {
    CompensatedSum acc;
    next[N + 1] = 0;
    for (std::size_t n = N; n >= 1; --n) {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      // n_{q-1} >=_2 n: n_{q-1} > n, or equal when n is even.
      const double outer = q == 1 ? 1.0 : ((n % 2 == 0) ? suffix[n] : suffix[n + 1]);
      acc.add(sign * detail::inv_pow(n, s[q - 1]) * outer);
      next[n] = acc.value();
    }
    std::swap(suffix, next);
    for (std::size_t k = 1; k <= K + 1; ++k) table[q][k] = 2 * k <= N ? suffix[2 * k] : 0.0;
  }
  return table;
}

enum class SeriesKernel { T, S, Strict };

/// Sum of the kernel over all r! orderings of s (repeats included), r <= 6.
inline SeriesValue symmetrize(SeriesKernel kernel, std::span<const double> s, const EvalConfig& cfg = {}) {
  if (s.empty() || s.size() > 6) throw std::out_of_range("symmetrize: need 1 <= r <= 6");
  std::vector<std::size_t> idx(s.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<double> perm(s.size());
  SeriesValue total;
  CompensatedSum value, truncated;
  do {
    for (std::size_t i = 0; i < idx.size(); ++i) perm[i] = s[idx[i]];
    SeriesValue v;
    switch (kernel) {
      case SeriesKernel::T: v = t_series(perm, cfg); break;
      case SeriesKernel::S: v = mzv_star(perm, cfg); break;
      case SeriesKernel::Strict: v = mzv_strict(perm, cfg); break;
    }
    value.add(v.value);
    truncated.add(v.truncated);
    total.err_bound += v.err_bound;
    total.depth = v.depth;
  } while (std::next_permutation(idx.begin(), idx.end()));
  total.value = value.value();
  total.truncated = truncated.value();
  return total;
}

}  // namespace hirzebruch
