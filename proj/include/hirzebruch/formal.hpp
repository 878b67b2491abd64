#pragma once

// Truncated formal series in indeterminates a_n (a in a finite symbol set S,
// 1 <= n <= N), used to check the set-partition identities exactly.
//
// For a block T of symbols, f_T(n) = prod_{a in T} a_n. A monomial assigns to
// each symbol at most one level, so it is stored as the level list indexed by
// symbol (0 = symbol absent), which is the sorted tag list a_{n_a}.

#include "rational.hpp"
#include "set_partition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hirzebruch {

inline constexpr std::uint64_t kFormalTermBudget = 1'000'000;

class FormalPolynomial {
 public:
  using Monomial = std::vector<std::uint16_t>;

  FormalPolynomial(unsigned symbols, unsigned level_cap) : symbols_(symbols), cap_(level_cap) {}

  unsigned symbols() const noexcept { return symbols_; }
  unsigned level_cap() const noexcept { return cap_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

  void add(const Monomial& m, const Rational& c) {
    if (m.size() != symbols_) throw std::invalid_argument("FormalPolynomial: monomial arity mismatch");
    for (auto level : m)
      if (level > cap_) throw std::invalid_argument("FormalPolynomial: level above cap");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  FormalPolynomial& operator+=(const FormalPolynomial& o) {
    require_compatible(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }

  FormalPolynomial scaled(const Rational& c) const {
    FormalPolynomial out(symbols_, cap_);
    if (c == 0) return out;
    for (const auto& [m, x] : terms_) out.terms_.emplace(m, x * c);
    return out;
  }

  /// Product of polynomials in disjoint sets of symbols.
  FormalPolynomial operator*(const FormalPolynomial& o) const {
    require_compatible(o);
    FormalPolynomial out(symbols_, cap_);
    Monomial m(symbols_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        for (unsigned a = 0; a < symbols_; ++a) {
          if (ma[a] && mb[a]) throw std::invalid_argument("FormalPolynomial: factors share a symbol");
          m[a] = static_cast<std::uint16_t>(ma[a] + mb[a]);
        }
        out.add(m, ca * cb);
      }
    return out;
  }

  friend bool operator==(const FormalPolynomial& a, const FormalPolynomial& b) {
    return a.symbols_ == b.symbols_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
  }

  /// Replaces every a_n by value(a, n) and sums.
  double evaluate(const std::function<double(unsigned, unsigned)>& value) const {
    double total = 0;
    for (const auto& [m, c] : terms_) {
      double t = to_double(c);
      for (unsigned a = 0; a < symbols_; ++a)
        if (m[a]) t *= value(a, m[a]);
      total += t;
    }
    return total;
  }

  static std::string monomial_string(const Monomial& m) {
    std::string s;
    for (unsigned a = 0; a < m.size(); ++a) {
      if (!m[a]) continue;
      if (!s.empty()) s += "*";
      s += symbol_name(a) + "_" + std::to_string(m[a]);
    }
    return s.empty() ? "1" : s;
  }

  static std::string symbol_name(unsigned a) {
    return a < 26 ? std::string(1, static_cast<char>('a' + a)) : "x" + std::to_string(a);
  }

  /// First monomial (in key order) whose coefficient differs, or nullopt.
  std::optional<std::string> first_difference(const FormalPolynomial& o) const {
    std::map<Monomial, std::pair<Rational, Rational>> all;
    for (const auto& [m, c] : terms_) all[m].first = c;
    for (const auto& [m, c] : o.terms_) all[m].second = c;
    for (const auto& [m, cc] : all)
      if (cc.first != cc.second)
        return monomial_string(m) + ": " + to_string(cc.first) + " vs " + to_string(cc.second);
    return std::nullopt;
  }

 private:
  void require_compatible(const FormalPolynomial& o) const {
    if (o.symbols_ != symbols_ || o.cap_ != cap_)
      throw std::invalid_argument("FormalPolynomial: different symbol sets or level caps");
  }

  unsigned symbols_;
  unsigned cap_;
  std::map<Monomial, Rational> terms_;
};

namespace detail {

inline void check_budget(unsigned blocks, unsigned N) {
  if (N == 0) throw std::invalid_argument("formal series: level cap N must be positive");
  if (N > 65535) throw std::out_of_range("formal series: level cap too large");
  const double terms = std::pow(static_cast<double>(N), static_cast<double>(blocks));
  if (terms > static_cast<double>(kFormalTermBudget))
    throw std::length_error("formal series: N^l(pi) = " + std::to_string(static_cast<long long>(terms)) +
                            " exceeds the term budget of 1e6");
}

/// Visits every (n_1..n_l) in [1, N]^l.
template <typename Visitor>
void for_each_index_tuple(unsigned l, unsigned N, Visitor&& visit) {
  std::vector<unsigned> n(l, 1);
  while (true) {
    visit(static_cast<const std::vector<unsigned>&>(n));
    unsigned i = 0;
    while (i < l && n[i] == N) n[i++] = 1;
    if (i == l) return;
    ++n[i];
  }
}

inline FormalPolynomial::Monomial assign_levels(const std::vector<std::vector<unsigned>>& blocks,
                                                const std::vector<unsigned>& levels, unsigned symbols) {
  FormalPolynomial::Monomial m(symbols, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (unsigned a : blocks[i]) m[a] = static_cast<std::uint16_t>(levels[i]);
  return m;
}

inline int alternating_sign(const std::vector<unsigned>& levels) {
  return std::accumulate(levels.begin(), levels.end(), 0u) % 2 == 0 ? 1 : -1;
}

/// n >=_2 m: n >= m, with equality only when n is even.
inline bool geq2(unsigned n, unsigned m) { return n > m || (n == m && n % 2 == 0); }

}  // namespace detail

/// p_pi = sum over n_1..n_l of f_{pi_1}(n_1) ... f_{pi_l}(n_l).
inline FormalPolynomial formal_p(const SetPartition& pi, unsigned N) {
  detail::check_budget(pi.length(), N);
  const auto blocks = pi.blocks();
  FormalPolynomial out(pi.size(), N);
  detail::for_each_index_tuple(pi.length(), N, [&](const std::vector<unsigned>& n) {
    out.add(detail::assign_levels(blocks, n, pi.size()), 1);
  });
  return out;
}

/// sum_n f_B(n) for one block B of symbols, inside a ground set of `symbols`.
inline FormalPolynomial formal_block_sum(const std::vector<unsigned>& block, unsigned symbols, unsigned N) {
  detail::check_budget(1, N);
  FormalPolynomial out(symbols, N);
  for (unsigned n = 1; n <= N; ++n) out.add(detail::assign_levels({block}, {n}, symbols), 1);
  return out;
}

/// m_pi: as p_pi but over pairwise distinct n_1..n_l.
inline FormalPolynomial formal_m(const SetPartition& pi, unsigned N) {
  detail::check_budget(pi.length(), N);
  const auto blocks = pi.blocks();
  FormalPolynomial out(pi.size(), N);
  detail::for_each_index_tuple(pi.length(), N, [&](const std::vector<unsigned>& n) {
    std::vector<unsigned> sorted = n;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
    out.add(detail::assign_levels(blocks, n, pi.size()), 1);
  });
  return out;
}

/// p-bar_pi: p_pi with each term weighted by (-1)^{n_1+...+n_l}.
inline FormalPolynomial formal_p_bar(const SetPartition& pi, unsigned N) {
  detail::check_budget(pi.length(), N);
  const auto blocks = pi.blocks();
  FormalPolynomial out(pi.size(), N);
  detail::for_each_index_tuple(pi.length(), N, [&](const std::vector<unsigned>& n) {
    out.add(detail::assign_levels(blocks, n, pi.size()), detail::alternating_sign(n));
  });
  return out;
}

/// m_{nu,e}: distinct levels with n_i of parity e_i (1 = odd, 0 = even) for block i.
inline FormalPolynomial formal_m_parity(const SetPartition& nu, const std::vector<int>& parity, unsigned N) {
  if (parity.size() != nu.length()) throw std::invalid_argument("formal_m_parity: one parity per block");
  FormalPolynomial m = formal_m(nu, N);
  FormalPolynomial out(nu.size(), N);
  const auto blocks = nu.blocks();
  for (const auto& [mono, c] : m.terms()) {
    bool ok = true;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      ok = ok && static_cast<int>(mono[blocks[i].front()] % 2) == parity[i];
    if (ok) out.add(mono, c);
  }
  return out;
}

/// T for an ordered partition (blocks in the given order):
/// sum over n_1 >=_2 ... >=_2 n_l >= 1 of (-1)^{sum n} f_{B_1}(n_1)...f_{B_l}(n_l).
inline FormalPolynomial formal_T_ordered(const std::vector<std::vector<unsigned>>& ordered_blocks, unsigned symbols,
                                         unsigned N) {
  const unsigned l = static_cast<unsigned>(ordered_blocks.size());
  detail::check_budget(l, N);
  FormalPolynomial out(symbols, N);
  detail::for_each_index_tuple(l, N, [&](const std::vector<unsigned>& n) {
    for (unsigned i = 0; i + 1 < l; ++i)
      if (!detail::geq2(n[i], n[i + 1])) return;
    out.add(detail::assign_levels(ordered_blocks, n, symbols), detail::alternating_sign(n));
  });
  return out;
}

/// T^Sigma_pi: sum of formal_T_ordered over the l! orderings of the blocks, l <= 4.
inline FormalPolynomial formal_T_sigma(const SetPartition& pi, unsigned N) {
  if (pi.length() > 4) throw std::out_of_range("formal_T_sigma: at most 4 blocks");
  detail::check_budget(pi.length(), N);
  const auto blocks = pi.blocks();
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  FormalPolynomial out(pi.size(), N);
  do {
    std::vector<std::vector<unsigned>> ordered;
    for (std::size_t i : order) ordered.push_back(blocks[i]);
    out += formal_T_ordered(ordered, pi.size(), N);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

struct FormalCheckReport {
  std::string name;
  bool pass = false;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  std::string first_difference;  // empty on success
};

namespace detail {
inline FormalCheckReport compare(std::string name, const FormalPolynomial& lhs, const FormalPolynomial& rhs) {
  FormalCheckReport rep;
  rep.name = std::move(name);
  rep.lhs_terms = lhs.size();
  rep.rhs_terms = rhs.size();
  auto diff = lhs.first_difference(rhs);
  rep.pass = !diff;
  if (diff) rep.first_difference = *diff;
  return rep;
}

inline int parity_sign(unsigned l) { return l % 2 == 0 ? 1 : -1; }
}  // namespace detail

/// p_pi = sum_{rho >= pi} m_rho.
inline FormalCheckReport check_p_from_m(const SetPartition& pi, unsigned N) {
  FormalPolynomial rhs(pi.size(), N);
  for (const auto& rho : coarsenings(pi)) rhs += formal_m(rho, N);
  return detail::compare("p=sum_m " + pi.to_string(), formal_p(pi, N), rhs);
}

/// m_pi = sum_{rho >= pi} mu(pi, rho) p_rho.
inline FormalCheckReport check_mobius_inversion(const SetPartition& pi, unsigned N) {
  FormalPolynomial rhs(pi.size(), N);
  for (const auto& rho : coarsenings(pi)) rhs += formal_p(rho, N).scaled(mobius(pi, rho));
  return detail::compare("m=sum_mu_p " + pi.to_string(), formal_m(pi, N), rhs);
}

/// (-1)^{l(pi)} T^Sigma_pi = sum_{rho >= pi} (-1)^{l(rho)} mu(pi, rho) p-bar_rho
/// and its inverted form (-1)^{l(pi)} p-bar_pi = sum_{rho >= pi} (-1)^{l(rho)} T^Sigma_rho.
/// Both must hold for a pass; the report names the first failure.
inline FormalCheckReport check_Tp(const SetPartition& pi, unsigned N) {
  const auto rhos = coarsenings(pi);
  FormalPolynomial rhs_tp(pi.size(), N), rhs_pt(pi.size(), N);
  for (const auto& rho : rhos) {
    rhs_tp += formal_p_bar(rho, N).scaled(detail::parity_sign(rho.length()) * mobius(pi, rho));
    rhs_pt += formal_T_sigma(rho, N).scaled(detail::parity_sign(rho.length()));
  }
  const int s = detail::parity_sign(pi.length());
  FormalCheckReport tp = detail::compare("Tp " + pi.to_string(), formal_T_sigma(pi, N).scaled(s), rhs_tp);
  FormalCheckReport pt = detail::compare("pT " + pi.to_string(), formal_p_bar(pi, N).scaled(s), rhs_pt);
  FormalCheckReport rep = tp.pass ? pt : tp;
  rep.name = "Tp+pT " + pi.to_string();
  rep.pass = tp.pass && pt.pass;
  return rep;
}

}  // namespace hirzebruch
