#pragma once

// Verification suites: each suite is a list of independent checks producing
// one report line, `CHECK <name> <PASS|FAIL|ERROR> <lhs> <rhs> <delta> <bound>`.
// ERROR marks a check that could not be evaluated (a guard or budget tripped).
// Checks may run on several threads; lines are always returned in suite order.

#include "formal.hpp"
#include "genus.hpp"
#include "series_numeric.hpp"
#include "set_partition.hpp"
#include "symmetric_oracle.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hirzebruch {

inline constexpr std::uint64_t kDefaultSeed = 20'190'917;

struct CheckLine {
  std::string name;
  bool pass = false;
  bool error = false;
  std::string lhs, rhs;
  double delta = 0;
  double bound = 0;
  std::string message;  // exception text when error is set

  std::string format() const {
    return "CHECK " + name + " " + (error ? "ERROR" : pass ? "PASS" : "FAIL") + " " + lhs + " " + rhs + " " + num(delta) + " " +
           num(bound);
  }

  static std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
};

struct SuiteConfig {
  EvalConfig eval;
  unsigned k = 0;      // single degree; 0 = every degree up to max_k
  unsigned max_k = 0;  // 0 = suite default
  unsigned max_r = 3;
  unsigned level_cap = 4;
  unsigned samples = 0;  // 0 = suite default
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
};

using Check = std::function<CheckLine()>;

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"main",       "ahat",   "hoffman", "multiple-eta",
                                              "positivity", "formal", "oracle",  "signs"};
  return names;
}

/// Runs checks on `threads` workers; results keep the input order.
inline std::vector<CheckLine> run_checks(const std::vector<Check>& checks, unsigned threads) {
  std::vector<CheckLine> out(checks.size());
  auto run_one = [&](std::size_t i) {
    try {
      out[i] = checks[i]();
    } catch (const std::exception& e) {
      out[i].name = "check-" + std::to_string(i);
      out[i].pass = false;
      out[i].error = true;
      out[i].lhs = "-";
      out[i].rhs = "-";
      out[i].message = e.what();
    }
  };
  if (threads <= 1 || checks.size() <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) run_one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < checks.size(); i = next++) run_one(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

namespace detail {

inline std::string tuple_name(const std::vector<double>& s) {
  std::string out = "(";
  char buf[32];
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.4f", s[i]);
    out += (i ? "," : "") + std::string(buf);
  }
  return out + ")";
}

inline CheckLine exact_line(std::string name, const Rational& lhs, const Rational& rhs) {
  CheckLine c;
  c.name = std::move(name);
  c.lhs = to_string(lhs);
  c.rhs = to_string(rhs);
  c.pass = lhs == rhs;
  c.delta = c.pass ? 0.0 : std::abs(to_double(lhs - rhs));
  return c;
}

inline CheckLine numeric_line(std::string name, double lhs, double rhs, double delta, double bound) {
  CheckLine c;
  c.name = std::move(name);
  c.lhs = CheckLine::num(lhs);
  c.rhs = CheckLine::num(rhs);
  c.delta = delta;
  c.bound = bound;
  c.pass = std::isfinite(delta) && delta <= bound;
  return c;
}

inline std::vector<std::vector<double>> sample_tuples(std::mt19937_64& rng, std::size_t r, unsigned count) {
  std::uniform_real_distribution<double> u(1.2, 4.0);
  std::vector<std::vector<double>> out(count, std::vector<double>(r));
  for (auto& t : out)
    for (auto& x : t) x = u(rng);
  return out;
}

/// sum_P sign(P) c_P prod_m f(sum_{i in P_m} s_i) over set partitions of {1..r}.
/// `alternate` selects the factor (-1)^{r-l}.
template <typename BlockValue>
SeriesValue partition_product_sum(const std::vector<double>& s, bool alternate, BlockValue&& block_value) {
  const unsigned r = static_cast<unsigned>(s.size());
  CompensatedSum value, truncated;
  double err = 0;
  for_each_set_partition(r, [&](const SetPartition& P) {
    double c = 1;
    for (unsigned size : P.block_sizes()) c *= static_cast<double>(factorial_i64(size - 1));
    if (alternate && (r - P.length()) % 2 == 1) c = -c;
    double v = c, t = c, rel = 0;
    for (const auto& block : P.blocks()) {
      double sum = 0;
      for (unsigned i : block) sum += s[i];
      SeriesValue z = block_value(sum);
      v *= z.value;
      t *= z.truncated;
      rel += z.err_bound / std::abs(z.value);
    }
    value.add(v);
    truncated.add(t);
    err += std::abs(v) * rel;
  });
  SeriesValue out;
  out.value = value.value();
  out.truncated = truncated.value();
  out.err_bound = err;
  return out;
}

inline std::vector<unsigned> degrees(const SuiteConfig& cfg, unsigned default_max) {
  if (cfg.k) return {cfg.k};
  std::vector<unsigned> ks;
  for (unsigned k = 1; k <= (cfg.max_k ? cfg.max_k : default_max); ++k) ks.push_back(k);
  return ks;
}

inline EvalConfig fixed_depth(const EvalConfig& base, std::size_t r) {
  EvalConfig c = base;
  c.depth = base.depth_for(r);
  return c;
}

/// Coefficient of a genus against (-1)^r/alpha! * scale^k * kernel^Sigma(2J).
inline std::vector<Check> series_formula_checks(const SuiteConfig& cfg, const std::string& genus_name,
                                                SeriesKernel kernel, double scale, const std::string& label) {
  std::vector<Check> checks;
  const auto ks = degrees(cfg, 4);
  unsigned top = 0;
  for (unsigned k : ks) top = std::max(top, k);
  auto seq = std::make_shared<MultiplicativeSequence>(GenusSpec::builtin(genus_name, top + 1));
  for (unsigned k : ks)
    for (const auto& J : integer_partitions(k)) {
      checks.push_back([=] {
        const double exact = to_double(seq->coefficient(J));
        std::vector<double> s;
        for (unsigned j : J.parts()) s.push_back(2.0 * j);
        const SeriesValue sym = symmetrize(kernel, s, cfg.eval);
        const double sign = J.length() % 2 == 0 ? 1.0 : -1.0;
        const double factor = sign / to_double(Rational(J.multiplicity_factorial())) * std::pow(scale, 2.0 * k);
        const double approx = factor * sym.value;
        return numeric_line(label + "[" + J.to_string() + "]", exact, approx, std::abs(exact - approx) / std::abs(exact),
                            cfg.eval.target_tol);
      });
    }
  return checks;
}

}  // namespace detail

/// L coefficients against the symmetrized alternating T-sums.
inline std::vector<Check> suite_main(const SuiteConfig& cfg) {
  return detail::series_formula_checks(cfg, "L", SeriesKernel::T, 2.0 / std::numbers::pi, "L-vs-Tsum");
}

/// A-hat coefficients against the symmetrized non-strict sums S.
inline std::vector<Check> suite_ahat(const SuiteConfig& cfg) {
  return detail::series_formula_checks(cfg, "Ahat", SeriesKernel::S, 1.0 / (2.0 * std::numbers::pi), "Ahat-vs-Ssum");
}

/// Symmetric sums of strict and non-strict MZVs against signed products of zeta values.
/// Each tuple is compared twice: at common truncation depth against the
/// tolerance, and as limit estimates within the combined error bounds.
inline std::vector<Check> suite_hoffman(const SuiteConfig& cfg) {
  std::vector<Check> checks;
  std::mt19937_64 rng(cfg.seed);
  const unsigned count = cfg.samples ? cfg.samples : 20;
  for (unsigned r = 1; r <= cfg.max_r; ++r)
    for (const auto& s : detail::sample_tuples(rng, r, count))
      for (bool strict : {true, false}) {
        checks.push_back([=] {
          const EvalConfig ev = detail::fixed_depth(cfg.eval, r);
          const SeriesValue lhs = symmetrize(strict ? SeriesKernel::Strict : SeriesKernel::S, s, ev);
          const SeriesValue rhs =
              detail::partition_product_sum(s, strict, [&](double x) { return zeta(x, ev); });
          const std::string name = std::string(strict ? "strict-sym" : "star-sym") + detail::tuple_name(s);
          const double scale = std::max(1.0, std::abs(rhs.truncated));
          CheckLine trunc = detail::numeric_line(name + "@N", lhs.truncated, rhs.truncated,
                                                 std::abs(lhs.truncated - rhs.truncated) / scale, cfg.eval.target_tol);
          CheckLine limit = detail::numeric_line(name, lhs.value, rhs.value, std::abs(lhs.value - rhs.value),
                                                 lhs.err_bound + rhs.err_bound + cfg.eval.target_tol);
          CheckLine both = trunc.pass ? limit : trunc;
          both.pass = trunc.pass && limit.pass;
          return both;
        });
      }
  return checks;
}

/// sum_P (-1)^{r-l} c_P zeta*(s, P) against (-1)^r T^Sigma(s).
inline std::vector<Check> suite_multiple_eta(const SuiteConfig& cfg) {
  std::vector<Check> checks;
  std::mt19937_64 rng(cfg.seed);
  const unsigned count = cfg.samples ? cfg.samples : 20;
  for (unsigned r = 1; r <= cfg.max_r; ++r)
    for (const auto& s : detail::sample_tuples(rng, r, count))
      checks.push_back([=] {
        const EvalConfig ev = detail::fixed_depth(cfg.eval, r);
        const SeriesValue lhs = detail::partition_product_sum(s, true, [&](double x) { return zeta_star(x, ev); });
        const SeriesValue t = symmetrize(SeriesKernel::T, s, ev);
        const double rhs = (r % 2 == 0 ? 1.0 : -1.0) * t.value;
        return detail::numeric_line("eta-sym" + detail::tuple_name(s), lhs.value, rhs,
                                    std::abs(lhs.value - rhs) / std::max(1.0, std::abs(rhs)), cfg.eval.target_tol);
      });
  return checks;
}

/// T < 0 and T_{2k} > 0 beyond their error bounds on seeded tuples, then the
/// two recurrences linking T, T_{2k} and T_{2l+2} on a smaller sample.
inline std::vector<Check> suite_positivity(const SuiteConfig& cfg) {
  std::vector<Check> checks;
  std::mt19937_64 rng(cfg.seed);
  const unsigned count = cfg.samples ? cfg.samples : 100;
  for (unsigned i = 0; i < count; ++i) {
    const unsigned r = 1 + i % std::max(1u, cfg.max_r);
    const unsigned k = 1 + (i / 3) % 3;
    const auto s = detail::sample_tuples(rng, r, 1).front();
    checks.push_back([=] {
      const SeriesValue t = t_series(s, cfg.eval);
      const SeriesValue tk = t_series_shifted(k, s, cfg.eval);
      const bool ok = t.value < 0 && std::abs(t.value) > t.err_bound && tk.value > 0 && tk.value > tk.err_bound;
      CheckLine c = detail::numeric_line("sign-T-T" + std::to_string(2 * k) + detail::tuple_name(s), t.value, tk.value,
                                         std::max(t.err_bound, tk.err_bound), std::min(std::abs(t.value), std::abs(tk.value)));
      c.pass = ok;
      return c;
    });
  }
  const unsigned rec_count = std::max(1u, count / 10);
  for (unsigned i = 0; i < rec_count; ++i) {
    const unsigned r = 1 + i % std::max(1u, cfg.max_r);
    const unsigned k = 1 + i % 3;
    const auto s = detail::sample_tuples(rng, r, 1).front();
    checks.push_back([=] {
      const EvalConfig ev = detail::fixed_depth(cfg.eval, r);
      const std::size_t N = ev.depth + ev.depth % 2;
      const auto table = t_series_shifted_table(s, N);
      // T(s_1..s_r) = sum_k (-(2k-1)^{-s_r} + (2k)^{-s_r}) T_{2k}(s_1..s_{r-1})
      const SeriesValue lhs = t_series(s, ev);
      CompensatedSum rhs;
      for (std::size_t m = 1; 2 * m <= N; ++m)
        rhs.add((-std::pow(2.0 * m - 1, -s[r - 1]) + std::pow(2.0 * m, -s[r - 1])) * table[r - 1][m]);
      return detail::numeric_line("recurrence-T" + detail::tuple_name(s), lhs.value, rhs.value(),
                                  std::abs(lhs.value - rhs.value()), cfg.eval.target_tol);
    });
    checks.push_back([=] {
      const EvalConfig ev = detail::fixed_depth(cfg.eval, r);
      const std::size_t N = ev.depth + ev.depth % 2;
      const auto table = t_series_shifted_table(s, N);
      // T_{2k}(s) = sum_{l>=k} sum_j (2l)^{-(s_{j+1}+..+s_r)} ((2l)^{-s_j} - (2l+1)^{-s_j}) T_{2l+2}(s_1..s_{j-1})
      const SeriesValue lhs = t_series_shifted(k, s, ev);
      CompensatedSum rhs;
      for (std::size_t l = k; 2 * l <= N; ++l) {
        const double even = 2.0 * l, odd = 2.0 * l + 1;
        double run = 1;  // (2l)^{-(s_{j+1}+...+s_r)}
        for (std::size_t j = r; j >= 1; --j) {
          const double step = std::pow(even, -s[j - 1]) - (2 * l + 1 <= N ? std::pow(odd, -s[j - 1]) : 0.0);
          rhs.add(run * step * table[j - 1][l + 1]);
          run *= std::pow(even, -s[j - 1]);
        }
      }
      return detail::numeric_line("recurrence-T" + std::to_string(2 * k) + detail::tuple_name(s), lhs.value,
                                  rhs.value(), std::abs(lhs.value - rhs.value()), cfg.eval.target_tol);
    });
  }
  return checks;
}

/// Exact polynomial identities for every set partition of up to max_r
/// symbols at level cap N, and the alternating length sum.
inline std::vector<Check> suite_formal(const SuiteConfig& cfg) {
  std::vector<Check> checks;
  const unsigned N = cfg.level_cap;
  for (unsigned n = 1; n <= cfg.max_r; ++n)
    for (const auto& pi : enumerate_set_partitions(n)) {
      using Fn = FormalCheckReport (*)(const SetPartition&, unsigned);
      for (Fn fn : {Fn(&check_p_from_m), Fn(&check_mobius_inversion), Fn(&check_Tp)})
        checks.push_back([=] {
          const FormalCheckReport rep = fn(pi, N);
          CheckLine c;
          c.name = rep.name;
          for (char& ch : c.name)
            if (ch == ' ') ch = ':';
          c.name += "@N=" + std::to_string(N);
          c.pass = rep.pass;
          c.lhs = std::to_string(rep.lhs_terms) + "terms";
          c.rhs = std::to_string(rep.rhs_terms) + "terms";
          if (!rep.pass) c.rhs += "[" + rep.first_difference + "]";
          return c;
        });
    }
  for (unsigned n = 1; n <= 9; ++n)
    checks.push_back([=] {
      const Rational expected = n % 2 == 0 ? 1 : -1;
      CheckLine a = detail::exact_line("length-sum-stirling[" + std::to_string(n) + "]", length_sum(n), expected);
      CheckLine b = detail::exact_line("length-sum-lattice[" + std::to_string(n) + "]",
                                       length_sum_over_coarsenings(SetPartition::finest(n)), expected);
      a.pass = a.pass && b.pass;
      a.name = "length-sum[" + std::to_string(n) + "]";
      return a;
    });
  return checks;
}

/// Closed formula against the symmetric-function oracle, and Newton leading
/// coefficients against their closed forms.
inline std::vector<Check> suite_oracle(const SuiteConfig& cfg) {
  std::vector<Check> checks;
  const auto ks = detail::degrees(cfg, kMaxOracleDegree);
  for (const std::string genus : {"L", "Ahat"}) {
    for (unsigned k : ks)
      checks.push_back([=] {
        const GenusSpec g = GenusSpec::builtin(genus, k);
        const CoefficientTable oracle = coefficient_table_oracle(g, k);
        const CoefficientTable closed = MultiplicativeSequence(g).table(k);
        CheckLine c;
        c.name = "oracle-" + genus + "[k=" + std::to_string(k) + "]";
        c.lhs = std::to_string(closed.entries.size()) + "entries";
        c.rhs = std::to_string(oracle.entries.size()) + "entries";
        c.pass = oracle.entries == closed.entries;
        return c;
      });
    checks.push_back([=] {
      const auto newton = leading_coefficients(GenusSpec::builtin(genus, 20), 20);
      for (unsigned k = 1; k <= 20; ++k) {
        const Rational closed = genus == "L" ? leading_coefficient_L_closed(k) : leading_coefficient_Ahat_closed(k);
        if (newton[k - 1] != closed)
          return detail::exact_line("leading-" + genus + "[k=" + std::to_string(k) + "]", newton[k - 1], closed);
      }
      return detail::exact_line("leading-" + genus + "[k<=20]", newton[19],
                                genus == "L" ? leading_coefficient_L_closed(20) : leading_coefficient_Ahat_closed(20));
    });
  }
  return checks;
}

/// sign(h_J) = (-1)^{r-1} and sign(a_J) = (-1)^r for all partitions of k <= max_k.
inline std::vector<Check> suite_signs(const SuiteConfig& cfg) {
  std::vector<Check> checks;
  const auto ks = detail::degrees(cfg, 12);
  unsigned top = 0;
  for (unsigned k : ks) top = std::max(top, k);
  for (const std::string genus : {"L", "Ahat"}) {
    auto seq = std::make_shared<MultiplicativeSequence>(GenusSpec::builtin(genus, top));
    for (unsigned k : ks)
      for (const auto& J : integer_partitions(k))
        checks.push_back([=] {
          const Rational c = seq->coefficient(J);
          const int r = static_cast<int>(J.length());
          const int expected = genus == "L" ? (r % 2 == 1 ? 1 : -1) : (r % 2 == 0 ? 1 : -1);
          CheckLine line;
          line.name = "sign-" + genus + "[" + J.to_string() + "]";
          line.lhs = to_string(c);
          line.rhs = expected > 0 ? "positive" : "negative";
          line.pass = sign(c) == expected;
          return line;
        });
  }
  return checks;
}

inline std::vector<Check> build_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "main") return suite_main(cfg);
  if (name == "ahat") return suite_ahat(cfg);
  if (name == "hoffman") return suite_hoffman(cfg);
  if (name == "multiple-eta") return suite_multiple_eta(cfg);
  if (name == "positivity") return suite_positivity(cfg);
  if (name == "formal") return suite_formal(cfg);
  if (name == "oracle") return suite_oracle(cfg);
  if (name == "signs") return suite_signs(cfg);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace hirzebruch
