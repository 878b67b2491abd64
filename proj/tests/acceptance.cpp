// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Tolerances and time limits are fixed here and are not configurable.

#include "hirzebruch/hirzebruch.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

using namespace hirzebruch;

namespace {

constexpr double kNumericTol = 1e-6;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome suite_outcome(const std::vector<CheckLine>& lines) {
  Outcome o;
  std::size_t passed = 0;
  for (const auto& l : lines) {
    if (l.pass) ++passed;
    else o.fail(l.format() + (l.message.empty() ? "" : " (" + l.message + ")"));
  }
  if (o.pass) o.detail = std::to_string(passed) + "/" + std::to_string(lines.size()) + " checks";
  return o;
}

Outcome exact_tables() {
  Outcome o;
  using T = std::vector<std::pair<const char*, Rational>>;
  const std::vector<std::pair<const char*, T>> L{
      {"1", {{"1", Rational(1, 3)}}},
      {"2", {{"2", Rational(7, 45)}, {"1,1", Rational(-1, 45)}}},
      {"3", {{"3", Rational(62, 945)}, {"2,1", Rational(-13, 945)}, {"1,1,1", Rational(2, 945)}}},
  };
  const std::vector<std::pair<const char*, T>> A{
      {"1", {{"1", Rational(-1, 24)}}},
      {"2", {{"2", Rational(-4, 5760)}, {"1,1", Rational(7, 5760)}}},
      {"3", {{"3", Rational(-16, 967680)}, {"2,1", Rational(44, 967680)}, {"1,1,1", Rational(-31, 967680)}}},
  };
  std::size_t n = 0;
  for (const auto& [name, expected] : {std::pair{"L", &L}, std::pair{"Ahat", &A}}) {
    const MultiplicativeSequence seq(GenusSpec::builtin(name, 3));
    for (const auto& [k, terms] : *expected) {
      const CoefficientTable t = seq.table(static_cast<unsigned>(std::stoul(k)));
      if (t.entries.size() != terms.size()) o.fail(std::string(name) + "_" + k + " has the wrong number of terms");
      for (const auto& [J, c] : terms) {
        const Rational got = t.entries.at(IntegerPartition::parse(J));
        if (got != c) o.fail(std::string(name) + "[" + J + "] = " + to_string(got) + ", expected " + to_string(c));
        ++n;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " coefficients";
  return o;
}

Outcome oracle_equivalence() {
  SuiteConfig cfg;
  cfg.max_k = kMaxOracleDegree;
  return suite_outcome(run_checks(suite_oracle(cfg), 1));
}

Outcome leading_coefficients_closed() {
  Outcome o;
  const auto L = leading_coefficients(GenusSpec::L(20), 20);
  const auto A = leading_coefficients(GenusSpec::Ahat(20), 20);
  unsigned unsigned_mismatches = 0;
  for (unsigned k = 1; k <= 20; ++k) {
    if (L[k - 1] != leading_coefficient_L_closed(k)) o.fail("L leading coefficient differs at k=" + std::to_string(k));
    // a_k = (-1)^k B_{2k} / (2 (2k)!) with the signed Bernoulli number B_{2k}
    const Rational signed_form =
        Rational(k % 2 == 0 ? 1 : -1) * bernoulli_standard(2 * k) / Rational(2 * factorial(2 * k));
    if (A[k - 1] != signed_form) o.fail("Ahat leading coefficient differs at k=" + std::to_string(k));
    const Rational unsigned_form = Rational(k % 2 == 0 ? 1 : -1) * bernoulli(k) / Rational(2 * factorial(2 * k));
    if (A[k - 1] != unsigned_form) ++unsigned_mismatches;
    const double zeta_form = -zeta_even_exact(k).to_double() / std::pow(2 * kPi, 2.0 * k);
    if (std::abs(to_double(A[k - 1]) - zeta_form) > 1e-12 * std::abs(zeta_form))
      o.fail("Ahat leading coefficient disagrees with -zeta(2k)/(2pi)^2k at k=" + std::to_string(k));
  }
  if (o.pass)
    o.detail = "k <= 20, both genera; Ahat uses signed B_2k (the unsigned |B_2k| reading disagrees at " +
               std::to_string(unsigned_mismatches) + " even k)";
  return o;
}

Outcome signs() {
  SuiteConfig cfg;
  cfg.max_k = 12;
  return suite_outcome(run_checks(suite_signs(cfg), 1));
}

Outcome l_numeric() {
  SuiteConfig cfg;
  cfg.max_k = 4;
  cfg.eval.target_tol = kNumericTol;
  return suite_outcome(run_checks(suite_main(cfg), 1));
}

Outcome ahat_numeric() {
  SuiteConfig cfg;
  cfg.max_k = 4;
  cfg.eval.target_tol = kNumericTol;
  return suite_outcome(run_checks(suite_ahat(cfg), 1));
}

Outcome hoffman_identities() {
  SuiteConfig cfg;
  cfg.max_r = 3;
  cfg.samples = 20;
  cfg.eval.target_tol = kNumericTol;
  auto checks = suite_hoffman(cfg);
  for (auto& c : suite_multiple_eta(cfg)) checks.push_back(std::move(c));
  return suite_outcome(run_checks(checks, 1));
}

Outcome positivity() {
  SuiteConfig cfg;
  cfg.max_r = 3;
  cfg.samples = 100;
  cfg.eval.target_tol = kNumericTol;
  return suite_outcome(run_checks(suite_positivity(cfg), 1));
}

Outcome formal_identities() {
  SuiteConfig cfg;
  cfg.max_r = 3;
  cfg.level_cap = 4;
  return suite_outcome(run_checks(suite_formal(cfg), 1));
}

Outcome spot_values() {
  Outcome o;
  auto expect = [&](const char* name, double got, double want) {
    if (std::abs(got - want) > kNumericTol * std::abs(want))
      o.fail(std::string(name) + " = " + CheckLine::num(got) + ", expected " + CheckLine::num(want));
  };
  const double pi2 = kPi * kPi, pi4 = pi2 * pi2;
  const double two[] = {2.0, 2.0};
  expect("zeta(2)", zeta(2.0).value, pi2 / 6);
  expect("zeta*(2)", zeta_star(2.0).value, pi2 / 12);
  expect("zeta(2,2)", mzv_strict(two).value, pi4 / 120);
  expect("S(2,2)", mzv_star(two).value, 7 * pi4 / 360);
  expect("T(2,2)", t_series(two).value, -pi4 / 720);
  if (o.pass) o.detail = "5 values";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"exact L_1..L_3 and Ahat_1..Ahat_3 tables", 1, exact_tables},
      {"closed formula equals symmetric-function oracle, k <= 8", 120, oracle_equivalence},
      {"Newton leading coefficients equal closed forms, k <= 20", 0, leading_coefficients_closed},
      {"coefficient signs (-1)^(r-1) for L and (-1)^r for Ahat, k <= 12", 120, signs},
      {"L coefficients from symmetrized T-sums, k <= 4, rel 1e-6", 60, l_numeric},
      {"Ahat coefficients from symmetrized S-sums, k <= 4, rel 1e-6", 0, ahat_numeric},
      {"symmetric MZV and multiple-eta product identities, r <= 3, 20 tuples", 0, hoffman_identities},
      {"T < 0, T_2k > 0 on 100 tuples and both recurrences on 10 tuples", 0, positivity},
      {"formal p/m/T identities for n <= 3, N = 4 and alternating length sum, n <= 9", 60, formal_identities},
      {"known values of zeta, zeta*, zeta(2,2), S(2,2), T(2,2)", 0, spot_values},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds)
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    failures += !o.pass;
    std::printf("%s criterion %2zu: %s (%.2f s) [%s]\n", o.pass ? "PASS" : "FAIL", i + 1, c.label, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
