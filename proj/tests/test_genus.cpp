#include <hirzebruch/genus.hpp>
#include <hirzebruch/symmetric_oracle.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace hirzebruch;

namespace {

// m_I(x_1..x_n) summed over the distinct rearrangements of the exponent vector.
Rational monomial_symmetric(const IntegerPartition& I, const std::vector<Rational>& x) {
  std::vector<unsigned> exps(x.size(), 0);
  std::copy(I.parts().begin(), I.parts().end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  Rational total = 0;
  do {
    Rational t = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (unsigned e = 0; e < exps[i]; ++e) t *= x[i];
    total += t;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return total;
}

Rational power_sum(const IntegerPartition& J, const std::vector<Rational>& x) {
  Rational total = 1;
  for (unsigned j : J.parts()) {
    Rational p = 0;
    for (const auto& xi : x) {
      Rational t = 1;
      for (unsigned e = 0; e < j; ++e) t *= xi;
      p += t;
    }
    total *= p;
  }
  return total;
}

const GenusSpec& L12() {
  static const GenusSpec g = GenusSpec::L(13);
  return g;
}
const GenusSpec& Ahat12() {
  static const GenusSpec g = GenusSpec::Ahat(13);
  return g;
}

}  // namespace

TEST(GenusSpec, NormalizationEnforced) {
  EXPECT_THROW(GenusSpec("bad", PowerSeries(2, {2, 1})), std::invalid_argument);
  EXPECT_THROW(GenusSpec::builtin("X", 3), std::invalid_argument);
  EXPECT_EQ(GenusSpec::builtin("Ahat", 3).name, "Ahat");
}

TEST(LeadingCoefficients, Examples) {
  auto l = leading_coefficients(GenusSpec::L(3), 3);
  EXPECT_EQ(l[0], Rational(1, 3));
  EXPECT_EQ(l[1], Rational(7, 45));
  EXPECT_EQ(l[2], Rational(62, 945));
  auto a = leading_coefficients(GenusSpec::Ahat(2), 2);
  EXPECT_EQ(a[1], Rational(-1, 1440));
  EXPECT_THROW(leading_coefficients(GenusSpec::L(2), 3), std::invalid_argument);
}

TEST(LeadingCoefficients, NewtonMatchesClosedForms) {
  auto l = leading_coefficients(GenusSpec::L(20), 20);
  auto a = leading_coefficients(GenusSpec::Ahat(20), 20);
  for (unsigned k = 1; k <= 20; ++k) {
    EXPECT_EQ(l[k - 1], leading_coefficient_L_closed(k)) << k;
    EXPECT_EQ(a[k - 1], leading_coefficient_Ahat_closed(k)) << k;
  }
}

TEST(MonomialToPowerSum, Examples) {
  EXPECT_EQ(monomial_to_power_sum({4}), (PowerSumExpansion{{IntegerPartition{4}, Rational(1)}}));
  EXPECT_EQ(monomial_to_power_sum({1, 1}),
            (PowerSumExpansion{{IntegerPartition{1, 1}, Rational(1, 2)}, {IntegerPartition{2}, Rational(-1, 2)}}));
  EXPECT_EQ(monomial_to_power_sum({2, 1}),
            (PowerSumExpansion{{IntegerPartition{2, 1}, Rational(1)}, {IntegerPartition{3}, Rational(-1)}}));
  EXPECT_THROW(monomial_to_power_sum({13}), std::out_of_range);
}

TEST(MonomialToPowerSum, AgreesWithDefinitionAtRationalPoints) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (unsigned k = 1; k <= 5; ++k) {
    for (const auto& I : integer_partitions(k)) {
      const auto expansion = monomial_to_power_sum(I);
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rational> x(k);
        for (auto& xi : x) xi = Rational(num(rng), den(rng));
        Rational rhs = 0;
        for (const auto& [J, c] : expansion) rhs += c * power_sum(J, x);
        EXPECT_EQ(monomial_symmetric(I, x), rhs) << I.to_string();
      }
    }
  }
}

TEST(ClosedForm, LowDegreeDisplays) {
  EXPECT_EQ(coefficient_closed_form(L12(), {1, 1}), Rational(-1, 45));
  EXPECT_EQ(coefficient_closed_form(L12(), {2, 1}), Rational(-13, 945));
  EXPECT_EQ(coefficient_closed_form(Ahat12(), {1, 1, 1}), Rational(-31, 967680));
  EXPECT_THROW(coefficient_closed_form(GenusSpec::L(2), {2, 1}), std::invalid_argument);
}

TEST(Oracle, LowDegreeDisplays) {
  auto t2 = coefficient_table_oracle(L12(), 2);
  EXPECT_EQ(t2.entries.at({2}), Rational(7, 45));
  EXPECT_EQ(t2.entries.at({1, 1}), Rational(-1, 45));
  auto t1 = coefficient_table_oracle(L12(), 1);
  EXPECT_EQ(t1.entries.size(), 1u);
  EXPECT_EQ(t1.entries.at({1}), Rational(1, 3));
  auto a3 = coefficient_table_oracle(Ahat12(), 3);
  EXPECT_EQ(a3.entries.at({3}), Rational(-16, 967680));
  EXPECT_EQ(a3.entries.at({2, 1}), Rational(44, 967680));
  EXPECT_EQ(a3.entries.at({1, 1, 1}), Rational(-31, 967680));
  EXPECT_THROW(coefficient_table_oracle(L12(), 9), std::out_of_range);
  EXPECT_THROW(coefficient_table_oracle(L12(), 0), std::out_of_range);
}

TEST(Oracle, EquivalentToClosedFormUpToSix) {
  for (const GenusSpec* g : {&L12(), &Ahat12()}) {
    MultiplicativeSequence seq(*g);
    for (unsigned k = 1; k <= 6; ++k) {
      auto oracle = coefficient_table_oracle(*g, k);
      auto closed = seq.table(k);
      EXPECT_EQ(oracle.entries, closed.entries) << g->name << " k=" << k;
    }
  }
}

TEST(Oracle, CustomGenus) {
  // Q(z) = 1 + z: the total Pontryagin class, K_k = p_k.
  GenusSpec total("total", PowerSeries(4, {1, 1}));
  MultiplicativeSequence seq(total);
  for (unsigned k = 1; k <= 4; ++k) {
    auto oracle = coefficient_table_oracle(total, k);
    EXPECT_EQ(oracle.entries, seq.table(k).entries);
    for (const auto& [J, c] : oracle.entries) EXPECT_EQ(c, J == IntegerPartition{k} ? 1 : 0) << J.to_string();
  }
}

TEST(Signs, LAndAhatUpToTwelve) {
  MultiplicativeSequence l(L12()), a(Ahat12());
  for (unsigned k = 1; k <= 12; ++k)
    for (const auto& J : integer_partitions(k)) {
      const int r = static_cast<int>(J.length());
      EXPECT_EQ(sign(l.coefficient(J)), r % 2 == 1 ? 1 : -1) << "L " << J.to_string();
      EXPECT_EQ(sign(a.coefficient(J)), r % 2 == 0 ? 1 : -1) << "Ahat " << J.to_string();
    }
}

TEST(Tables, KeysAreAllPartitions) {
  MultiplicativeSequence l(L12());
  auto t = l.table(5);
  EXPECT_EQ(t.entries.size(), 7u);
  EXPECT_EQ(t.entries.begin()->first, IntegerPartition{5});
  EXPECT_EQ(l.coefficient(IntegerPartition{}), 1);
}
