#include "hirzebruch/hirzebruch.hpp"
#include "table_io.hpp"

#include <gtest/gtest.h>

using namespace hirzebruch;

namespace {

CoefficientTable table_of(const std::string& genus, unsigned k) {
  return MultiplicativeSequence(GenusSpec::builtin(genus, std::max(k, 1u))).table(k);
}

}  // namespace

TEST(RenderText, MatchesFactoredDisplays) {
  EXPECT_EQ(render_text(table_of("L", 0)), "1");
  EXPECT_EQ(render_text(table_of("L", 1)), "(1/3)*p1");
  EXPECT_EQ(render_text(table_of("L", 2)), "(7*p2 - p1^2)/45");
  EXPECT_EQ(render_text(table_of("L", 3)), "(62*p3 - 13*p2*p1 + 2*p1^3)/945");
  EXPECT_EQ(render_text(table_of("Ahat", 1)), "-(1/24)*p1");
  EXPECT_EQ(render_text(table_of("Ahat", 2)), "(-4*p2 + 7*p1^2)/5760");
  EXPECT_EQ(render_text(table_of("Ahat", 3)), "(-16*p3 + 44*p2*p1 - 31*p1^3)/967680");
}

TEST(RenderText, IntegerAndUnitCoefficients) {
  CoefficientTable t;
  t.degree = 2;
  t.entries.emplace(IntegerPartition({2}), Rational(3));
  t.entries.emplace(IntegerPartition({1, 1}), Rational(-1));
  EXPECT_EQ(render_text(t), "3*p2 - p1^2");
  EXPECT_EQ(render_latex(t), "3 p_{2} - p_{1}^{2}");
  t.entries.erase(IntegerPartition({2}));
  EXPECT_EQ(render_text(t), "-p1^2");
  EXPECT_EQ(render_latex(t), "-p_{1}^{2}");
}

TEST(RenderLatex, MatchesFactoredDisplays) {
  EXPECT_EQ(render_latex(table_of("L", 2)), "\\frac{1}{45}\\left(7 p_{2} - p_{1}^{2}\\right)");
  EXPECT_EQ(render_latex(table_of("Ahat", 1)), "-\\frac{1}{24} p_{1}");
  EXPECT_EQ(render_latex(table_of("Ahat", 3)),
            "\\frac{1}{967680}\\left(-16 p_{3} + 44 p_{2} p_{1} - 31 p_{1}^{3}\\right)");
}

TEST(TableIo, RationalJsonIsDecimalStrings) {
  const Rational q(-31, 967680);
  const auto j = io::rational_json(q);
  EXPECT_EQ(j.dump(), R"({"den":"967680","num":"-31"})");
  EXPECT_EQ(io::rational_from_json(j), q);
  EXPECT_EQ(io::rational_from_json(io::json("7/45")), Rational(7, 45));
  EXPECT_THROW(io::rational_from_json(io::json(0.5)), std::invalid_argument);
  EXPECT_THROW(io::rational_from_json(io::json{{"num", "1"}, {"den", "0"}}), std::invalid_argument);
}

TEST(TableIo, JsonAndCsvRoundTripExactly) {
  MultiplicativeSequence seq(GenusSpec::Ahat(10));
  std::vector<CoefficientTable> tables;
  for (unsigned k = 1; k <= 10; ++k) tables.push_back(seq.table(k));
  const auto from_json = io::tables_from_json(io::json::parse(io::tables_json("Ahat", tables).dump(2)));
  const auto from_csv = io::tables_from_csv(io::tables_csv(tables));
  ASSERT_EQ(from_json.size(), tables.size());
  ASSERT_EQ(from_csv.size(), tables.size());
  for (std::size_t i = 0; i < tables.size(); ++i) {
    EXPECT_EQ(from_json[i].entries, tables[i].entries);
    EXPECT_EQ(from_csv[i].entries, tables[i].entries);
  }
}

TEST(TableIo, CsvRows) {
  std::vector<CoefficientTable> tables{table_of("L", 1), table_of("L", 2)};
  EXPECT_EQ(io::tables_csv(tables),
            "k,partition,coefficient_num,coefficient_den,sign,r\n"
            "1,1,1,3,+,1\n"
            "2,2,7,45,+,1\n"
            "2,1+1,-1,45,-,2\n");
}

TEST(TableIo, Fnv1a) {
  EXPECT_EQ(io::fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(io::fnv1a_hex("a"), "af63dc4c8601ec8c");
}
