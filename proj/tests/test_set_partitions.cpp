#include <hirzebruch/integer_partition.hpp>
#include <hirzebruch/set_partition.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace hirzebruch;

namespace {
SetPartition sp(std::vector<std::vector<unsigned>> blocks) { return SetPartition::from_blocks(blocks); }

// Brute force: all block assignments of r elements into r labels, canonicalized.
std::set<SetPartition> brute_force_partitions(unsigned r) {
  std::set<SetPartition> out;
  std::vector<int> labels(r, 0);
  while (true) {
    out.insert(SetPartition::canonical(labels));
    unsigned i = 0;
    while (i < r && labels[i] == static_cast<int>(r) - 1) labels[i++] = 0;
    if (i == r) break;
    ++labels[i];
  }
  return out;
}

// pi <= rho iff every pi-block lies inside one rho-block, by direct inspection.
bool refines(const SetPartition& pi, const SetPartition& rho) {
  for (unsigned a = 0; a < pi.size(); ++a)
    for (unsigned b = 0; b < pi.size(); ++b)
      if (pi.block_of(a) == pi.block_of(b) && rho.block_of(a) != rho.block_of(b)) return false;
  return true;
}
}  // namespace

TEST(SetPartitions, Counts) {
  EXPECT_EQ(enumerate_set_partitions(1).size(), 1u);
  EXPECT_EQ(enumerate_set_partitions(3).size(), 5u);
  EXPECT_EQ(enumerate_set_partitions(4).size(), 15u);
  for (unsigned r = 1; r <= 7; ++r) {
    auto all = enumerate_set_partitions(r);
    EXPECT_EQ(Integer(all.size()), bell(r));
    std::set<SetPartition> uniq(all.begin(), all.end());
    EXPECT_EQ(uniq.size(), all.size());
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end())) << "lexicographic RGS order";
    EXPECT_EQ(uniq, brute_force_partitions(r));
  }
}

TEST(SetPartitions, GuardRange) {
  EXPECT_THROW(enumerate_set_partitions(0), std::out_of_range);
  EXPECT_THROW(enumerate_set_partitions(13), std::out_of_range);
}

TEST(SetPartitions, InvalidConstruction) {
  EXPECT_THROW(SetPartition({0, 2}), std::invalid_argument);
  EXPECT_THROW(sp({{1, 2}, {2}}), std::invalid_argument);
  EXPECT_THROW(sp({{1}, {}}), std::invalid_argument);
}

TEST(SetPartitions, Blocks) {
  auto p = sp({{3}, {1, 2}});
  EXPECT_EQ(p.to_string(), "{{1,2},{3}}");
  EXPECT_EQ(p.length(), 2u);
}

TEST(Refinement, Examples) {
  auto pi = SetPartition::finest(3);
  EXPECT_EQ(refinement_leq(pi, pi), SetPartition::finest(3));
  EXPECT_EQ(refinement_leq(pi, sp({{1, 2}, {3}})), sp({{1, 2}, {3}}));
  EXPECT_FALSE(refinement_leq(sp({{1, 2}, {3}}), sp({{1, 3}, {2}})).has_value());
  EXPECT_THROW(refinement_leq(SetPartition::finest(2), SetPartition::finest(3)), std::invalid_argument);
}

TEST(Refinement, WitnessReconstructsRho) {
  for (unsigned n = 1; n <= 5; ++n) {
    auto all = enumerate_set_partitions(n);
    for (const auto& pi : all)
      for (const auto& rho : all) {
        auto w = refinement_leq(pi, rho);
        EXPECT_EQ(w.has_value(), refines(pi, rho));
        if (w) EXPECT_EQ(coarsen(pi, *w), rho);
      }
  }
}

TEST(Refinement, PartialOrder) {
  for (unsigned n = 1; n <= 5; ++n) {
    auto all = enumerate_set_partitions(n);
    for (const auto& a : all) {
      EXPECT_TRUE(refinement_leq(a, a));
      for (const auto& b : all) {
        if (a != b && refinement_leq(a, b)) {
          EXPECT_FALSE(refinement_leq(b, a));
        }
        if (!refinement_leq(a, b)) continue;
        for (const auto& c : all)
          if (refinement_leq(b, c)) EXPECT_TRUE(refinement_leq(a, c));
      }
    }
  }
}

TEST(Refinement, CoarseningsAreTheUpperInterval) {
  for (unsigned n = 1; n <= 5; ++n)
    for (const auto& pi : enumerate_set_partitions(n)) {
      std::set<SetPartition> up;
      for (const auto& rho : enumerate_set_partitions(n))
        if (refines(pi, rho)) up.insert(rho);
      auto c = coarsenings(pi);
      EXPECT_EQ(std::set<SetPartition>(c.begin(), c.end()), up);
      EXPECT_EQ(up.size(), c.size());
    }
}

TEST(Mobius, Examples) {
  auto p = sp({{1, 2}, {3}});
  EXPECT_EQ(mobius(p, p), 1);
  EXPECT_EQ(mobius(SetPartition::finest(3), SetPartition::coarsest(3)), 2);
  EXPECT_EQ(mobius(SetPartition::finest(2), SetPartition::coarsest(2)), -1);
  EXPECT_THROW(mobius(sp({{1, 2}, {3}}), sp({{1, 3}, {2}})), std::invalid_argument);
}

TEST(Mobius, InversionSanity) {
  // sum_{pi <= rho <= sigma} mu(rho, sigma) = [pi == sigma]
  for (unsigned n = 1; n <= 7; ++n) {
    auto all = enumerate_set_partitions(n);
    for (const auto& sigma : all) {
      std::vector<SetPartition> below;
      for (const auto& x : all)
        if (refinement_leq(x, sigma)) below.push_back(x);
      for (const auto& pi : below) {
        std::int64_t sum = 0;
        for (const auto& rho : below)
          if (refinement_leq(pi, rho)) sum += mobius(rho, sigma);
        EXPECT_EQ(sum, pi == sigma ? 1 : 0);
      }
    }
  }
}

TEST(Stirling, Values) {
  EXPECT_EQ(stirling2(5, 1), 1);
  EXPECT_EQ(stirling2(3, 2), 3);
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_THROW(stirling2(3, 4), std::invalid_argument);
  EXPECT_THROW(stirling2(3, 0), std::invalid_argument);
}

TEST(Stirling, MatchesEnumerationByLength) {
  for (unsigned n = 1; n <= 9; ++n) {
    std::vector<Integer> by_len(n + 1, 0);
    for_each_set_partition_rgs(n, [&](const std::vector<std::uint8_t>&, unsigned len) { ++by_len[len]; });
    Integer total = 0;
    for (unsigned k = 1; k <= n; ++k) {
      EXPECT_EQ(stirling2(n, k), by_len[k]) << n << "," << k;
      total += stirling2(n, k);
    }
    EXPECT_EQ(total, bell(n));
  }
}

TEST(LengthSum, BothRoutes) {
  EXPECT_EQ(length_sum(1), -1);
  EXPECT_EQ(length_sum(3), -1);
  EXPECT_EQ(length_sum(6), 1);
  for (unsigned n = 1; n <= 9; ++n) {
    const std::int64_t expected = n % 2 == 0 ? 1 : -1;
    EXPECT_EQ(length_sum(n), expected);
    EXPECT_EQ(length_sum_over_coarsenings(SetPartition::finest(n)), expected);
  }
  // General pi: the interval above pi is a partition lattice on l(pi) points.
  for (const auto& pi : enumerate_set_partitions(5))
    EXPECT_EQ(length_sum_over_coarsenings(pi), pi.length() % 2 == 0 ? 1 : -1);
  EXPECT_THROW(length_sum(0), std::out_of_range);
  EXPECT_THROW(length_sum(10), std::out_of_range);
}

TEST(IntegerPartitions, OrderAndMultiplicities) {
  auto p3 = integer_partitions(3);
  ASSERT_EQ(p3.size(), 3u);
  EXPECT_EQ(p3[0], IntegerPartition({3}));
  EXPECT_EQ(p3[1], IntegerPartition({2, 1}));
  EXPECT_EQ(p3[2], IntegerPartition({1, 1, 1}));
  EXPECT_EQ(integer_partitions(12).size(), 77u);
  IntegerPartition j{3, 3, 1, 1, 1};
  EXPECT_EQ(j.weight(), 9u);
  EXPECT_EQ(j.multiplicity(1), 3u);
  EXPECT_EQ(j.multiplicity_factorial(), 12);
  for (unsigned k = 1; k <= 10; ++k)
    for (const auto& J : integer_partitions(k)) {
      unsigned w = 0, r = 0;
      for (unsigned l = 1; l <= k; ++l) {
        w += l * J.multiplicity(l);
        r += J.multiplicity(l);
      }
      EXPECT_EQ(w, k);
      EXPECT_EQ(r, J.length());
    }
}

TEST(IntegerPartitions, Parse) {
  EXPECT_EQ(IntegerPartition::parse("2,1"), IntegerPartition({2, 1}));
  EXPECT_EQ(IntegerPartition::parse("1,2"), IntegerPartition({2, 1}));
  EXPECT_EQ(IntegerPartition::parse("3+1+1").to_string(), "3+1+1");
  EXPECT_THROW(IntegerPartition::parse("2,,1"), std::invalid_argument);
  EXPECT_THROW(IntegerPartition::parse("0"), std::invalid_argument);
  EXPECT_THROW(IntegerPartition::parse("a"), std::invalid_argument);
  EXPECT_THROW(IntegerPartition::parse(""), std::invalid_argument);
  EXPECT_THROW(IntegerPartition({1, 2}), std::invalid_argument);
}
