#include "polyb/pistols.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <set>

#include "polyb/polybernoulli.hpp"

using polyb::Exponent;
using polyb::MultiPoly;
using polyb::Pistol;
using polyb::PistolStats;

namespace {

// Every map {1..n} -> {2,4,..,n}, filtered by the pistol conditions.
std::vector<std::vector<unsigned>> brute_force_pistols(unsigned n) {
  const unsigned choices = n / 2;
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> digits(n, 0);
  while (true) {
    std::vector<unsigned> t(n);
    for (unsigned i = 0; i < n; ++i) t[i] = 2 * (digits[i] + 1);
    bool ok = true;
    for (unsigned i = 0; i < n && ok; ++i) ok = t[i] >= i + 1;
    for (unsigned v = 2; v <= n && ok; v += 2) ok = std::find(t.begin(), t.end(), v) != t.end();
    if (ok) out.push_back(t);
    unsigned i = n;
    while (i > 0 && ++digits[i - 1] == choices) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;  // odometer order is already lexicographic
}

}  // namespace

TEST(Pistols, CountsForSmallSizes) {
  EXPECT_EQ(polyb::enumerate_pistols(2).size(), 1u);
  EXPECT_EQ(polyb::enumerate_pistols(4).size(), 3u);
  EXPECT_EQ(polyb::enumerate_pistols(6).size(), 17u);
  EXPECT_EQ(polyb::enumerate_pistols(2).front(), Pistol({2, 2}));
}

TEST(Pistols, BacktrackingMatchesBruteForceInOrder) {
  for (unsigned n = 2; n <= 8; n += 2) {
    const auto expected = brute_force_pistols(n);
    const auto pistols = polyb::enumerate_pistols(n);
    ASSERT_EQ(pistols.size(), expected.size()) << n;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_TRUE(std::ranges::equal(pistols[i].targets(), expected[i])) << n << " #" << i;
    }
  }
}

TEST(Pistols, CountsAreGenocchiNumbers) {
  const std::array<long, 5> expected{1, 3, 17, 155, 2073};
  for (unsigned i = 0; i < expected.size(); ++i) {
    const unsigned n = 2 * (i + 1);
    EXPECT_EQ(polyb::count_pistols(n), expected[i]);
    EXPECT_EQ(polyb::count_pistols(n), polyb::genocchi(n));
  }
  EXPECT_EQ(polyb::count_pistols(12), polyb::genocchi(12));
}

TEST(Pistols, WorkedExampleStats) {
  const Pistol p({2, 4, 6, 4, 6, 6});
  EXPECT_EQ(polyb::pistol_stats(p), (PistolStats{3, 2, 2}));
  EXPECT_EQ(polyb::pistol_stats(Pistol({2, 2})), (PistolStats{1, 1, 1}));
}

TEST(Pistols, SizeFourStatsMultiset) {
  std::multiset<PistolStats> stats;
  for (const auto& p : polyb::enumerate_pistols(4)) stats.insert(polyb::pistol_stats(p));
  const std::multiset<PistolStats> expected{{2, 2, 1}, {2, 1, 2}, {1, 2, 2}};
  EXPECT_EQ(stats, expected);
}

TEST(Pistols, StatsAreAtLeastOne) {
  for (const auto& p : polyb::enumerate_pistols(8)) {
    const auto s = polyb::pistol_stats(p);
    EXPECT_GE(s.bulging, 1u);
    EXPECT_GE(s.fixed, 1u);
    EXPECT_GE(s.maximal, 1u);
    EXPECT_EQ(p(8), 8u);
    EXPECT_EQ(p(7), 8u);
  }
}


TEST(Pistols, ValidityChecks) {
  EXPECT_TRUE(polyb::is_pistol(std::vector<unsigned>{2, 4, 4, 4}));
  EXPECT_FALSE(polyb::is_pistol(std::vector<unsigned>{4, 4, 4, 4}));  // 2 never hit
  EXPECT_FALSE(polyb::is_pistol(std::vector<unsigned>{2, 2, 2, 4}));  // p(3) < 3
  EXPECT_FALSE(polyb::is_pistol(std::vector<unsigned>{2, 3, 4, 4}));  // odd target
  EXPECT_FALSE(polyb::is_pistol(std::vector<unsigned>{2, 2, 2}));     // odd size
  EXPECT_FALSE(polyb::is_pistol(std::vector<unsigned>{}));
  EXPECT_THROW(Pistol({4, 4, 4, 4}), polyb::DomainError);
}

TEST(Pistols, RejectsOddAndOversizedRequests) {
  EXPECT_THROW(polyb::enumerate_pistols(5), polyb::DomainError);
  EXPECT_THROW(polyb::enumerate_pistols(0), polyb::DomainError);
  EXPECT_THROW(polyb::enumerate_pistols(16), polyb::ResourceError);
  EXPECT_THROW(polyb::count_pistols(10, 8), polyb::ResourceError);
}

TEST(DumontFoataEnumeration, SmallCases) {
  EXPECT_EQ(polyb::dumont_foata_by_enumeration(0), MultiPoly::constant(1));
  EXPECT_EQ(polyb::dumont_foata_by_enumeration(2), MultiPoly::monomial(1, {1, 1, 1}));
  MultiPoly g4;
  g4.add_term({2, 2, 1}, 1);
  g4.add_term({2, 1, 2}, 1);
  g4.add_term({1, 2, 2}, 1);
  EXPECT_EQ(polyb::dumont_foata_by_enumeration(4), g4);
}

TEST(DumontFoataEnumeration, SymmetricAndDivisibleByXyz) {
  const std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (unsigned n = 2; n <= 12; n += 2) {
    const auto g = polyb::dumont_foata_by_enumeration(n);
    for (const auto& perm : perms) EXPECT_EQ(polyb::mp_permute(g, perm), g) << n;
    EXPECT_TRUE(polyb::mp_divisible_by_monomial(g, Exponent{1, 1, 1})) << n;
  }
}

TEST(DumontFoataEnumeration, TotalDegreeIsNPlusOne) {
  for (unsigned n = 2; n <= 12; n += 2) {
    EXPECT_EQ(polyb::dumont_foata_by_enumeration(n).total_degree(), n + 1) << n;
  }
}
