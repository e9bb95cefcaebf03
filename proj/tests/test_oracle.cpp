#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <vector>

#include "test_support.hpp"

using namespace cintervals;
using testing_support::running_s;
using testing_support::running_t;
using testing_support::seq;

TEST(Oracle, RunningPairHasSingleMaximalPairForOneToFour) {
  const auto all = oracle::naive_common(running_t(), running_s());
  const oracle::Match want{{4, 9}, {3, 7}, 4};
  EXPECT_EQ(std::count(all.begin(), all.end(), want), 1);
  std::size_t size4 = 0;
  for (const auto& m : all) size4 += m.size == 4;
  EXPECT_EQ(size4, 1u);
}

TEST(Oracle, SingleSymbolSequences) {
  const auto a = seq({1});
  EXPECT_EQ(oracle::naive_common(a, a, 1).size(), 1u);
  EXPECT_TRUE(oracle::naive_common(a, a, 2).empty());
}

TEST(Oracle, CapIsEnforced) {
  std::vector<Symbol> long_codes(201, 1);
  const auto t = seq(long_codes);
  EXPECT_THROW(oracle::naive_common(t, seq({1}), 2), std::invalid_argument);
  EXPECT_NO_THROW(oracle::naive_common(t, seq({1}), 2, 300));
}

TEST(Oracle, OutputIsSortedAndUnique) {
  const auto all = oracle::naive_common(running_t(), running_s(), 1);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
}

TEST(Oracle, MaximalAndMaxminLocationsAreInBijection) {
  std::mt19937_64 rng(51);
  for (int round = 0; round < 300; ++round) {
    const auto t = Sequence(testing_support::random_codes(rng, 1 + rng() % 40, 1 + rng() % 8), 8);
    const auto locs = oracle::naive_locations(t);
    ASSERT_EQ(locs.maximal.size(), locs.maxmin.size());
    for (const auto& [set, maximal] : locs.maximal) {
      std::vector<Location> shrunk;
      for (const auto& l : maximal) shrunk.push_back(oracle::naive_shrink(t, l));
      std::sort(shrunk.begin(), shrunk.end());
      auto maxmin = locs.maxmin.at(set);
      std::sort(maxmin.begin(), maxmin.end());
      ASSERT_EQ(shrunk, maxmin);
    }
  }
}

TEST(Oracle, DominationOfRunningExample) {
  const auto d = oracle::naive_domination(running_t());
  EXPECT_EQ(d.dominating, (std::vector<Pos>{1, 4, 7}));
  EXPECT_EQ(d.owner[6], 1u);
  EXPECT_TRUE(oracle::is_contiguous_in(oracle::naive_order_positions(running_t(), 6),
                                       oracle::naive_order_positions(running_t(), 4)));
}

TEST(Oracle, DominationOfIdentity) {
  EXPECT_EQ(oracle::naive_domination(seq({1, 2, 3, 4, 5})).dominating, (std::vector<Pos>{1}));
}

TEST(Oracle, ValidCommonOfIdentityIsEveryRange) {
  const Pos m = 5;
  std::vector<Pos> pi{0, 1, 2, 3, 4, 5}, full(m + 1, m);
  full[0] = 0;
  EXPECT_EQ(oracle::naive_valid_common(pi, full, full).size(), m * (m - 1) / 2);
}

TEST(Oracle, GoldenFileMatches) {
  const auto golden = read_golden_file(std::string(CINTERVALS_DATA_DIR) + "/running_golden.tsv");
  std::vector<GoldenRow> naive;
  for (const auto& m : oracle::naive_common(running_t(), running_s(), 2)) {
    naive.push_back({m.t, m.s, m.size});
  }
  EXPECT_EQ(golden, naive);
  std::ifstream in(std::string(CINTERVALS_DATA_DIR) + "/running_golden.tsv");
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, std::string("# oracle ") + oracle::kVersion);
}
