#include "support.hpp"

using namespace plabic;
using namespace plabic::testing;

namespace {

/// Standard Young tableaux of a k x m rectangle by adding one box at a time.
long long count_syt(int k, int m) {
  std::map<std::vector<int>, long long> ways{{std::vector<int>(k, 0), 1}};
  for (int step = 0; step < k * m; ++step) {
    std::map<std::vector<int>, long long> next;
    for (const auto& [rows, count] : ways)
      for (int r = 0; r < k; ++r) {
        if (rows[r] == m || (r > 0 && rows[r - 1] == rows[r])) continue;
        auto grown = rows;
        ++grown[r];
        next[grown] += count;
      }
    ways = std::move(next);
  }
  return ways.empty() ? 0 : ways.begin()->second;
}

}  // namespace

TEST(MonotonePaths, SmallCounts) {
  EXPECT_EQ(monotone_paths(2, 2), 1);
  EXPECT_EQ(monotone_paths(2, 3), 2);
  EXPECT_EQ(monotone_paths(2, 4), 10);
  EXPECT_EQ(monotone_paths(2, 5), 62);
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(monotone_paths(1, n), BigInt(1) << (n - 2)) << n;
}

TEST(MonotonePaths, StatsForTwoFive) {
  const auto s = monotone_path_stats(2, 5);
  EXPECT_EQ(s.total, 62);
  EXPECT_EQ(s.longest, 6);
  EXPECT_EQ(s.longest_count, 5);
  EXPECT_EQ(s.shortest, 2);
}

TEST(MonotonePaths, Errors) {
  EXPECT_ERROR_CODE(monotone_paths(2, 11), ErrorCode::BoundExceeded);
  EXPECT_ERROR_CODE(monotone_paths(0, 5), ErrorCode::InvalidInput);
  EXPECT_ERROR_CODE(list_monotone_paths(3, 7, 10), ErrorCode::CapExceeded);
}

TEST(HookLength, Examples) {
  EXPECT_EQ(hook_length_count(2, 4), 2);
  EXPECT_EQ(hook_length_count(2, 5), 5);
  EXPECT_EQ(hook_length_count(3, 6), 42);
  EXPECT_EQ(hook_length_count(1, 7), 1);
}

TEST(MonotonePathProperties, LongestPathsAreTableaux) {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      const auto s = monotone_path_stats(k, n);
      ASSERT_EQ(s.longest, k * (n - k));
      ASSERT_EQ(s.longest_count, hook_length_count(k, n)) << k << "," << n;
      ASSERT_EQ(s.longest_count, count_syt(k, n - k)) << k << "," << n;
      ASSERT_LE(s.shortest, s.longest);
    }
}

TEST(MonotonePathProperties, EnumerationAgreesWithCounts) {
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{1, 5}, {2, 4}, {2, 5}, {3, 5}, {2, 6}, {3, 6}}) {
    const auto paths = list_monotone_paths(k, n);
    const auto s = monotone_path_stats(k, n);
    ASSERT_EQ(BigInt(paths.size()), s.total);
    std::set<std::vector<Subset>> distinct(paths.begin(), paths.end());
    ASSERT_EQ(distinct.size(), paths.size());
    int shortest = 1 << 20, longest = 0;
    BigInt at_longest = 0;
    for (const auto& p : paths) {
      ASSERT_EQ(p.front(), Subset::full(k));
      ASSERT_EQ(p.back(), Subset::full(n) - Subset::full(n - k));
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const Subset out = p[i] - p[i + 1], in = p[i + 1] - p[i];
        ASSERT_EQ(out.size(), 1);
        ASSERT_EQ(in.size(), 1);
        ASSERT_LT(out.elements().front(), in.elements().front());
      }
      const int length = static_cast<int>(p.size()) - 1;
      shortest = std::min(shortest, length);
      longest = std::max(longest, length);
    }
    for (const auto& p : paths) at_longest += static_cast<int>(p.size()) - 1 == longest ? 1 : 0;
    ASSERT_EQ(shortest, s.shortest);
    ASSERT_EQ(longest, s.longest);
    ASSERT_EQ(at_longest, s.longest_count);
  }
}
