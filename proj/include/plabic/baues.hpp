#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "plabic/error.hpp"
#include "plabic/rational.hpp"
#include "plabic/subset.hpp"

namespace plabic {

inline constexpr int kMonotonePathBound = 10;

/// Path data over the graph on k-subsets of [n] with I -> (I - i) + j for
/// i in I, j not in I, i < j, from [1,k] to [n-k+1,n].
struct MonotonePathStats {
  BigInt total = 0;
  int shortest = 0;
  int longest = 0;
  BigInt longest_count = 0;
};

namespace detail {

inline void check_path_type(int k, int n, int bound) {
  require(n <= bound, ErrorCode::BoundExceeded,
          "n = " + std::to_string(n) + " exceeds the bound " + std::to_string(bound));
  require(1 <= k && k <= n, ErrorCode::InvalidInput, "monotone paths need 1 <= k <= n");
}

/// Successors of I in the monotone-path graph.
inline std::vector<Subset> monotone_steps(Subset I, int n) {
  std::vector<Subset> out;
  for (int i : I.elements())
    for (int j = i + 1; j <= n; ++j)
      if (!I.contains(j)) out.push_back(I.without(i).with(j));
  return out;
}

}  // namespace detail

/// Counts by dynamic programming in decreasing order of element sum, which
/// strictly increases along every step. For k = n the single trivial path.
inline MonotonePathStats monotone_path_stats(int k, int n, int bound = kMonotonePathBound) {
  detail::check_path_type(k, n, bound);
  const Subset target = Subset::full(n) - Subset::full(n - k);
  struct Entry {
    BigInt total;
    int shortest;
    int longest;
    BigInt longest_count;
  };
  std::map<Subset, Entry> memo;
  auto subsets = k_subsets(k, n);
  auto weight = [](Subset s) {
    int w = 0;
    for (int x : s.elements()) w += x;
    return w;
  };
  std::sort(subsets.begin(), subsets.end(), [&](Subset a, Subset b) { return weight(a) > weight(b); });
  for (Subset I : subsets) {
    if (I == target) {
      memo[I] = {1, 0, 0, 1};
      continue;
    }
    Entry e{0, -1, -1, 0};
    for (Subset J : detail::monotone_steps(I, n)) {
      const Entry& next = memo.at(J);
      if (next.total == 0) continue;
      e.total += next.total;
      if (e.shortest < 0 || next.shortest + 1 < e.shortest) e.shortest = next.shortest + 1;
      if (next.longest + 1 > e.longest) {
        e.longest = next.longest + 1;
        e.longest_count = next.longest_count;
      } else if (next.longest + 1 == e.longest) {
        e.longest_count += next.longest_count;
      }
    }
    memo[I] = e;
  }
  const Entry& start = memo.at(Subset::full(k));
  return {start.total, start.shortest, start.longest, start.longest_count};
}

inline BigInt monotone_paths(int k, int n, int bound = kMonotonePathBound) {
  return monotone_path_stats(k, n, bound).total;
}

/// Number of monotone paths of maximal length k(n-k).
inline BigInt longest_monotone_paths(int k, int n, int bound = kMonotonePathBound) {
  return monotone_path_stats(k, n, bound).longest_count;
}

/// Standard Young tableaux of the k x (n-k) rectangle by the hook-length
/// formula: (k(n-k))! * prod_{i=0}^{n-k-1} i! / (k+i)!.
inline BigInt hook_length_count(int k, int n) {
  require(0 <= k && k <= n, ErrorCode::InvalidInput, "need 0 <= k <= n");
  auto factorial = [](int m) {
    BigInt f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  Rational value = Rational(factorial(k * (n - k)));
  for (int i = 0; i <= n - k - 1; ++i) value *= Rational(factorial(i), factorial(k + i));
  require(boost::multiprecision::denominator(value) == 1, ErrorCode::InvalidInput, "hook-length product not integral");
  return boost::multiprecision::numerator(value);
}

/// Explicit list of all monotone paths as subset sequences; throws
/// CapExceeded past `cap` paths.
inline std::vector<std::vector<Subset>> list_monotone_paths(int k, int n, std::size_t cap = 100000,
                                                            int bound = kMonotonePathBound) {
  detail::check_path_type(k, n, bound);
  const Subset target = Subset::full(n) - Subset::full(n - k);
  std::vector<std::vector<Subset>> out;
  std::vector<Subset> path{Subset::full(k)};
  std::function<void()> walk = [&]() {
    if (path.back() == target) {
      require(out.size() < cap, ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " monotone paths");
      out.push_back(path);
      return;
    }
    for (Subset J : detail::monotone_steps(path.back(), n)) {
      path.push_back(J);
      walk();
      path.pop_back();
    }
  };
  walk();
  return out;
}

}  // namespace plabic
