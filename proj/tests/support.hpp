#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "plabic/plabic.hpp"

namespace plabic::testing {

#define EXPECT_ERROR_CODE(statement, expected)                       \
  do {                                                               \
    try {                                                            \
      statement;                                                     \
      ADD_FAILURE() << "expected " << to_string(expected);           \
    } catch (const ::plabic::Error& e) {                             \
      EXPECT_EQ(e.code(), expected) << e.what();                     \
    }                                                                \
  } while (0)

/// One internal vertex of type (h, n) joined to every boundary vertex.
inline GrassmannianGraph star_graph(int n, int h) {
  GrassmannianGraph g(n);
  const int v = g.add_vertex(h);
  for (int i = 1; i <= n; ++i) g.add_edge(g.boundary_vertex(i), v);
  return g;
}

/// Boundary leaves only: b_i joined to a lollipop of helicity colors[i-1].
inline GrassmannianGraph lollipops(const std::vector<int>& colors) {
  GrassmannianGraph g(static_cast<int>(colors.size()));
  for (int i = 1; i <= g.n(); ++i) g.add_edge(g.boundary_vertex(i), g.add_vertex(colors[i - 1]));
  return g;
}

/// b1 - u = v - b2 with a doubled edge between the trivalent u and v.
inline GrassmannianGraph parallel_pair(int hu, int hv) {
  GrassmannianGraph g(2);
  const int u = g.add_vertex(hu);
  const int v = g.add_vertex(hv);
  const int a = g.add_edge(g.boundary_vertex(1), u);
  const int b = g.add_edge(g.boundary_vertex(2), v);
  const int e1 = g.add_detached_edge(u, v);
  const int e2 = g.add_detached_edge(u, v);
  g.set_rotation(u, {2 * a + 1, 2 * e1, 2 * e2});
  g.set_rotation(v, {2 * b + 1, 2 * e2 + 1, 2 * e1 + 1});
  g.validate();
  return g;
}

/// Every orientation of every live edge, filtered by the in-degree rule.
inline std::vector<PerfectOrientation> brute_force_orientations(const GrassmannianGraph& g) {
  const auto edges = g.edges();
  EXPECT_LE(edges.size(), 24u);
  std::vector<PerfectOrientation> out;
  for (std::uint64_t mask = 0; mask < (1ull << edges.size()); ++mask) {
    PerfectOrientation o{std::vector<char>(g.edge_slots(), 0)};
    for (std::size_t b = 0; b < edges.size(); ++b) o.forward[edges[b]] = (mask >> b) & 1;
    bool ok = true;
    for (int v : g.internal_vertices()) {
      int in = 0;
      for (int h : g.rotation(v)) in += o.points_into(h) ? 1 : 0;
      if (in != g.helicity(v)) ok = false;
    }
    if (ok) out.push_back(o);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Gale order by sorted element lists in the order start, start+1, ...
inline bool brute_gale_leq(Subset a, Subset b, int start, int n) {
  auto rotated = [&](Subset s) {
    std::vector<int> r;
    for (int x : s.elements()) r.push_back((x - start + n) % n);
    std::sort(r.begin(), r.end());
    return r;
  };
  const auto ra = rotated(a), rb = rotated(b);
  for (std::size_t i = 0; i < ra.size(); ++i)
    if (ra[i] > rb[i]) return false;
  return true;
}

inline Subset brute_gale_min(const std::vector<Subset>& sets, int start, int n) {
  for (Subset s : sets) {
    bool minimal = true;
    for (Subset t : sets) minimal = minimal && brute_gale_leq(s, t, start, n);
    if (minimal) return s;
  }
  ADD_FAILURE() << "no Gale minimum";
  return Subset{};
}

/// Symmetric basis exchange over explicit element lists.
inline bool brute_is_matroid(const std::vector<Subset>& bases) {
  std::set<Subset> set(bases.begin(), bases.end());
  for (Subset a : bases)
    for (Subset b : bases)
      for (int x : (a - b).elements()) {
        bool found = false;
        for (int y : (b - a).elements())
          if (set.count(a.without(x).with(y))) found = true;
        if (!found) return false;
      }
  return true;
}

/// No a<b<c<d with a,c on one side of the symmetric difference and b,d on the other.
inline bool brute_weakly_separated(Subset I, Subset J) {
  const Subset x = I - J, y = J - I;
  const auto el = (x | y).elements();
  const std::size_t m = el.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c)
        for (std::size_t d = c + 1; d < m; ++d) {
          if (x.contains(el[a]) && y.contains(el[b]) && x.contains(el[c]) && y.contains(el[d])) return false;
          if (y.contains(el[a]) && x.contains(el[b]) && y.contains(el[c]) && x.contains(el[d])) return false;
        }
  return true;
}

/// Triangulations of a convex m-gon counted by the root-triangle recursion.
inline long long triangulations(int m) {
  std::vector<long long> t(std::max(m + 1, 3), 0);
  t[2] = 1;
  for (int s = 3; s <= m; ++s)
    for (int apex = 2; apex < s; ++apex) t[s] += t[apex] * t[s - apex + 1];
  return m < 2 ? 1 : t[m];
}

inline long long catalan(int m) {
  long long c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

inline std::vector<Subset> sorted_labels(const GrassmannianGraph& g) {
  auto labels = face_labels(g);
  std::sort(labels.begin(), labels.end());
  return labels;
}

/// A few fixed decorated permutations covering lollipops, fixed points and top cells.
inline std::vector<DecoratedPermutation> sample_permutations() {
  return {
      DecoratedPermutation({2, 3, 1}),
      DecoratedPermutation({3, 1, 2}),
      DecoratedPermutation({3, 4, 1, 2}),
      DecoratedPermutation({2, 4, 1, 3}),
      DecoratedPermutation({1, 3, 4, 2}, {{1, 1}}),
      DecoratedPermutation({3, 4, 5, 1, 2}),
      DecoratedPermutation({4, 5, 1, 2, 3}),
      DecoratedPermutation({3, 5, 1, 4, 2}, {{4, 0}}),
      DecoratedPermutation({4, 5, 6, 1, 2, 3}),
      DecoratedPermutation({1, 2}, {{1, 1}, {2, 0}}),
  };
}

}  // namespace plabic::testing
