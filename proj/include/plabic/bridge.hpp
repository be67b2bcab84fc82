#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "plabic/graph.hpp"
#include "plabic/positroid.hpp"
#include "plabic/strands.hpp"

namespace plabic {

namespace detail {

/// Replaces the degree-2 vertex v by a single edge between its neighbors.
inline void splice_degree_two(GrassmannianGraph& g, int v) {
  const auto rot = g.rotation(v);
  require(rot.size() == 2, ErrorCode::InvalidInput, "splice needs a degree-2 vertex");
  const int t1 = GrassmannianGraph::twin(rot[0]);
  const int t2 = GrassmannianGraph::twin(rot[1]);
  const int e = g.add_detached_edge(g.origin(t1), g.origin(t2));
  g.replace_in_rotation(t1, 2 * e);
  g.replace_in_rotation(t2, 2 * e + 1);
  g.kill_edge(GrassmannianGraph::edge_of(rot[0]));
  g.kill_edge(GrassmannianGraph::edge_of(rot[1]));
  g.kill_vertex(v);
}

/// Contracts the edge of half-edge h (from u to v, both internal) into u.
/// The merged rotation is u's after h followed by v's after twin(h).
inline void contract_edge(GrassmannianGraph& g, int h) {
  const int u = g.origin(h);
  const int v = g.target(h);
  require(u != v && !g.is_boundary(u) && !g.is_boundary(v), ErrorCode::InvalidInput,
          "can only contract an edge between two distinct internal vertices");
  const auto ru = g.rotation(u);
  const auto rv = g.rotation(v);
  const int su = g.slot_of(h);
  const int sv = g.slot_of(GrassmannianGraph::twin(h));
  std::vector<int> merged;
  for (std::size_t t = 1; t < ru.size(); ++t) merged.push_back(ru[(su + t) % ru.size()]);
  for (std::size_t t = 1; t < rv.size(); ++t) merged.push_back(rv[(sv + t) % rv.size()]);
  const int h_merged = g.helicity(u) + g.helicity(v) - 1;
  g.kill_edge(GrassmannianGraph::edge_of(h));
  g.kill_vertex(v);
  g.set_rotation(u, std::move(merged));
  g.set_helicity(u, h_merged);
}

/// Absorbs leaves whose trivalent neighbor then becomes a (1,2) vertex and
/// splices out every (1,2) vertex, until neither applies.
inline void absorb_leaves_and_splice(GrassmannianGraph& g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.vertex_slots() && !changed; ++v) {
      if (!g.vertex_alive(v) || g.is_boundary(v) || g.degree(v) != 1) continue;
      const int h = g.rotation(v).front();
      const int u = g.target(h);
      if (g.is_boundary(u)) continue;
      if (g.degree(u) != 3 || g.helicity(u) + g.helicity(v) != 2) continue;
      contract_edge(g, GrassmannianGraph::twin(h));
      changed = true;
    }
    for (int v = 0; v < g.vertex_slots() && !changed; ++v) {
      if (!g.vertex_alive(v) || g.is_boundary(v) || g.degree(v) != 2 || g.helicity(v) != 1) continue;
      splice_degree_two(g, v);
      changed = true;
    }
  }
}

}  // namespace detail

/// Adjacent transpositions peeled off a decorated permutation, outermost
/// first, together with the fully fixed remainder.
struct BridgeDecomposition {
  std::vector<std::pair<int, int>> bridges;  // (i, j): white end at b_i, black end at b_j
  std::vector<int> remainder_colors;         // color of each boundary point at the end
};

/// Works on the bounded affine permutation f(i) in [i, i+n]: repeatedly picks
/// cyclically consecutive non-fixed i, j with f(i) < f(j) and swaps their values.
inline BridgeDecomposition bridge_decomposition(const DecoratedPermutation& w) {
  const int n = w.n();
  std::vector<int> f(n + 1);
  for (int i = 1; i <= n; ++i) {
    const int image = w(i);
    if (image > i) f[i] = image;
    else if (image < i) f[i] = image + n;
    else f[i] = (w.color(i) == 1) ? i + n : i;
  }
  auto fixed = [&](int m) { return f[m] == m || f[m] == m + n; };
  BridgeDecomposition out;
  while (true) {
    std::vector<int> moving;
    for (int m = 1; m <= n; ++m)
      if (!fixed(m)) moving.push_back(m);
    if (moving.empty()) break;
    bool found = false;
    for (std::size_t t = 0; t < moving.size() && !found; ++t) {
      const int i = moving[t];
      const int j = moving[(t + 1) % moving.size()];
      const bool wraps = j <= i;
      const int fj = f[j] + (wraps ? n : 0);
      if (f[i] >= fj) continue;
      const int fi = f[i];
      f[i] = fj;
      f[j] = fi - (wraps ? n : 0);
      out.bridges.emplace_back(i, j);
      found = true;
    }
    if (!found) throw std::logic_error("bridge decomposition found no admissible pair");
  }
  out.remainder_colors.resize(n);
  for (int m = 1; m <= n; ++m) out.remainder_colors[m - 1] = (f[m] == m + n) ? 1 : 0;
  return out;
}

/// A reduced plabic graph whose decorated strand permutation is w, built from
/// lollipops by adding bridges innermost first. The result is verified.
inline GrassmannianGraph build_reduced_plabic(const DecoratedPermutation& w) {
  const int n = w.n();
  require(n >= 1, ErrorCode::InvalidInput, "empty permutation");
  const auto decomposition = bridge_decomposition(w);
  GrassmannianGraph g(n);
  for (int i = 1; i <= n; ++i) {
    const int leaf = g.add_vertex(decomposition.remainder_colors[i - 1]);
    g.add_edge(g.boundary_vertex(i), leaf);
  }
  for (auto it = decomposition.bridges.rbegin(); it != decomposition.bridges.rend(); ++it) {
    const auto [i, j] = *it;
    const int hi = g.boundary_half_edge(i);
    const int hj = g.boundary_half_edge(j);
    const int x = g.add_vertex(1);
    const int y = g.add_vertex(2);
    // Re-seat the inner ends of both boundary edges on the new vertices.
    const int inner_i = GrassmannianGraph::twin(hi);
    const int inner_j = GrassmannianGraph::twin(hj);
    const int ei = g.add_detached_edge(g.boundary_vertex(i), x);
    const int ej = g.add_detached_edge(g.boundary_vertex(j), y);
    const int bridge = g.add_detached_edge(x, y);
    g.replace_in_rotation(hi, 2 * ei);
    g.replace_in_rotation(hj, 2 * ej);
    const int old_i = g.add_detached_edge(x, g.origin(inner_i));
    const int old_j = g.add_detached_edge(y, g.origin(inner_j));
    g.replace_in_rotation(inner_i, 2 * old_i + 1);
    g.replace_in_rotation(inner_j, 2 * old_j + 1);
    g.kill_edge(GrassmannianGraph::edge_of(hi));
    g.kill_edge(GrassmannianGraph::edge_of(hj));
    g.set_rotation(x, {2 * ei + 1, 2 * bridge, 2 * old_i});
    g.set_rotation(y, {2 * ej + 1, 2 * old_j, 2 * bridge + 1});
  }
  detail::absorb_leaves_and_splice(g);
  GrassmannianGraph out = g.compacted();
  out.validate();
  if (!(strand_permutation(out) == w))
    throw std::logic_error("bridge construction produced the wrong strand permutation");
  if (!detail::check_reduced_direct(out))
    throw std::logic_error("bridge construction produced a non-reduced graph");
  return out;
}

}  // namespace plabic
