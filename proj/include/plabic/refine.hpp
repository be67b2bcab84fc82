#pragma once

#include <map>
#include <vector>

#include "plabic/bridge.hpp"
#include "plabic/graph.hpp"
#include "plabic/strands.hpp"

namespace plabic {

/// Plabic vertex types: (1,3), (2,3), (0,1), (1,1).
inline bool is_plabic_vertex(const GrassmannianGraph& g, int v) {
  const int d = g.degree(v);
  const int h = g.helicity(v);
  return (d == 3 && (h == 1 || h == 2)) || (d == 1 && (h == 0 || h == 1));
}

inline bool is_plabic(const GrassmannianGraph& g) {
  for (int v : g.internal_vertices())
    if (!is_plabic_vertex(g, v)) return false;
  return true;
}

/// f(k,n) = (k-1)(n-k-1), the internal face count of a complete reduced graph.
/// Complete graphs with k = 0 or k = n are lollipops and have none.
inline int complete_internal_faces(int k, int n) {
  if (k <= 0 || k >= n) return 0;
  return (k - 1) * (n - k - 1);
}

/// Replaces internal vertex v of type (h,d) by a graph H of boundary size d
/// and helicity h; H's b_i is glued to the edge in slot i-1 of v's rotation.
inline GrassmannianGraph refine_vertex(const GrassmannianGraph& g, int v, const GrassmannianGraph& H) {
  require(v >= 0 && v < g.vertex_slots() && !g.is_boundary(v), ErrorCode::InvalidInput,
          "refinement needs an internal vertex");
  const int d = g.degree(v);
  require(H.n() == d && graph_helicity(H) == Rational(g.helicity(v)), ErrorCode::TypeMismatch,
          "replacement graph has type (" + to_string(graph_helicity(H)) + "," + std::to_string(H.n()) +
              "), vertex has type (" + std::to_string(g.helicity(v)) + "," + std::to_string(d) + ")");
  GrassmannianGraph out = g;
  const auto slots = g.rotation(v);
  std::vector<int> vmap(H.vertex_slots(), -1);
  for (int u : H.internal_vertices()) vmap[u] = out.add_vertex(H.helicity(u));
  // Internal edges of H are copied; boundary edges of H reuse the edges of v.
  std::vector<int> hmap(H.half_edge_slots(), -1);
  for (int e : H.edges()) {
    const int a = H.origin(2 * e);
    const int b = H.origin(2 * e + 1);
    if (H.is_boundary(a) || H.is_boundary(b)) continue;
    const int ne = out.add_detached_edge(vmap[a], vmap[b]);
    hmap[2 * e] = 2 * ne;
    hmap[2 * e + 1] = 2 * ne + 1;
  }
  for (int i = 1; i <= d; ++i) {
    const int hb = H.boundary_half_edge(i);
    const int inner = GrassmannianGraph::twin(hb);
    const int outer = slots[i - 1];
    if (H.is_boundary(H.origin(inner))) continue;
    hmap[inner] = outer;
  }
  for (int u : H.internal_vertices()) {
    std::vector<int> rot;
    for (int h : H.rotation(u)) rot.push_back(hmap.at(h));
    out.set_rotation(vmap[u], std::move(rot));
  }
  // H edges joining two of its boundary vertices join the two outer neighbors.
  for (int i = 1; i <= d; ++i) {
    const int hb = H.boundary_half_edge(i);
    const int j = H.boundary_index(H.target(hb));
    if (j == 0 || j < i) continue;
    const int ti = GrassmannianGraph::twin(slots[i - 1]);
    const int tj = GrassmannianGraph::twin(slots[j - 1]);
    const int ne = out.add_detached_edge(out.origin(ti), out.origin(tj));
    out.replace_in_rotation(ti, 2 * ne);
    out.replace_in_rotation(tj, 2 * ne + 1);
    out.kill_edge(GrassmannianGraph::edge_of(ti));
    out.kill_edge(GrassmannianGraph::edge_of(tj));
  }
  out.kill_vertex(v);
  out = out.compacted();
  out.validate();
  return out;
}

/// Complete reduced plabic graph of type (h,d).
inline GrassmannianGraph complete_plabic(int h, int d) {
  return build_reduced_plabic(DecoratedPermutation::shift(h, d));
}

/// Refines every non-plabic internal vertex by a complete reduced plabic graph.
inline GrassmannianGraph plabic_refinement(const GrassmannianGraph& g) {
  GrassmannianGraph out = g;
  while (true) {
    int target = -1;
    for (int v : out.internal_vertices()) {
      if (!is_plabic_vertex(out, v)) {
        target = v;
        break;
      }
    }
    if (target < 0) return out;
    require(out.degree(target) >= 1, ErrorCode::InvalidInput, "isolated internal vertex");
    out = refine_vertex(out, target, complete_plabic(out.helicity(target), out.degree(target)));
  }
}

/// Reducedness: degree-2 vertices and closed strands are read off G; the
/// strand conditions are checked on the plabic refinement, which preserves them.
inline ReducedCertificate is_reduced(const GrassmannianGraph& g) {
  ReducedCertificate cert;
  for (int v : g.internal_vertices()) {
    if (g.degree(v) == 2) {
      cert.reduced = false;
      cert.condition = "degree_two";
      cert.vertices = {v};
      cert.detail = "internal vertex of degree 2";
      return cert;
    }
  }
  const auto all = strands(g);
  for (int s = 0; s < static_cast<int>(all.size()); ++s) {
    if (all[s].closed) {
      cert.reduced = false;
      cert.condition = "closed_strand";
      cert.strands = {s};
      cert.detail = "strand is a closed loop";
      return cert;
    }
  }
  if (is_plabic(g)) return detail::check_reduced_direct(g);
  cert = detail::check_reduced_direct(plabic_refinement(g));
  if (!cert.reduced) {
    cert.vertices.clear();
    cert.detail += " (witnessed in the plabic refinement)";
  }
  return cert;
}

/// Face labels by the left-of-strand rule, indexed like `g.faces()`.
inline std::vector<Subset> face_labels(const GrassmannianGraph& g) {
  const auto cert = is_reduced(g);
  require(cert.reduced, ErrorCode::NotReduced, "graph is not reduced: " + cert.condition);
  return detail::face_labels_unchecked(g, g.faces());
}

/// Complete of type (k,n): reduced, strand permutation i -> i+k, and the
/// internal face count equals f(k,n) minus the f(h(v),deg(v)) of its vertices.
inline bool is_complete(const GrassmannianGraph& g, int k) {
  const auto cert = is_reduced(g);
  require(cert.reduced, ErrorCode::NotReduced, "graph is not reduced: " + cert.condition);
  if (k < 0 || k > g.n()) return false;
  if (!(strand_permutation(g) == DecoratedPermutation::shift(k, g.n()))) return false;
  int expected = complete_internal_faces(k, g.n());
  for (int v : g.internal_vertices()) expected -= complete_internal_faces(g.helicity(v), g.degree(v));
  return g.faces().internal_count() == expected;
}

}  // namespace plabic
