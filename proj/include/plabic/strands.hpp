#pragma once

#include <map>
#include <string>
#include <vector>

#include "plabic/graph.hpp"
#include "plabic/positroid.hpp"

namespace plabic {

/// A walk obeying the rules of the road: entering v through slot i of its
/// clockwise rotation, the walk leaves through slot i + h(v) mod deg(v).
struct Strand {
  std::vector<int> steps;  // half-edges, each walked from origin to target
  bool closed = false;
  int source = 0;          // b_source for open strands (1-based)
  int sink = 0;            // b_sink for open strands (1-based)
};

namespace detail {

inline int strand_successor(const GrassmannianGraph& g, int h) {
  const int v = g.target(h);
  const auto& rot = g.rotation(v);
  const int d = static_cast<int>(rot.size());
  const int entry = g.slot_of(GrassmannianGraph::twin(h));
  return rot[(entry + g.helicity(v)) % d];
}

}  // namespace detail

/// All strands: the open ones ordered by source b_1..b_n, then closed loops.
inline std::vector<Strand> strands(const GrassmannianGraph& g) {
  std::vector<Strand> out;
  std::vector<char> used(g.half_edge_slots(), 0);
  for (int i = 1; i <= g.n(); ++i) {
    const int start = g.boundary_half_edge(i);
    if (start < 0) continue;
    Strand s;
    s.source = i;
    int h = start;
    while (true) {
      require(!used[h], ErrorCode::InvalidInput, "strand revisits a half-edge");
      used[h] = 1;
      s.steps.push_back(h);
      const int v = g.target(h);
      if (g.is_boundary(v)) {
        s.sink = g.boundary_index(v);
        break;
      }
      h = detail::strand_successor(g, h);
    }
    out.push_back(std::move(s));
  }
  for (int h0 = 0; h0 < g.half_edge_slots(); ++h0) {
    if (used[h0] || g.origin(h0) < 0) continue;
    Strand s;
    s.closed = true;
    for (int h = h0; !used[h]; h = detail::strand_successor(g, h)) {
      used[h] = 1;
      s.steps.push_back(h);
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Decorated strand permutation; fixed points take the helicity of their
/// boundary leaf as color. Throws ClosedStrand when a closed loop exists.
inline DecoratedPermutation strand_permutation(const GrassmannianGraph& g) {
  const auto all = strands(g);
  std::vector<int> images(g.n(), 0);
  std::map<int, int> colors;
  for (const auto& s : all) {
    if (s.closed) {
      std::string cycle;
      for (int h : s.steps) cycle += (cycle.empty() ? "" : ",") + std::to_string(h);
      fail(ErrorCode::ClosedStrand, "closed strand through half-edges [" + cycle + "]");
    }
    images[s.source - 1] = s.sink;
    if (s.source == s.sink) {
      const int leaf = g.target(s.steps.front());
      require(g.is_boundary_leaf(leaf) && (g.helicity(leaf) == 0 || g.helicity(leaf) == 1),
              ErrorCode::NotReduced,
              "fixed point " + std::to_string(s.source) + " does not come from a boundary leaf");
      colors[s.source] = g.helicity(leaf);
    }
  }
  for (int i = 1; i <= g.n(); ++i)
    require(images[i - 1] != 0, ErrorCode::InvalidInput, "isolated boundary vertex");
  return DecoratedPermutation(std::move(images), colors);
}

/// Outcome of a reducedness check; when `reduced` is false the remaining
/// fields name the violated condition and its witnesses.
struct ReducedCertificate {
  bool reduced = true;
  std::string condition;   // closed_strand | self_intersection | bad_double_crossing | degree_two
  std::vector<int> strands;
  std::vector<int> vertices;
  std::string detail;

  explicit operator bool() const { return reduced; }
};

namespace detail {

/// Internal vertices visited by an open strand, in order.
inline std::vector<int> strand_vertices(const GrassmannianGraph& g, const Strand& s) {
  std::vector<int> out;
  for (std::size_t t = 0; t + 1 < s.steps.size() || (s.closed && t < s.steps.size()); ++t)
    out.push_back(g.target(s.steps[t]));
  if (!s.closed && !s.steps.empty() && !g.is_boundary(g.target(s.steps.back())))
    out.push_back(g.target(s.steps.back()));
  return out;
}

/// Reducedness read literally off the strands: every pass of a strand
/// through a vertex counts as a point of the strand. Exact for plabic graphs.
inline ReducedCertificate check_reduced_direct(const GrassmannianGraph& g) {
  ReducedCertificate cert;
  auto reject = [&](std::string condition, std::vector<int> strand_ids, std::vector<int> vertex_ids,
                    std::string detail) {
    cert.reduced = false;
    cert.condition = std::move(condition);
    cert.strands = std::move(strand_ids);
    cert.vertices = std::move(vertex_ids);
    cert.detail = std::move(detail);
    return cert;
  };
  for (int v : g.internal_vertices())
    if (g.degree(v) == 2) return reject("degree_two", {}, {v}, "internal vertex of degree 2");

  const auto all = strands(g);
  for (int s = 0; s < static_cast<int>(all.size()); ++s)
    if (all[s].closed) return reject("closed_strand", {s}, {}, "strand is a closed loop");

  std::vector<std::map<int, int>> position(all.size());
  for (int s = 0; s < static_cast<int>(all.size()); ++s) {
    const auto& st = all[s];
    if (st.source == st.sink) {
      const int leaf = g.target(st.steps.front());
      if (st.steps.size() == 2 && g.is_boundary_leaf(leaf)) continue;
      return reject("self_intersection", {s}, {}, "strand returns to its starting boundary vertex");
    }
    std::vector<char> edge_seen(g.edge_slots(), 0);
    for (int h : st.steps) {
      if (edge_seen[GrassmannianGraph::edge_of(h)]++)
        return reject("self_intersection", {s}, {g.origin(h)}, "strand runs along an edge twice");
    }
    const auto verts = strand_vertices(g, st);
    for (int t = 0; t < static_cast<int>(verts.size()); ++t) {
      if (!position[s].emplace(verts[t], t).second)
        return reject("self_intersection", {s}, {verts[t]}, "strand passes a vertex twice");
    }
  }
  for (int a = 0; a < static_cast<int>(all.size()); ++a) {
    for (int b = a + 1; b < static_cast<int>(all.size()); ++b) {
      std::vector<std::pair<int, int>> common;  // (position in a, vertex)
      for (const auto& [v, pa] : position[a])
        if (position[b].count(v)) common.emplace_back(pa, v);
      if (common.size() < 2) continue;
      std::sort(common.begin(), common.end());
      for (std::size_t x = 0; x < common.size(); ++x) {
        for (std::size_t y = x + 1; y < common.size(); ++y) {
          const int u = common[x].second;
          const int v = common[y].second;
          if (position[b].at(u) < position[b].at(v))
            return reject("bad_double_crossing", {a, b}, {u, v},
                          "two strands both run from vertex " + std::to_string(u) + " to " + std::to_string(v));
        }
      }
    }
  }
  return cert;
}

/// Face labels from the left-of-strand rule, assuming all open strands are
/// simple curves. A colored-1 fixed point belongs to every label.
inline std::vector<Subset> face_labels_unchecked(const GrassmannianGraph& g,
                                                 const GrassmannianGraph::Faces& faces) {
  std::vector<Subset> labels(faces.count);
  for (const auto& st : strands(g)) {
    if (st.closed) continue;
    if (st.source == st.sink) {
      const int leaf = g.target(st.steps.front());
      if (g.helicity(leaf) == 1)
        for (auto& l : labels) l.insert(st.sink);
      continue;
    }
    std::vector<int> side(faces.count, 0);  // +1 left, -1 right
    std::vector<char> on_strand(g.edge_slots(), 0);
    std::vector<int> stack;
    auto mark = [&](int f, int value) {
      require(side[f] == 0 || side[f] == value, ErrorCode::NotReduced,
              "strand from b_" + std::to_string(st.source) + " does not separate the disk");
      if (side[f] == 0) {
        side[f] = value;
        stack.push_back(f);
      }
    };
    for (int h : st.steps) on_strand[GrassmannianGraph::edge_of(h)] = 1;
    for (int h : st.steps) {
      mark(faces.face_of_half_edge[h], +1);
      mark(faces.face_of_half_edge[GrassmannianGraph::twin(h)], -1);
    }
    std::vector<std::vector<int>> across(faces.count);
    for (int e : g.edges()) {
      if (on_strand[e]) continue;
      const int f1 = faces.face_of_half_edge[2 * e];
      const int f2 = faces.face_of_half_edge[2 * e + 1];
      across[f1].push_back(f2);
      across[f2].push_back(f1);
    }
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (int other : across[f]) mark(other, side[f]);
    }
    for (int f = 0; f < faces.count; ++f) {
      require(side[f] != 0, ErrorCode::NotReduced, "face not reached by strand side propagation");
      if (side[f] > 0) labels[f].insert(st.sink);
    }
  }
  return labels;
}

}  // namespace detail

}  // namespace plabic
