#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plabic/graph.hpp"
#include "plabic/positroid.hpp"
#include "plabic/rational.hpp"
#include "plabic/refine.hpp"
#include "plabic/strands.hpp"

namespace plabic {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend bool operator<(const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

/// Twice the signed area of the triangle (o, a, b); positive when counterclockwise.
inline Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Twice the signed area of a polygon.
inline Rational double_area(const std::vector<Point2>& poly) {
  Rational sum = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    sum += p.x * q.y - p.y * q.x;
  }
  return sum;
}

/// Counterclockwise convex hull without collinear points.
inline std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t m = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (m >= 2 && cross(hull[m - 2], hull[m - 1], pts[i]) <= 0) --m;
    hull[m++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = m + 1; i-- > 0;) {
    while (m >= lower && cross(hull[m - 2], hull[m - 1], pts[i]) <= 0) --m;
    hull[m++] = pts[i];
  }
  hull.resize(m - 1);
  return hull;
}

/// Closed containment in a counterclockwise convex polygon.
inline bool in_convex_polygon(const std::vector<Point2>& poly, const Point2& p) {
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (cross(poly[i], poly[(i + 1) % poly.size()], p) < 0) return false;
  return true;
}

/// The projection e_I -> (sum t_i, sum t_i^2) of the hypersimplex slice at
/// level |I|, i.e. the columns (1, t_i, t_i^2) with the level coordinate dropped.
class CyclicProjection {
 public:
  explicit CyclicProjection(int n) {
    for (int i = 1; i <= n; ++i) nodes_.emplace_back(i);
  }
  explicit CyclicProjection(std::vector<Rational> nodes) : nodes_(std::move(nodes)) {
    for (std::size_t i = 1; i < nodes_.size(); ++i)
      require(nodes_[i - 1] < nodes_[i], ErrorCode::InvalidInput, "projection nodes must increase strictly");
  }

  int n() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Rational>& nodes() const { return nodes_; }

  Point2 operator()(Subset s) const {
    Point2 p{0, 0};
    for (int i : s.elements()) {
      require(i <= n(), ErrorCode::InvalidInput, "subset element beyond the projection");
      p.x += nodes_[i - 1];
      p.y += nodes_[i - 1] * nodes_[i - 1];
    }
    return p;
  }

  /// Q(k,n): the counterclockwise hull of all projected k-subsets.
  std::vector<Point2> polygon(int k) const {
    std::vector<Point2> pts;
    for (Subset s : k_subsets(k, n())) pts.push_back((*this)(s));
    return convex_hull(pts);
  }

 private:
  std::vector<Rational> nodes_;
};

/// Polygonal cells labelled by k-subsets; corners listed counterclockwise.
struct PlanarTiling {
  int k = 0;
  int n = 0;
  struct Cell {
    std::vector<Subset> corners;
    int h = 0;
  };
  std::vector<Cell> cells;

  std::set<Subset> labels() const {
    std::set<Subset> out;
    for (const auto& c : cells) out.insert(c.corners.begin(), c.corners.end());
    return out;
  }
};

namespace detail {

inline std::vector<Point2> cell_points(const PlanarTiling::Cell& cell, const CyclicProjection& pi) {
  std::vector<Point2> out;
  for (Subset s : cell.corners) out.push_back(pi(s));
  return out;
}

}  // namespace detail

/// The dual tiling of a complete reduced graph: one cell per internal vertex,
/// whose corners are the labels of the faces around it in rotation order.
inline PlanarTiling tiling_from_graph(const GrassmannianGraph& g, const CyclicProjection& pi) {
  require(g.n() >= 3 && pi.n() == g.n(), ErrorCode::InvalidInput, "tilings need n >= 3 and a matching projection");
  const auto cert = is_reduced(g);
  require(cert.reduced, ErrorCode::NotReduced, "graph is not reduced: " + cert.condition);
  const Rational hg = graph_helicity(g);
  const int k = static_cast<int>(boost::multiprecision::numerator(hg));
  require(boost::multiprecision::denominator(hg) == 1 && k >= 1 && k < g.n() && is_complete(g, k),
          ErrorCode::NotComplete, "graph is not complete of its type");
  const auto faces = g.faces();
  const auto labels = detail::face_labels_unchecked(g, faces);
  PlanarTiling t;
  t.k = k;
  t.n = g.n();
  for (int v : g.internal_vertices()) {
    PlanarTiling::Cell cell;
    cell.h = g.helicity(v);
    for (int h : g.rotation(v)) cell.corners.push_back(labels[faces.face_of_half_edge[h]]);
    t.cells.push_back(std::move(cell));
  }
  return t;
}

/// Outcome of validating a tiling; `violations` is empty iff `valid`.
struct SubdivisionReport {
  bool valid = true;
  bool trivial = false;  // a single cell covering all of Q
  std::vector<std::string> violations;
  Rational area_sum = 0;
  Rational area_q = 0;
};

namespace detail {

/// Vertices of a convex polygon lying on the line through a, b.
inline std::vector<Point2> on_line(const std::vector<Point2>& poly, const Point2& a, const Point2& b) {
  std::vector<Point2> out;
  for (const auto& p : poly)
    if (cross(a, b, p) == 0) out.push_back(p);
  return out;
}

/// For two convex counterclockwise polygons, the line of some edge with P
/// weakly on its left and Q weakly on its right, if one exists.
inline std::optional<std::pair<Point2, Point2>> separating_edge(const std::vector<Point2>& P,
                                                                const std::vector<Point2>& Q) {
  for (int pass = 0; pass < 2; ++pass) {
    const auto& A = pass == 0 ? P : Q;
    const auto& B = pass == 0 ? Q : P;
    for (std::size_t i = 0; i < A.size(); ++i) {
      const Point2& a = A[i];
      const Point2& b = A[(i + 1) % A.size()];
      bool ok = true;
      for (const auto& p : B) ok = ok && cross(a, b, p) <= 0;
      if (ok) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Exact checks: every cell is a strictly convex polygon that is the projection
/// of the hypersimplex face it spans (all k-subsets between the intersection
/// and the union of its corner labels project into it, and |union - intersection|
/// equals the number of corners, k - |intersection| equals h); any two cells
/// have disjoint interiors and meet exactly in the hull of their common
/// labels; the cell areas add up to the area of Q(k,n).
inline SubdivisionReport validate_subdivision(const PlanarTiling& t, const CyclicProjection& pi) {
  SubdivisionReport report;
  auto violate = [&](std::string message) {
    report.valid = false;
    report.violations.push_back(std::move(message));
  };
  if (t.cells.empty()) {
    violate("tiling has no cells");
    return report;
  }
  const auto Q = pi.polygon(t.k);
  report.area_q = double_area(Q) / 2;
  std::vector<std::vector<Point2>> polys;
  for (std::size_t c = 0; c < t.cells.size(); ++c) {
    const auto& cell = t.cells[c];
    const std::string name = "cell " + std::to_string(c);
    auto poly = detail::cell_points(cell, pi);
    polys.push_back(poly);
    const int d = static_cast<int>(poly.size());
    if (d < 3) {
      violate(name + " has fewer than 3 corners");
      continue;
    }
    bool convex = true;
    for (int i = 0; i < d; ++i) convex = convex && cross(poly[i], poly[(i + 1) % d], poly[(i + 2) % d]) > 0;
    if (!convex) violate(name + " is not a strictly convex counterclockwise polygon");
    Subset common = Subset::full(t.n), all;
    for (Subset s : cell.corners) {
      if (s.size() != t.k) violate(name + " has corner " + s.label() + " of the wrong size");
      common = common & s;
      all = all | s;
    }
    if ((all - common).size() != d) violate(name + " does not span a face with as many free indices as corners");
    if (t.k - common.size() != cell.h) violate(name + " has helicity " + std::to_string(cell.h) +
                                              " but spans a face of level " + std::to_string(t.k - common.size()));
    for (Subset s : k_subsets(t.k, t.n)) {
      if (!common.is_subset_of(s) || !s.is_subset_of(all)) continue;
      if (convex && !in_convex_polygon(poly, pi(s)))
        violate(name + ": face vertex " + s.label() + " projects outside the cell");
    }
    for (const auto& p : poly)
      if (!in_convex_polygon(Q, p)) violate(name + " leaves Q");
    report.area_sum += double_area(poly) / 2;
  }
  for (std::size_t a = 0; a < t.cells.size(); ++a) {
    for (std::size_t b = a + 1; b < t.cells.size(); ++b) {
      const auto& P = polys[a];
      const auto& R = polys[b];
      if (P.size() < 3 || R.size() < 3) continue;
      const std::string pair = "cells " + std::to_string(a) + " and " + std::to_string(b);
      const auto line = detail::separating_edge(P, R);
      if (!line) {
        violate(pair + " overlap");
        continue;
      }
      // Both cells meet the separating line in a vertex or an edge; intersect those.
      const auto on_p = detail::on_line(P, line->first, line->second);
      const auto on_r = detail::on_line(R, line->first, line->second);
      const Point2 dir{line->second.x - line->first.x, line->second.y - line->first.y};
      auto param = [&](const Point2& p) -> Rational { return (p.x - line->first.x) * dir.x + (p.y - line->first.y) * dir.y; };
      std::set<Point2> meet;
      if (!on_p.empty() && !on_r.empty()) {
        auto bounds = [&](const std::vector<Point2>& pts) {
          Rational lo = param(pts.front()), hi = lo;
          for (const auto& p : pts) lo = std::min(lo, param(p)), hi = std::max(hi, param(p));
          return std::make_pair(lo, hi);
        };
        const auto [plo, phi] = bounds(on_p);
        const auto [rlo, rhi] = bounds(on_r);
        const Rational lo = std::max(plo, rlo), hi = std::min(phi, rhi);
        if (lo <= hi) {
          for (const auto* pts : {&on_p, &on_r})
            for (const auto& p : *pts)
              if (param(p) == lo || param(p) == hi) meet.insert(p);
          std::set<Rational> ends;
          for (const auto& p : meet) ends.insert(param(p));
          if (!ends.count(lo) || !ends.count(hi)) violate(pair + " meet in a point that is not a corner");
        }
      }
      std::set<Point2> shared;
      for (Subset s : t.cells[a].corners)
        if (std::find(t.cells[b].corners.begin(), t.cells[b].corners.end(), s) != t.cells[b].corners.end())
          shared.insert(pi(s));
      std::set<Point2> corners_a(P.begin(), P.end()), corners_b(R.begin(), R.end());
      for (const auto& p : meet)
        if (!corners_a.count(p) || !corners_b.count(p)) violate(pair + " meet in a point that is not a corner of both");
      if (meet != shared) violate(pair + " do not meet exactly in the hull of their common labels");
    }
  }
  if (report.area_sum != report.area_q)
    violate("cell areas add up to " + to_string(report.area_sum) + ", Q has area " + to_string(report.area_q));
  if (report.valid && t.cells.size() == 1) {
    const auto hull = convex_hull(polys.front());
    report.trivial = std::set<Point2>(hull.begin(), hull.end()) == std::set<Point2>(Q.begin(), Q.end());
  }
  return report;
}

/// The single-cell tiling of Q(k,n) by its corners, the cyclic intervals.
inline PlanarTiling trivial_tiling(int k, int n) {
  PlanarTiling t;
  t.k = k;
  t.n = n;
  PlanarTiling::Cell cell;
  cell.h = k;
  for (int i = 1; i <= n; ++i) cell.corners.push_back(Subset::cyclic_interval(i, k, n));
  t.cells.push_back(std::move(cell));
  return t;
}

/// Inverse of tiling_from_graph: one internal vertex per cell, one edge per
/// side shared by two cells, and the side of Q between the intervals starting
/// at i and i+1 carrying the edge to b_i.
inline GrassmannianGraph graph_from_tiling(const PlanarTiling& t) {
  require(t.n >= 3 && t.k >= 1 && t.k < t.n, ErrorCode::InvalidInput, "tiling type out of range");
  GrassmannianGraph g(t.n);
  std::vector<int> vertex;
  for (const auto& cell : t.cells) vertex.push_back(g.add_vertex(cell.h));
  std::map<std::pair<Subset, Subset>, int> boundary_side;
  for (int i = 1; i <= t.n; ++i)
    boundary_side[{Subset::cyclic_interval(i, t.k, t.n), Subset::cyclic_interval(i % t.n + 1, t.k, t.n)}] = i;
  // Each directed side (a, b) of a cell gets a half-edge; (b, a) is its twin.
  std::map<std::pair<Subset, Subset>, std::pair<int, int>> open;  // side -> (cell, slot)
  std::vector<std::vector<int>> rotation(t.cells.size());
  for (std::size_t c = 0; c < t.cells.size(); ++c) rotation[c].assign(t.cells[c].corners.size(), -1);
  for (std::size_t c = 0; c < t.cells.size(); ++c) {
    const auto& corners = t.cells[c].corners;
    for (std::size_t j = 0; j < corners.size(); ++j) {
      const Subset a = corners[j];
      const Subset b = corners[(j + 1) % corners.size()];
      if (const auto it = open.find({b, a}); it != open.end()) {
        const auto [other, slot] = it->second;
        const int e = g.add_detached_edge(vertex[other], vertex[c]);
        rotation[other][slot] = 2 * e;
        rotation[c][j] = 2 * e + 1;
        open.erase(it);
        continue;
      }
      if (const auto it = boundary_side.find({a, b}); it != boundary_side.end()) {
        const int i = it->second;
        const int e = g.add_edge(g.boundary_vertex(i), vertex[c]);
        g.set_rotation(g.boundary_vertex(i), {2 * e});
        rotation[c][j] = 2 * e + 1;
        continue;
      }
      require(open.emplace(std::make_pair(a, b), std::make_pair(static_cast<int>(c), static_cast<int>(j))).second,
              ErrorCode::InvalidInput, "side " + a.label() + "-" + b.label() + " used twice");
    }
  }
  require(open.empty(), ErrorCode::InvalidInput, "tiling has unmatched interior sides");
  for (std::size_t c = 0; c < t.cells.size(); ++c) g.set_rotation(vertex[c], rotation[c]);
  g.validate();
  return g;
}

/// Lattice surface dual to a reduced plabic graph: one triangle per trivalent
/// vertex on the labels of its three faces, boundary = sides used once.
struct Membrane {
  int k = 0;
  int n = 0;
  std::vector<Subset> vertices;                // e_I for each label I
  std::vector<std::array<Subset, 3>> triangles;
  std::vector<std::pair<Subset, Subset>> boundary;  // sides used by one triangle

  int area() const { return static_cast<int>(triangles.size()); }
};

/// e_I - e_J lies in {e_i - e_j : i != j}.
inline bool is_root_difference(Subset a, Subset b) {
  return a.size() == b.size() && (a - b).size() == 1;
}

/// Loop a_1, ..., a_n with a_1 = e_{J_1} and a_{i+1} - a_i = e_{w(i)} - e_i.
inline std::vector<Subset> boundary_loop(const DecoratedPermutation& w) {
  require(!w.has_fixed_points(), ErrorCode::FixedPointsPresent, "boundary loops need a permutation without fixed points");
  std::vector<Subset> loop;
  Subset a = necklace_from_permutation(w)[1];
  for (int i = 1; i <= w.n(); ++i) {
    loop.push_back(a);
    a = a.without(i).with(w(i));
  }
  require(a == loop.front(), ErrorCode::InvalidInput, "loop does not close");
  return loop;
}

inline Membrane membrane_from_graph(const GrassmannianGraph& g) {
  require(is_plabic(g), ErrorCode::InvalidInput, "membranes need a plabic graph");
  const auto labels = face_labels(g);
  const auto w = strand_permutation(g);
  require(!w.has_fixed_points(), ErrorCode::FixedPointsPresent, "strand permutation has fixed points");
  const auto faces = g.faces();
  Membrane m;
  m.n = g.n();
  m.k = helicity(w);
  std::set<Subset> verts(labels.begin(), labels.end());
  m.vertices.assign(verts.begin(), verts.end());
  std::map<std::pair<Subset, Subset>, int> uses;
  for (int v : g.internal_vertices()) {
    if (g.degree(v) != 3) continue;
    std::array<Subset, 3> tri;
    for (int s = 0; s < 3; ++s) tri[s] = labels[faces.face_of_half_edge[g.rotation(v)[s]]];
    for (int s = 0; s < 3; ++s) {
      Subset a = tri[s], b = tri[(s + 1) % 3];
      if (b < a) std::swap(a, b);
      ++uses[{a, b}];
    }
    m.triangles.push_back(tri);
  }
  for (const auto& [side, count] : uses)
    if (count == 1) m.boundary.push_back(side);
  return m;
}

/// Sides of L_w as unordered pairs, sorted.
inline std::vector<std::pair<Subset, Subset>> loop_sides(const std::vector<Subset>& loop) {
  std::vector<std::pair<Subset, Subset>> out;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    Subset a = loop[i], b = loop[(i + 1) % loop.size()];
    if (b < a) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace plabic
