#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "plabic/geometry.hpp"
#include "plabic/graph.hpp"
#include "plabic/rational.hpp"

namespace plabic {

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorCode::IO, "cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  require(static_cast<bool>(out), ErrorCode::IO, "failed writing '" + path + "'");
}

namespace detail {

/// Maps exact points into an SVG canvas with the y axis flipped. Scaling is
/// uniform or per axis.
class SvgCanvas {
 public:
  explicit SvgCanvas(const std::vector<Point2>& all, bool uniform = true) {
    require(!all.empty(), ErrorCode::InvalidInput, "nothing to draw");
    min_x_ = max_x_ = all.front().x;
    min_y_ = max_y_ = all.front().y;
    for (const auto& p : all) {
      min_x_ = std::min(min_x_, p.x), max_x_ = std::max(max_x_, p.x);
      min_y_ = std::min(min_y_, p.y), max_y_ = std::max(max_y_, p.y);
    }
    Rational span_x = max_x_ - min_x_, span_y = max_y_ - min_y_;
    if (uniform) span_x = span_y = std::max(span_x, span_y);
    if (span_x == 0) span_x = 1;
    if (span_y == 0) span_y = 1;
    scale_x_ = Rational(kSize) / span_x;
    scale_y_ = Rational(kSize) / span_y;
  }

  std::string x(const Rational& v) const { return to_decimal((v - min_x_) * scale_x_ + kMargin); }
  std::string y(const Rational& v) const { return to_decimal((max_y_ - v) * scale_y_ + kMargin); }

  std::string header() const {
    const Rational w = (max_x_ - min_x_) * scale_x_ + 2 * kMargin;
    const Rational h = (max_y_ - min_y_) * scale_y_ + 2 * kMargin;
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           to_decimal(w) + "\" height=\"" + to_decimal(h) + "\" viewBox=\"0 0 " + to_decimal(w) + " " +
           to_decimal(h) + "\">\n";
  }

  std::string polygon(const std::vector<Point2>& pts, const std::string& style) const {
    std::string s = "  <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + x(pts[i].x) + "," + y(pts[i].y);
    return s + "\" " + style + "/>\n";
  }

  std::string line(const Point2& a, const Point2& b, const std::string& style) const {
    return "  <line x1=\"" + x(a.x) + "\" y1=\"" + y(a.y) + "\" x2=\"" + x(b.x) + "\" y2=\"" + y(b.y) + "\" " +
           style + "/>\n";
  }

  std::string circle(const Point2& c, int r, const std::string& style) const {
    return "  <circle cx=\"" + x(c.x) + "\" cy=\"" + y(c.y) + "\" r=\"" + std::to_string(r) + "\" " + style + "/>\n";
  }

  std::string text(const Point2& at, const std::string& label) const {
    return "  <text x=\"" + x(at.x) + "\" y=\"" + y(at.y) + "\" font-size=\"11\" text-anchor=\"middle\">" + label +
           "</text>\n";
  }

 private:
  static constexpr int kSize = 480;
  static constexpr int kMargin = 30;
  Rational min_x_, max_x_, min_y_, max_y_, scale_x_, scale_y_;
};

inline std::string vertex_fill(const GrassmannianGraph& g, int v) {
  if (g.helicity(v) == 1) return "white";
  if (g.helicity(v) == g.degree(v) - 1) return "black";
  return "gray";
}

/// Solves A x = b exactly by Gauss-Jordan elimination (A square, nonsingular).
inline std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t m = b.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    require(pivot < m, ErrorCode::InvalidInput, "singular layout system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < m; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = 0; r < m; ++r) b[r] /= a[r][r];
  return b;
}

}  // namespace detail

/// Boundary vertices on exact rational points of the unit circle, clockwise
/// on screen; internal vertices at the barycenters of their neighbors.
inline std::vector<Point2> graph_layout(const GrassmannianGraph& g) {
  require(g.n() >= 1, ErrorCode::InvalidInput, "graph has no boundary");
  const double pi = std::acos(-1.0);
  std::vector<Point2> pos(g.vertex_slots());
  for (int i = 1; i <= g.n(); ++i) {
    // Rational point ((1-t^2)/(1+t^2), 2t/(1+t^2)) with t close to tan(theta/2).
    const double theta = pi / 2 + pi / g.n() - 2 * pi * (i - 1) / g.n();
    const Rational t(static_cast<long long>(std::llround(std::tan(theta / 2) * 1000)), 1000);
    pos[g.boundary_vertex(i)] = Point2{(1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)};
  }
  const auto internal = g.internal_vertices();
  std::vector<int> index(g.vertex_slots(), -1);
  for (std::size_t a = 0; a < internal.size(); ++a) index[internal[a]] = static_cast<int>(a);
  const std::size_t m = internal.size();
  if (m == 0) return pos;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m, Rational(0)));
  std::vector<Rational> bx(m, Rational(0)), by(m, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    const int v = internal[r];
    a[r][r] = g.degree(v);
    for (int h : g.rotation(v)) {
      const int u = g.target(h);
      if (g.is_boundary(u)) {
        bx[r] += pos[u].x;
        by[r] += pos[u].y;
      } else {
        a[r][index[u]] -= 1;
      }
    }
  }
  const auto xs = detail::solve_exact(a, bx);
  const auto ys = detail::solve_exact(a, by);
  for (std::size_t r = 0; r < m; ++r) pos[internal[r]] = Point2{xs[r], ys[r]};
  return pos;
}

inline std::string svg_of_graph(const GrassmannianGraph& g) {
  const auto pos = graph_layout(g);
  std::vector<Point2> all;
  for (int v = 0; v < g.vertex_slots(); ++v)
    if (g.vertex_alive(v)) all.push_back(pos[v]);
  detail::SvgCanvas canvas(all);
  std::string s = canvas.header();
  s += "  <circle cx=\"" + canvas.x(0) + "\" cy=\"" + canvas.y(0) + "\" r=\"240\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
  for (int e : g.edges())
    s += canvas.line(pos[g.origin(2 * e)], pos[g.origin(2 * e + 1)], "stroke=\"black\" stroke-width=\"2\"");
  for (int v = 0; v < g.vertex_slots(); ++v) {
    if (!g.vertex_alive(v)) continue;
    if (g.is_boundary(v)) {
      s += canvas.circle(pos[v], 3, "fill=\"black\"");
      Point2 label{pos[v].x * Rational(112, 100), pos[v].y * Rational(112, 100)};
      s += canvas.text(label, std::to_string(g.boundary_index(v)));
    } else {
      s += canvas.circle(pos[v], 7, "fill=\"" + detail::vertex_fill(g, v) + "\" stroke=\"black\"");
    }
  }
  return s + "</svg>\n";
}

inline std::string svg_of_tiling(const PlanarTiling& t, const CyclicProjection& pi) {
  const auto Q = pi.polygon(t.k);
  detail::SvgCanvas canvas(Q, false);
  std::string s = canvas.header();
  s += canvas.polygon(Q, "fill=\"#f4f4f4\" stroke=\"black\" stroke-width=\"2\"");
  for (const auto& cell : t.cells) {
    std::vector<Point2> pts;
    for (Subset c : cell.corners) pts.push_back(pi(c));
    const std::string fill = cell.h == 1 ? "#ffffff" : (cell.h == static_cast<int>(pts.size()) - 1 ? "#888888" : "#cccccc");
    s += canvas.polygon(pts, "fill=\"" + fill + "\" stroke=\"black\"");
  }
  for (Subset label : t.labels()) s += canvas.text(pi(label), label.label());
  return s + "</svg>\n";
}

/// Membrane triangles drawn through the same projection as tilings.
inline std::string svg_of_membrane(const Membrane& m, const CyclicProjection& pi) {
  std::vector<Point2> all;
  for (Subset v : m.vertices) all.push_back(pi(v));
  detail::SvgCanvas canvas(all, false);
  std::string s = canvas.header();
  for (const auto& tri : m.triangles)
    s += canvas.polygon({pi(tri[0]), pi(tri[1]), pi(tri[2])}, "fill=\"#e8eef8\" stroke=\"black\"");
  for (const auto& [a, b] : m.boundary) s += canvas.line(pi(a), pi(b), "stroke=\"#c03030\" stroke-width=\"3\"");
  for (Subset v : m.vertices) s += canvas.text(pi(v), v.label());
  return s + "</svg>\n";
}

/// Undirected DOT with white, black and gray (neither) internal vertices.
inline std::string dot_of_graph(const GrassmannianGraph& g) {
  require(g.n() >= 1, ErrorCode::InvalidInput, "graph has no boundary");
  std::ostringstream out;
  out << "graph G {\n";
  auto name = [&](int v) {
    return g.is_boundary(v) ? "b" + std::to_string(g.boundary_index(v)) : "v" + std::to_string(v);
  };
  for (int v = 0; v < g.vertex_slots(); ++v) {
    if (!g.vertex_alive(v)) continue;
    if (g.is_boundary(v)) {
      out << "  " << name(v) << " [shape=box];\n";
    } else {
      const std::string fill = detail::vertex_fill(g, v);
      out << "  " << name(v) << " [shape=circle, style=filled, fillcolor=" << fill
          << ", fontcolor=" << (fill == "black" ? "white" : "black") << ", label=\"(" << g.helicity(v) << ","
          << g.degree(v) << ")\"];\n";
    }
  }
  for (int e : g.edges()) out << "  " << name(g.origin(2 * e)) << " -- " << name(g.origin(2 * e + 1)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace plabic
