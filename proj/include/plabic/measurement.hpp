#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "plabic/graph.hpp"
#include "plabic/orientation.hpp"
#include "plabic/positroid.hpp"
#include "plabic/rational.hpp"

namespace plabic {

using PluckerCoords = std::map<Subset, Rational>;

/// Projective Plücker vector over all k-subsets of [n] (zeros included).
struct PluckerVector {
  int k = 0;
  int n = 0;
  PluckerCoords coords;

  Rational at(Subset s) const {
    const auto it = coords.find(s);
    return it == coords.end() ? Rational(0) : it->second;
  }

  std::vector<Subset> support() const {
    std::vector<Subset> out;
    for (const auto& [s, value] : coords)
      if (value != 0) out.push_back(s);
    return out;
  }

  friend bool operator==(const PluckerVector&, const PluckerVector&) = default;
};

/// Per internal vertex v: coordinates indexed by h(v)-subsets of the slots of
/// v's clockwise rotation, slot s being element s+1.
struct VertexPluckerData {
  std::map<int, PluckerCoords> at;
};

/// Checks every relation
///   sum_{i in A\B} (-1)^{#{a in A : a > i} + #{b in B : b < i}} D_{A-i} D_{B+i} = 0
/// over (k+1)-subsets A and (k-1)-subsets B of C, where `order` lists C in the
/// chosen total order. Missing coordinates count as zero.
inline bool validate_plucker(const PluckerCoords& coords, int k, const std::vector<int>& order) {
  const int m = static_cast<int>(order.size());
  require(m <= kMaxGroundSet, ErrorCode::BoundExceeded, "index set too large");
  // Work with positions 1..m in the given order.
  std::map<int, int> position;
  for (int p = 0; p < m; ++p) position[order[p]] = p + 1;
  PluckerCoords local;
  for (const auto& [s, value] : coords) {
    Subset mapped;
    for (int x : s.elements()) {
      const auto it = position.find(x);
      require(it != position.end(), ErrorCode::IndexMismatch,
              "coordinate " + s.label() + " uses an index outside the ground set");
      mapped.insert(it->second);
    }
    require(s.size() == k, ErrorCode::IndexMismatch, "coordinate " + s.label() + " has the wrong size");
    local[mapped] = value;
  }
  auto get = [&](Subset s) {
    const auto it = local.find(s);
    return it == local.end() ? Rational(0) : it->second;
  };
  if (k <= 0 || k >= m) return true;
  const auto as = k_subsets(k + 1, m);
  const auto bs = k_subsets(k - 1, m);
  for (Subset A : as) {
    for (Subset B : bs) {
      Rational total = 0;
      for (int i : (A - B).elements()) {
        const Rational left = get(A.without(i));
        if (left == 0) continue;
        const Rational right = get(B.with(i));
        if (right == 0) continue;
        const int above = (A & Subset(~0u << i)).size();
        const int below = (B & Subset((1u << (i - 1)) - 1u)).size();
        const Rational product = left * right;
        if ((above + below) % 2 == 0) total += product;
        else total -= product;
      }
      if (total != 0) return false;
    }
  }
  return true;
}

inline bool validate_plucker(const PluckerVector& p) {
  std::vector<int> order(p.n);
  for (int i = 0; i < p.n; ++i) order[i] = i + 1;
  return validate_plucker(p.coords, p.k, order);
}

/// Maximal minors of the h x d matrix with columns (1, t_c, ..., t_c^{h-1}):
/// the minor on columns J is the product of t_b - t_a over a < b in J.
inline PluckerCoords vandermonde_point(int h, const std::vector<Rational>& nodes) {
  const int d = static_cast<int>(nodes.size());
  require(0 <= h && h <= d, ErrorCode::InvalidInput, "need 0 <= h <= d");
  for (int c = 1; c < d; ++c)
    require(nodes[c - 1] < nodes[c], ErrorCode::InvalidInput, "nodes must increase strictly");
  PluckerCoords out;
  for (Subset J : k_subsets(h, d)) {
    const auto el = J.elements();
    Rational minor = 1;
    for (std::size_t a = 0; a < el.size(); ++a)
      for (std::size_t b = a + 1; b < el.size(); ++b) minor *= nodes[el[b] - 1] - nodes[el[a] - 1];
    out[J] = minor;
  }
  return out;
}

/// Increasing rational nodes drawn from a seeded generator: each gap is p/q
/// with 1 <= p <= 9 and 1 <= q <= 6.
inline std::vector<Rational> sample_nodes(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 6);
  std::vector<Rational> nodes;
  Rational t = 0;
  for (int c = 0; c < d; ++c) {
    t += Rational(num(rng), den(rng));
    nodes.push_back(t);
  }
  return nodes;
}

/// A point of the positive Grassmannian Gr(h,d) from Vandermonde minors on
/// seeded nodes.
inline PluckerCoords sample_positive_point(int h, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return vandermonde_point(h, sample_nodes(d, rng));
}

/// Vertex data for every internal vertex of g, drawn from one seeded stream.
inline VertexPluckerData sample_vertex_data(const GrassmannianGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  VertexPluckerData data;
  for (int v : g.internal_vertices()) data.at[v] = vandermonde_point(g.helicity(v), sample_nodes(g.degree(v), rng));
  return data;
}

/// Every internal vertex has a positive coordinate for each h(v)-subset of
/// its slots, and nothing else.
inline void validate_vertex_data(const GrassmannianGraph& g, const VertexPluckerData& data) {
  for (int v : g.internal_vertices()) {
    const auto it = data.at.find(v);
    require(it != data.at.end(), ErrorCode::InvalidVertexData, "no data for vertex " + std::to_string(v));
    const auto expected = k_subsets(g.helicity(v), g.degree(v));
    require(it->second.size() == expected.size(), ErrorCode::InvalidVertexData,
            "vertex " + std::to_string(v) + " needs " + std::to_string(expected.size()) + " coordinates");
    for (Subset J : expected) {
      const auto c = it->second.find(J);
      require(c != it->second.end(), ErrorCode::InvalidVertexData,
              "vertex " + std::to_string(v) + " lacks coordinate " + J.label());
      require(c->second > 0, ErrorCode::InvalidVertexData,
              "vertex " + std::to_string(v) + " has a non-positive coordinate at " + J.label());
    }
  }
  for (const auto& [v, coords] : data.at)
    require(v >= 0 && v < g.vertex_slots() && !g.is_boundary(v), ErrorCode::InvalidVertexData,
            "data given for a non-internal vertex " + std::to_string(v));
}

/// D_I = sum over perfect orientations O with I(O) = I of the product over
/// internal v of the vertex coordinate at J(v,O), the slots pointing into v.
inline PluckerVector boundary_measurement(const GrassmannianGraph& g, const VertexPluckerData& data) {
  validate_vertex_data(g, data);
  PluckerVector out;
  out.n = g.n();
  std::optional<int> k;
  PluckerCoords sums;
  const auto internal = g.internal_vertices();
  for_each_perfect_orientation(g, [&](const PerfectOrientation& o) {
    const Subset I = boundary_sources(g, o);
    if (!k) k = I.size();
    Rational term = 1;
    for (int v : internal) term *= data.at.at(v).at(Subset(incoming_slots(g, o, v)));
    sums[I] += term;
  });
  require(k.has_value(), ErrorCode::NotOrientable, "graph has no perfect orientation");
  out.k = *k;
  for (Subset I : k_subsets(out.k, out.n)) out.coords[I] = 0;
  for (auto& [I, value] : sums) out.coords[I] = value;
  return out;
}

/// Positive weight per edge slot.
struct TorusElement {
  std::vector<Rational> t;
};

inline void require_positive(const std::vector<Rational>& values) {
  for (const auto& x : values) require(x > 0, ErrorCode::NonPositive, "torus entries must be positive");
}

/// (t_e) scales the coordinate of vertex v at J by the product of t_e over e in J.
inline VertexPluckerData torus_act(const GrassmannianGraph& g, const VertexPluckerData& data, const TorusElement& t) {
  require(static_cast<int>(t.t.size()) == g.edge_slots(), ErrorCode::SizeMismatch, "one torus entry per edge");
  require_positive(t.t);
  VertexPluckerData out = data;
  for (auto& [v, coords] : out.at) {
    const auto& rot = g.rotation(v);
    for (auto& [J, value] : coords)
      for (int s : J.elements()) value *= t.t[GrassmannianGraph::edge_of(rot[s - 1])];
  }
  return out;
}

/// Boundary torus on the big Grassmannian: D_I scales by the product of t_i over i in I.
inline PluckerVector torus_act(const PluckerVector& p, const std::vector<Rational>& t) {
  require(static_cast<int>(t.size()) == p.n, ErrorCode::SizeMismatch, "one torus entry per boundary vertex");
  require_positive(t);
  PluckerVector out = p;
  for (auto& [I, value] : out.coords)
    for (int i : I.elements()) value *= t[i - 1];
  return out;
}

/// Torus element that is t_i on the edge at b_i and 1 elsewhere.
inline TorusElement boundary_torus(const GrassmannianGraph& g, const std::vector<Rational>& t) {
  require(static_cast<int>(t.size()) == g.n(), ErrorCode::SizeMismatch, "one torus entry per boundary vertex");
  TorusElement out{std::vector<Rational>(g.edge_slots(), Rational(1))};
  for (int i = 1; i <= g.n(); ++i) {
    const int h = g.boundary_half_edge(i);
    if (h >= 0) out.t[GrassmannianGraph::edge_of(h)] *= t[i - 1];
  }
  return out;
}

/// Torus element supported on internal edges (both ends internal).
inline TorusElement internal_torus(const GrassmannianGraph& g, const std::vector<Rational>& per_edge) {
  require(static_cast<int>(per_edge.size()) == g.edge_slots(), ErrorCode::SizeMismatch, "one entry per edge");
  TorusElement out{std::vector<Rational>(g.edge_slots(), Rational(1))};
  for (int e : g.edges())
    if (g.is_internal_edge(e)) out.t[e] = per_edge[e];
  return out;
}

inline std::vector<Rational> sample_positive_rationals(std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 12), den(1, 7);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(num(rng), den(rng));
  return out;
}

/// Divides by the coordinate at the Gale-minimal basis of the support.
inline PluckerVector normalized(const PluckerVector& p) {
  const auto support = p.support();
  require(!support.empty(), ErrorCode::EmptyInput, "Plücker vector is identically zero");
  const auto minimum = gale_minimum(support, 1, p.n);
  require(minimum.has_value(), ErrorCode::NotPositroid, "support has no Gale-minimal basis");
  const Rational scale = p.at(*minimum);
  PluckerVector out = p;
  for (auto& [I, value] : out.coords) value /= scale;
  return out;
}

}  // namespace plabic
