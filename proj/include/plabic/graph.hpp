#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "plabic/error.hpp"
#include "plabic/rational.hpp"
#include "plabic/subset.hpp"

namespace plabic {

/// A disk-embedded graph stored as a combinatorial map.
///
/// Vertices 0..n-1 are the boundary vertices b_1..b_n, clockwise on the disk.
/// Edge e owns half-edges 2e and 2e+1, so the twin of half-edge h is h ^ 1.
/// Every vertex keeps the clockwise cyclic list of half-edges leaving it.
/// Editing primitives may leave dead vertices/edges behind; `compacted()`
/// renumbers everything and is called by every public transformation.
class GrassmannianGraph {
 public:
  struct Vertex {
    int boundary = 0;  // i for b_i, 0 for internal vertices
    int helicity = 0;
    std::vector<int> rotation;
    bool alive = true;
  };

  GrassmannianGraph() = default;
  explicit GrassmannianGraph(int n) : n_(n) {
    require(n >= 0 && n <= kMaxGroundSet, ErrorCode::InvalidInput, "bad boundary size");
    for (int i = 1; i <= n; ++i) vertices_.push_back(Vertex{i, 0, {}, true});
  }

  int n() const { return n_; }
  int vertex_slots() const { return static_cast<int>(vertices_.size()); }
  int half_edge_slots() const { return static_cast<int>(origin_.size()); }
  int edge_slots() const { return half_edge_slots() / 2; }

  bool vertex_alive(int v) const { return vertices_.at(v).alive; }
  bool edge_alive(int e) const { return origin_.at(2 * e) >= 0; }
  bool is_boundary(int v) const { return vertices_.at(v).boundary != 0; }
  int boundary_index(int v) const { return vertices_.at(v).boundary; }
  /// Vertex id of b_i.
  int boundary_vertex(int i) const { return i - 1; }
  int helicity(int v) const { return vertices_.at(v).helicity; }
  int degree(int v) const { return static_cast<int>(vertices_.at(v).rotation.size()); }
  const std::vector<int>& rotation(int v) const { return vertices_.at(v).rotation; }

  static int twin(int h) { return h ^ 1; }
  static int edge_of(int h) { return h / 2; }
  int origin(int h) const { return origin_.at(h); }
  int target(int h) const { return origin_.at(twin(h)); }

  /// Slot of half-edge h in the rotation of its origin.
  int slot_of(int h) const {
    const auto& rot = rotation(origin(h));
    const auto it = std::find(rot.begin(), rot.end(), h);
    require(it != rot.end(), ErrorCode::InvalidInput, "half-edge missing from rotation");
    return static_cast<int>(it - rot.begin());
  }

  std::vector<int> internal_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_slots(); ++v)
      if (vertices_[v].alive && !is_boundary(v)) out.push_back(v);
    return out;
  }

  std::vector<int> edges() const {
    std::vector<int> out;
    for (int e = 0; e < edge_slots(); ++e)
      if (edge_alive(e)) out.push_back(e);
    return out;
  }

  int internal_vertex_count() const { return static_cast<int>(internal_vertices().size()); }
  int edge_count() const { return static_cast<int>(edges().size()); }

  /// An edge is internal when neither endpoint is a boundary vertex.
  bool is_internal_edge(int e) const {
    return !is_boundary(origin(2 * e)) && !is_boundary(origin(2 * e + 1));
  }

  /// The unique half-edge leaving b_i (or -1 if b_i is isolated).
  int boundary_half_edge(int i) const {
    const auto& rot = rotation(boundary_vertex(i));
    return rot.empty() ? -1 : rot.front();
  }

  bool is_white(int v) const { return !is_boundary(v) && helicity(v) == 1; }
  bool is_black(int v) const { return !is_boundary(v) && helicity(v) == degree(v) - 1; }

  /// Boundary leaf: an internal vertex of degree 1 adjacent to a boundary vertex.
  bool is_boundary_leaf(int v) const {
    return !is_boundary(v) && degree(v) == 1 && is_boundary(target(rotation(v).front()));
  }

  // ---- editing primitives -------------------------------------------------

  int add_vertex(int helicity) {
    vertices_.push_back(Vertex{0, helicity, {}, true});
    return vertex_slots() - 1;
  }

  void set_helicity(int v, int h) {
    require(!is_boundary(v), ErrorCode::InvalidInput, "boundary vertices carry no helicity");
    vertices_.at(v).helicity = h;
  }

  /// New edge u-v; half-edge 2e is appended to u's rotation, 2e+1 to v's.
  int add_edge(int u, int v) {
    const int e = add_detached_edge(u, v);
    vertices_.at(u).rotation.push_back(2 * e);
    vertices_.at(v).rotation.push_back(2 * e + 1);
    return e;
  }

  /// New edge whose half-edges are not yet placed in any rotation.
  int add_detached_edge(int u, int v) {
    origin_.push_back(u);
    origin_.push_back(v);
    return edge_slots() - 1;
  }

  void set_rotation(int v, std::vector<int> half_edges) {
    for (int h : half_edges)
      require(h >= 0 && h < half_edge_slots(), ErrorCode::InvalidInput, "unknown half-edge");
    vertices_.at(v).rotation = std::move(half_edges);
    for (int h : vertices_[v].rotation) origin_[h] = v;
  }

  /// Puts `replacement` where `existing` sits in the rotation of existing's origin,
  /// moving the replacement's origin there.
  void replace_in_rotation(int existing, int replacement) {
    const int v = origin(existing);
    auto& rot = vertices_.at(v).rotation;
    const auto it = std::find(rot.begin(), rot.end(), existing);
    require(it != rot.end(), ErrorCode::InvalidInput, "half-edge missing from rotation");
    *it = replacement;
    origin_[replacement] = v;
  }

  /// Removes an edge; its half-edges disappear from the rotations.
  void remove_edge(int e) {
    for (int h : {2 * e, 2 * e + 1}) {
      const int v = origin_.at(h);
      if (v < 0) continue;
      auto& rot = vertices_[v].rotation;
      rot.erase(std::remove(rot.begin(), rot.end(), h), rot.end());
    }
    origin_[2 * e] = origin_[2 * e + 1] = -1;
  }

  /// Marks an edge dead without touching rotations (used after splicing).
  void kill_edge(int e) { origin_.at(2 * e) = origin_.at(2 * e + 1) = -1; }

  void remove_vertex(int v) {
    require(!is_boundary(v), ErrorCode::InvalidInput, "cannot remove a boundary vertex");
    for (int h : std::vector<int>(rotation(v))) remove_edge(edge_of(h));
    vertices_[v].alive = false;
    vertices_[v].rotation.clear();
  }

  void kill_vertex(int v) {
    vertices_.at(v).alive = false;
    vertices_[v].rotation.clear();
  }

  /// Copy with dead vertices/edges dropped; internal vertices keep their
  /// relative order, boundary vertices stay 0..n-1.
  GrassmannianGraph compacted() const {
    GrassmannianGraph out(n_);
    std::vector<int> vmap(vertex_slots(), -1);
    for (int v = 0; v < n_; ++v) vmap[v] = v;
    for (int v = n_; v < vertex_slots(); ++v)
      if (vertices_[v].alive) vmap[v] = out.add_vertex(vertices_[v].helicity);
    std::vector<int> hmap(half_edge_slots(), -1);
    for (int e = 0; e < edge_slots(); ++e) {
      if (!edge_alive(e)) continue;
      const int ne = out.add_detached_edge(vmap[origin_[2 * e]], vmap[origin_[2 * e + 1]]);
      hmap[2 * e] = 2 * ne;
      hmap[2 * e + 1] = 2 * ne + 1;
    }
    for (int v = 0; v < vertex_slots(); ++v) {
      if (vmap[v] < 0) continue;
      std::vector<int> rot;
      for (int h : vertices_[v].rotation) rot.push_back(hmap.at(h));
      out.vertices_[vmap[v]].rotation = std::move(rot);
    }
    return out;
  }

  bool is_compact() const {
    for (const auto& v : vertices_)
      if (!v.alive) return false;
    for (int o : origin_)
      if (o < 0) return false;
    return true;
  }

  // ---- validation ---------------------------------------------------------

  /// Structural checks: rotations consistent with half-edge origins, boundary
  /// degree 1, 0 <= h(v) <= deg(v), connected together with the disk boundary,
  /// and genus 0 (Euler characteristic 2 once the boundary circle is added).
  void validate() const;

  // ---- faces --------------------------------------------------------------

  struct Faces {
    /// Face to the left of each real half-edge (when walked away from its origin).
    std::vector<int> face_of_half_edge;
    /// Face ids 0..count-1; the region outside the disk is not counted.
    int count = 0;
    /// Real half-edges of each face in traversal order.
    std::vector<std::vector<int>> cycles;
    /// boundary_arcs[f]: indices i such that the arc from b_i to b_{i+1} lies on f.
    std::vector<std::vector<int>> boundary_arcs;
    /// before_boundary[i] (1-based) is the face between b_{i-1} and b_i.
    std::vector<int> before_boundary;

    bool is_boundary_face(int f) const { return !boundary_arcs.at(f).empty(); }
    int internal_count() const {
      int c = 0;
      for (int f = 0; f < count; ++f) c += boundary_arcs[f].empty() ? 1 : 0;
      return c;
    }
  };

  /// Faces of the disk, traced with the face kept on the left. The disk
  /// boundary is modeled by arcs b_i -> b_{i+1}; at b_i the clockwise order is
  /// (arc to b_{i+1}, inner edge, arc to b_{i-1}).
  Faces faces() const;

  /// Canonical string: equal strings iff the embedded graphs are isomorphic by
  /// a map fixing each boundary vertex. Vertices are discovered breadth first
  /// from b_1, b_2, ... and each rotation is read starting at its entry half-edge.
  std::string canonical_form() const;

  friend bool operator==(const GrassmannianGraph& a, const GrassmannianGraph& b) {
    return a.canonical_form() == b.canonical_form();
  }

 private:
  struct Augmented {
    int real = 0;                                // number of real half-edges
    std::vector<int> origin;                     // per augmented half-edge
    std::vector<std::vector<int>> rotation;      // per vertex
    std::vector<int> slot;                       // position of each half-edge in its rotation
    int next(int h) const {
      const int t = h ^ 1;
      const auto& rot = rotation[origin[t]];
      return rot[(slot[t] + 1) % rot.size()];
    }
  };

  Augmented augmented() const {
    require(is_compact(), ErrorCode::InvalidInput, "graph must be compacted first");
    Augmented a;
    a.real = half_edge_slots();
    const int total = a.real + 2 * n_;
    a.origin = origin_;
    a.origin.resize(total);
    a.rotation.resize(vertex_slots());
    for (int v = 0; v < vertex_slots(); ++v) a.rotation[v] = vertices_[v].rotation;
    for (int i = 0; i < n_; ++i) {
      a.origin[a.real + 2 * i] = i;                 // b_{i+1} -> b_{i+2}
      a.origin[a.real + 2 * i + 1] = (i + 1) % n_;  // reverse direction
    }
    for (int i = 0; i < n_; ++i) {
      std::vector<int> rot;
      rot.push_back(a.real + 2 * i);
      for (int h : vertices_[i].rotation) rot.push_back(h);
      rot.push_back(a.real + 2 * ((i - 1 + n_) % n_) + 1);
      a.rotation[i] = std::move(rot);
    }
    a.slot.assign(total, -1);
    for (int v = 0; v < vertex_slots(); ++v)
      for (int s = 0; s < static_cast<int>(a.rotation[v].size()); ++s) a.slot[a.rotation[v][s]] = s;
    return a;
  }

  int n_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<int> origin_;
};

inline void GrassmannianGraph::validate() const {
  require(n_ >= 1, ErrorCode::InvalidInput, "a Grassmannian graph needs at least one boundary vertex");
  require(is_compact(), ErrorCode::InvalidInput, "graph has dead entries");
  std::vector<int> seen(half_edge_slots(), 0);
  for (int v = 0; v < vertex_slots(); ++v) {
    for (int h : vertices_[v].rotation) {
      require(origin_[h] == v, ErrorCode::InvalidInput, "rotation lists a half-edge of another vertex");
      require(seen[h]++ == 0, ErrorCode::InvalidInput, "half-edge listed twice");
    }
  }
  for (int h = 0; h < half_edge_slots(); ++h)
    require(seen[h] == 1, ErrorCode::InvalidInput, "half-edge missing from rotations");
  for (int v = 0; v < vertex_slots(); ++v) {
    if (is_boundary(v)) {
      require(degree(v) == 1, ErrorCode::InvalidInput,
              "boundary vertex b_" + std::to_string(v + 1) + " must have degree 1");
    } else {
      require(degree(v) >= 1, ErrorCode::InvalidInput, "isolated internal vertex");
      require(helicity(v) >= 0 && helicity(v) <= degree(v), ErrorCode::InvalidInput,
              "helicity out of range at vertex " + std::to_string(v));
    }
  }
  const Augmented a = augmented();
  // Connectivity of graph plus boundary circle.
  std::vector<int> comp(vertex_slots(), 0);
  std::queue<int> q;
  q.push(0);
  comp[0] = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int h : a.rotation[v]) {
      const int u = a.origin[h ^ 1];
      if (!comp[u]) {
        comp[u] = 1;
        q.push(u);
      }
    }
  }
  for (int v = 0; v < vertex_slots(); ++v)
    require(comp[v] == 1, ErrorCode::InvalidInput, "component not attached to the disk boundary");
  // Euler characteristic of the sphere: V - (E + n) + (faces + outer) = 2.
  std::vector<char> visited(a.origin.size(), 0);
  int orbits = 0;
  for (int h = 0; h < static_cast<int>(a.origin.size()); ++h) {
    if (visited[h]) continue;
    ++orbits;
    for (int x = h; !visited[x]; x = a.next(x)) visited[x] = 1;
  }
  const int euler = vertex_slots() - (edge_slots() + n_) + orbits;
  require(euler == 2, ErrorCode::InvalidInput, "rotation system is not a planar disk embedding");
}

inline GrassmannianGraph::Faces GrassmannianGraph::faces() const {
  const Augmented a = augmented();
  const int total = static_cast<int>(a.origin.size());
  std::vector<int> orbit(total, -1);
  int orbits = 0;
  for (int h = 0; h < total; ++h) {
    if (orbit[h] >= 0) continue;
    for (int x = h; orbit[x] < 0; x = a.next(x)) orbit[x] = orbits;
    ++orbits;
  }
  // The outer region is the orbit of the forward arcs.
  const int outer = n_ > 0 ? orbit[a.real] : -1;
  std::vector<int> renumber(orbits, -1);
  Faces f;
  for (int o = 0; o < orbits; ++o)
    if (o != outer) renumber[o] = f.count++;
  f.face_of_half_edge.resize(a.real);
  f.cycles.resize(f.count);
  f.boundary_arcs.resize(f.count);
  std::vector<char> done(total, 0);
  for (int h = 0; h < total; ++h) {
    if (done[h] || orbit[h] == outer) continue;
    const int face = renumber[orbit[h]];
    for (int x = h; !done[x]; x = a.next(x)) {
      done[x] = 1;
      if (x < a.real) {
        f.cycles[face].push_back(x);
      } else {
        // Backward arc from b_{i+1} to b_i, i = (x - real - 1) / 2 (0-based).
        f.boundary_arcs[face].push_back((x - a.real - 1) / 2 + 1);
      }
    }
  }
  for (int h = 0; h < a.real; ++h) f.face_of_half_edge[h] = renumber[orbit[h]];
  f.before_boundary.assign(n_ + 1, -1);
  for (int i = 1; i <= n_; ++i) {
    // Arc between b_{i-1} and b_i has 0-based index (i-2 mod n).
    const int arc = (i - 2 + n_) % n_;
    f.before_boundary[i] = renumber[orbit[a.real + 2 * arc + 1]];
  }
  for (auto& arcs : f.boundary_arcs) std::sort(arcs.begin(), arcs.end());
  return f;
}

inline std::string GrassmannianGraph::canonical_form() const {
  const GrassmannianGraph& g = *this;
  require(is_compact(), ErrorCode::InvalidInput, "graph must be compacted first");
  std::vector<int> order;
  std::vector<int> entry(vertex_slots(), -1);
  std::vector<int> position(vertex_slots(), -1);
  for (int v = 0; v < n_; ++v) {
    position[v] = v;
    order.push_back(v);
    entry[v] = g.rotation(v).empty() ? -1 : g.rotation(v).front();
  }
  auto discover = [&](int h, std::queue<int>& q) {
    const int u = g.target(h);
    if (position[u] >= 0) return;
    position[u] = static_cast<int>(order.size());
    order.push_back(u);
    entry[u] = twin(h);
    q.push(u);
  };
  for (int i = 0; i < n_; ++i) {
    if (entry[i] < 0) continue;
    std::queue<int> q;
    discover(entry[i], q);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      const auto& rot = g.rotation(v);
      const int start = g.slot_of(entry[v]);
      for (std::size_t s = 0; s < rot.size(); ++s) discover(rot[(start + s) % rot.size()], q);
    }
  }
  require(static_cast<int>(order.size()) == g.internal_vertex_count() + n_, ErrorCode::InvalidInput,
          "vertex unreachable from the boundary");
  std::vector<int> canon(half_edge_slots(), -1);
  int next_id = 0;
  for (int v : order) {
    const auto& rot = g.rotation(v);
    if (rot.empty()) continue;
    const int start = g.slot_of(entry[v]);
    for (std::size_t s = 0; s < rot.size(); ++s) canon[rot[(start + s) % rot.size()]] = next_id++;
  }
  std::string out = std::to_string(n_) + ";";
  for (int v : order) {
    out += is_boundary(v) ? std::string("B") : std::to_string(helicity(v));
    out += '[';
    const auto& rot = g.rotation(v);
    const int start = rot.empty() ? 0 : g.slot_of(entry[v]);
    for (std::size_t s = 0; s < rot.size(); ++s) {
      if (s) out += ',';
      out += std::to_string(canon[twin(rot[(start + s) % rot.size()])]);
    }
    out += ']';
  }
  return out;
}

/// h(G) = n/2 + sum over internal v of (h(v) - deg(v)/2), exactly.
inline Rational graph_helicity(const GrassmannianGraph& g) {
  Rational total(g.n(), 2);
  for (int v : g.internal_vertices()) total += Rational(2 * g.helicity(v) - g.degree(v), 2);
  return total;
}

}  // namespace plabic
