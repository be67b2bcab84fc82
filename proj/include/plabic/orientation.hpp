#pragma once

#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "plabic/graph.hpp"
#include "plabic/positroid.hpp"

namespace plabic {

/// Direction of every edge. `forward[e]` means edge e points from the origin
/// of half-edge 2e to the origin of half-edge 2e+1.
struct PerfectOrientation {
  std::vector<char> forward;

  /// True when the edge of half-edge h points into origin(h).
  bool points_into(int h) const {
    const bool f = forward.at(h / 2) != 0;
    return (h % 2 == 0) ? !f : f;
  }

  friend bool operator==(const PerfectOrientation&, const PerfectOrientation&) = default;
  friend auto operator<=>(const PerfectOrientation&, const PerfectOrientation&) = default;
};

/// Boundary indices whose edge points away from b_i, into the disk.
inline Subset boundary_sources(const GrassmannianGraph& g, const PerfectOrientation& o) {
  Subset s;
  for (int i = 1; i <= g.n(); ++i) {
    const int h = g.boundary_half_edge(i);
    if (h >= 0 && !o.points_into(h)) s.insert(i);
  }
  return s;
}

/// Slots of v's rotation whose edges point into v, as a bitmask.
inline std::uint32_t incoming_slots(const GrassmannianGraph& g, const PerfectOrientation& o, int v) {
  std::uint32_t mask = 0;
  const auto& rot = g.rotation(v);
  for (std::size_t s = 0; s < rot.size(); ++s)
    if (o.points_into(rot[s])) mask |= 1u << s;
  return mask;
}

inline bool is_perfect_orientation(const GrassmannianGraph& g, const PerfectOrientation& o) {
  if (static_cast<int>(o.forward.size()) != g.edge_slots()) return false;
  for (int v : g.internal_vertices())
    if (std::popcount(incoming_slots(g, o, v)) != g.helicity(v)) return false;
  return true;
}

namespace detail {

/// Degree-constrained orientation as a capacitated bipartite matching: every
/// edge chooses its head; internal vertices accept exactly h(v) heads and
/// boundary vertices any number.
class OrientationMatcher {
 public:
  explicit OrientationMatcher(const GrassmannianGraph& g)
      : g_(g), head_(g.edge_slots(), -1), load_(g.vertex_slots(), 0) {}

  std::optional<PerfectOrientation> solve() {
    std::vector<int> must, optional;
    for (int e : g_.edges()) {
      const bool bu = g_.is_boundary(g_.origin(2 * e));
      const bool bv = g_.is_boundary(g_.origin(2 * e + 1));
      if (!bu && !bv) must.push_back(e);
      else if (!(bu && bv)) optional.push_back(e);
    }
    for (int e : must) {
      visited_.assign(g_.vertex_slots(), 0);
      if (!augment(e)) return std::nullopt;
    }
    for (int e : optional) {
      visited_.assign(g_.vertex_slots(), 0);
      augment(e);
    }
    for (int v : g_.internal_vertices())
      if (load_[v] != g_.helicity(v)) return std::nullopt;
    PerfectOrientation o;
    o.forward.assign(g_.edge_slots(), 1);
    for (int e : g_.edges()) {
      int head = head_[e];
      if (head < 0) {
        // Unassigned edges touch a boundary vertex, which absorbs them.
        head = g_.is_boundary(g_.origin(2 * e + 1)) ? g_.origin(2 * e + 1) : g_.origin(2 * e);
      }
      o.forward[e] = (head == g_.origin(2 * e + 1)) ? 1 : 0;
    }
    return o;
  }

 private:
  bool augment(int e) {
    for (int v : endpoints(e)) {
      if (visited_[v]) continue;
      visited_[v] = 1;
      if (load_[v] < g_.helicity(v)) {
        assign(e, v);
        return true;
      }
      for (int h : g_.rotation(v)) {
        const int other = GrassmannianGraph::edge_of(h);
        if (other == e || head_[other] != v) continue;
        const int before = head_[other];
        head_[other] = -1;
        --load_[v];
        if (augment(other)) {
          assign(e, v);
          return true;
        }
        head_[other] = before;
        ++load_[v];
      }
    }
    return false;
  }

  std::vector<int> endpoints(int e) const {
    std::vector<int> out;
    for (int v : {g_.origin(2 * e), g_.origin(2 * e + 1)})
      if (!g_.is_boundary(v) && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
  }

  void assign(int e, int v) {
    head_[e] = v;
    ++load_[v];
  }

  const GrassmannianGraph& g_;
  std::vector<int> head_;
  std::vector<int> load_;
  std::vector<char> visited_;
};

}  // namespace detail

/// Some perfect orientation, or nullopt if none exists.
inline std::optional<PerfectOrientation> find_perfect_orientation(const GrassmannianGraph& g) {
  return detail::OrientationMatcher(g).solve();
}

/// Calls `visit` for every perfect orientation. Exhaustive backtracking over
/// edges in breadth-first order, pruning on each internal vertex's remaining
/// in-degree budget.
inline void for_each_perfect_orientation(const GrassmannianGraph& g,
                                         const std::function<void(const PerfectOrientation&)>& visit) {
  std::vector<int> order;
  {
    std::vector<char> seen_edge(g.edge_slots(), 0), seen_vertex(g.vertex_slots(), 0);
    for (int root = 0; root < g.vertex_slots(); ++root) {
      if (seen_vertex[root] || !g.vertex_alive(root)) continue;
      std::queue<int> q;
      q.push(root);
      seen_vertex[root] = 1;
      while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int h : g.rotation(v)) {
          const int e = GrassmannianGraph::edge_of(h);
          if (!seen_edge[e]) {
            seen_edge[e] = 1;
            order.push_back(e);
          }
          const int u = g.target(h);
          if (!seen_vertex[u]) {
            seen_vertex[u] = 1;
            q.push(u);
          }
        }
      }
    }
  }
  std::vector<int> need(g.vertex_slots(), 0), open(g.vertex_slots(), 0);
  for (int v : g.internal_vertices()) {
    need[v] = g.helicity(v);
    open[v] = g.degree(v);
  }
  PerfectOrientation o;
  o.forward.assign(g.edge_slots(), 1);
  auto feasible = [&](int v) { return g.is_boundary(v) || (need[v] >= 0 && need[v] <= open[v]); };

  std::function<void(std::size_t)> step = [&](std::size_t idx) {
    if (idx == order.size()) {
      visit(o);
      return;
    }
    const int e = order[idx];
    const int a = g.origin(2 * e);
    const int b = g.origin(2 * e + 1);
    for (int forward = 0; forward <= 1; ++forward) {
      const int head = forward ? b : a;
      o.forward[e] = static_cast<char>(forward);
      --open[a];
      --open[b];
      --need[head];
      if (feasible(a) && feasible(b)) step(idx + 1);
      ++need[head];
      ++open[a];
      ++open[b];
    }
  };
  step(0);
}

inline std::vector<PerfectOrientation> enumerate_perfect_orientations(const GrassmannianGraph& g) {
  std::vector<PerfectOrientation> out;
  for_each_perfect_orientation(g, [&](const PerfectOrientation& o) { out.push_back(o); });
  return out;
}

/// M(G) = {I(O)} over all perfect orientations O.
inline Positroid positroid_of_graph(const GrassmannianGraph& g) {
  std::set<Subset> sets;
  for_each_perfect_orientation(g, [&](const PerfectOrientation& o) { sets.insert(boundary_sources(g, o)); });
  require(!sets.empty(), ErrorCode::NotOrientable, "graph has no perfect orientation");
  return Positroid{sets.begin()->size(), g.n(), std::vector<Subset>(sets.begin(), sets.end())};
}

}  // namespace plabic
