#pragma once

#include <map>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "plabic/bridge.hpp"
#include "plabic/graph.hpp"
#include "plabic/refine.hpp"
#include "plabic/strands.hpp"

namespace plabic {

enum class MoveKind { WhiteContraction, Square, BlackContraction };  // (1,4), (2,4), (3,4)

inline std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::WhiteContraction: return "(1,4)";
    case MoveKind::Square: return "(2,4)";
    case MoveKind::BlackContraction: return "(3,4)";
  }
  return "?";
}

/// Where a move applies: an edge id for (1,4)/(3,4), a face id for (2,4).
struct MoveSite {
  MoveKind kind = MoveKind::Square;
  int index = 0;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

namespace detail {

inline bool is_trivalent_with(const GrassmannianGraph& g, int v, int h) {
  return !g.is_boundary(v) && g.degree(v) == 3 && g.helicity(v) == h;
}

inline bool has_parallel_edges(const GrassmannianGraph& g, int u, int v) {
  int count = 0;
  for (int h : g.rotation(u))
    if (g.target(h) == v) ++count;
  return count > 1;
}

inline bool contraction_site(const GrassmannianGraph& g, int e, int h) {
  const int u = g.origin(2 * e);
  const int v = g.origin(2 * e + 1);
  return u != v && is_trivalent_with(g, u, h) && is_trivalent_with(g, v, h) && !has_parallel_edges(g, u, v);
}

/// The four vertices of an alternating square face, or empty.
inline std::vector<int> square_vertices(const GrassmannianGraph& g, const GrassmannianGraph::Faces& faces, int f) {
  if (f < 0 || f >= faces.count || faces.is_boundary_face(f)) return {};
  const auto& cycle = faces.cycles[f];
  if (cycle.size() != 4) return {};
  std::vector<int> verts;
  for (int h : cycle) verts.push_back(g.origin(h));
  std::set<int> distinct(verts.begin(), verts.end());
  if (distinct.size() != 4) return {};
  for (int t = 0; t < 4; ++t) {
    const int v = verts[t];
    if (g.is_boundary(v) || g.degree(v) != 3) return {};
    if (g.helicity(v) != 1 && g.helicity(v) != 2) return {};
    if (g.helicity(v) == g.helicity(verts[(t + 1) % 4])) return {};
  }
  return verts;
}

}  // namespace detail

/// Every site where a move applies, edges first, then faces.
inline std::vector<MoveSite> move_sites(const GrassmannianGraph& g) {
  std::vector<MoveSite> out;
  for (int e : g.edges()) {
    if (detail::contraction_site(g, e, 1)) out.push_back({MoveKind::WhiteContraction, e});
    if (detail::contraction_site(g, e, 2)) out.push_back({MoveKind::BlackContraction, e});
  }
  const auto faces = g.faces();
  for (int f = 0; f < faces.count; ++f)
    if (!detail::square_vertices(g, faces, f).empty()) out.push_back({MoveKind::Square, f});
  return out;
}

/// Applies one move. (1,4) and (3,4) re-pair the four outer edges of two
/// same-colored trivalent vertices; (2,4) swaps the colors around a square face.
inline GrassmannianGraph apply_move(const GrassmannianGraph& g, const MoveSite& site) {
  GrassmannianGraph out = g;
  if (site.kind == MoveKind::Square) {
    const auto verts = detail::square_vertices(g, g.faces(), site.index);
    require(!verts.empty(), ErrorCode::PatternMismatch,
            "face " + std::to_string(site.index) + " is not an alternating square of trivalent vertices");
    for (int v : verts) out.set_helicity(v, 3 - g.helicity(v));
    return out;
  }
  const int color = site.kind == MoveKind::WhiteContraction ? 1 : 2;
  require(site.index >= 0 && site.index < g.edge_slots() && detail::contraction_site(g, site.index, color),
          ErrorCode::PatternMismatch,
          "edge " + std::to_string(site.index) + " does not join two trivalent vertices of the required color");
  const int hu = 2 * site.index;
  const int hv = hu + 1;
  const int u = g.origin(hu);
  const int v = g.origin(hv);
  const auto& ru = g.rotation(u);
  const auto& rv = g.rotation(v);
  const int su = g.slot_of(hu);
  const int sv = g.slot_of(hv);
  const int a = ru[(su + 1) % 3], b = ru[(su + 2) % 3];
  const int c = rv[(sv + 1) % 3], d = rv[(sv + 2) % 3];
  out.set_rotation(u, {hu, b, c});
  out.set_rotation(v, {hv, d, a});
  return out;
}

/// Move-equivalence class by breadth-first search over moves, deduplicated by
/// canonical form. Throws CapExceeded once more than `cap` graphs are found.
inline std::vector<GrassmannianGraph> move_equivalence_class(const GrassmannianGraph& g, std::size_t cap = 100000) {
  std::vector<GrassmannianGraph> out;
  std::set<std::string> seen;
  std::queue<GrassmannianGraph> frontier;
  seen.insert(g.canonical_form());
  frontier.push(g);
  while (!frontier.empty()) {
    GrassmannianGraph cur = std::move(frontier.front());
    frontier.pop();
    for (const auto& site : move_sites(cur)) {
      GrassmannianGraph next = apply_move(cur, site);
      if (seen.insert(next.canonical_form()).second) {
        require(seen.size() <= cap, ErrorCode::CapExceeded,
                "move-equivalence class has more than " + std::to_string(cap) + " graphs");
        frontier.push(std::move(next));
      }
    }
    out.push_back(std::move(cur));
  }
  return out;
}

/// Reduced plabic graphs are move-equivalent exactly when their decorated
/// strand permutations agree.
inline bool are_move_equivalent(const GrassmannianGraph& a, const GrassmannianGraph& b) {
  require(is_plabic(a) && is_plabic(b), ErrorCode::InvalidInput, "move equivalence needs plabic graphs");
  require(is_reduced(a).reduced && is_reduced(b).reduced, ErrorCode::NotReduced,
          "move equivalence needs reduced graphs");
  return a.n() == b.n() && strand_permutation(a) == strand_permutation(b);
}

struct FlipGraph {
  int k = 0;
  int n = 0;
  std::vector<GrassmannianGraph> nodes;
  std::vector<std::string> keys;  // canonical forms, parallel to nodes
  struct Edge {
    int from;
    int to;
    MoveKind kind;
  };
  std::vector<Edge> edges;

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(nodes.size());
    for (const auto& e : edges) {
      adj[e.from].push_back(e.to);
      adj[e.to].push_back(e.from);
    }
    return adj;
  }

  std::vector<int> distances_from(int source) const {
    const auto adj = adjacency();
    std::vector<int> dist(nodes.size(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u : adj[v]) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
      }
    }
    return dist;
  }

  bool connected() const {
    if (nodes.empty()) return true;
    for (int d : distances_from(0))
      if (d < 0) return false;
    return true;
  }

  int diameter() const {
    int best = 0;
    for (int s = 0; s < static_cast<int>(nodes.size()); ++s)
      for (int d : distances_from(s)) best = std::max(best, d);
    return best;
  }
};

inline constexpr int kDefaultFlipBound = 8;

/// All complete reduced plabic graphs of type (k,n), reached by moves from a
/// bridge-built seed, with one edge per move between distinct graphs.
inline FlipGraph flip_graph(int k, int n, int bound = kDefaultFlipBound) {
  require(n <= bound, ErrorCode::BoundExceeded,
          "n = " + std::to_string(n) + " exceeds the configured bound " + std::to_string(bound));
  require(1 <= k && k <= n - 1, ErrorCode::InvalidInput, "flip graphs need 1 <= k <= n-1");
  FlipGraph fg;
  fg.k = k;
  fg.n = n;
  std::unordered_map<std::string, int> index;
  const auto seed = build_reduced_plabic(DecoratedPermutation::shift(k, n));
  index.emplace(seed.canonical_form(), 0);
  fg.nodes.push_back(seed);
  fg.keys.push_back(seed.canonical_form());
  std::set<std::pair<int, int>> seen_edges;
  for (std::size_t cur = 0; cur < fg.nodes.size(); ++cur) {
    const auto sites = move_sites(fg.nodes[cur]);
    for (const auto& site : sites) {
      GrassmannianGraph next = apply_move(fg.nodes[cur], site);
      std::string key = next.canonical_form();
      auto [it, inserted] = index.emplace(key, static_cast<int>(fg.nodes.size()));
      if (inserted) {
        fg.nodes.push_back(std::move(next));
        fg.keys.push_back(std::move(key));
      }
      const int a = static_cast<int>(cur);
      const int b = it->second;
      if (a != b && seen_edges.insert({std::min(a, b), std::max(a, b)}).second)
        fg.edges.push_back({a, b, site.kind});
    }
  }
  return fg;
}

/// Contracts every edge between two internal vertices of the same color
/// (both white, or both black), leaving a bipartite graph.
inline GrassmannianGraph contract_same_color(const GrassmannianGraph& g) {
  GrassmannianGraph out = g;
  auto color = [&](int v) {
    if (out.is_boundary(v) || out.degree(v) < 2) return 0;
    if (out.helicity(v) == 1) return 1;
    if (out.helicity(v) == out.degree(v) - 1) return 2;
    return 0;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e = 0; e < out.edge_slots() && !changed; ++e) {
      if (!out.edge_alive(e)) continue;
      const int u = out.origin(2 * e);
      const int v = out.origin(2 * e + 1);
      if (u == v || color(u) == 0 || color(u) != color(v) || detail::has_parallel_edges(out, u, v)) continue;
      detail::contract_edge(out, 2 * e);
      changed = true;
    }
  }
  return out.compacted();
}

/// Canonical forms of the bipartite representatives of all complete reduced
/// plabic graphs of type (k,n).
inline std::set<std::string> contraction_classes(int k, int n, int bound = kDefaultFlipBound) {
  std::set<std::string> out;
  for (const auto& g : flip_graph(k, n, bound).nodes) out.insert(contract_same_color(g).canonical_form());
  return out;
}

}  // namespace plabic
