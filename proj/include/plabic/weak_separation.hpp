#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <vector>

#include "plabic/moves.hpp"
#include "plabic/refine.hpp"
#include "plabic/subset.hpp"

namespace plabic {

/// No a < b < c < d with a, c in one of I\J, J\I and b, d in the other.
inline bool weakly_separated(Subset I, Subset J) {
  require(I.size() == J.size(), ErrorCode::SizeMismatch,
          "weak separation compares subsets of equal size (" + I.label() + " vs " + J.label() + ")");
  const Subset only_i = I - J;
  const Subset diff = only_i | (J - I);
  int changes = 0;
  int last = -1;
  for (int x : diff.elements()) {
    const int side = only_i.contains(x) ? 0 : 1;
    if (last >= 0 && side != last) ++changes;
    last = side;
  }
  return changes < 3;
}

inline bool is_ws_collection(const std::vector<Subset>& sets) {
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b)
      if (!weakly_separated(sets[a], sets[b])) return false;
  return true;
}

/// Default size limit for exhaustive enumeration: n <= 8 when min(k, n-k) <= 2,
/// n <= 6 otherwise.
inline int default_ws_bound(int k, int n) { return std::min(k, n - k) <= 2 ? 8 : 6; }

/// All maximal-by-inclusion weakly separated collections of k-subsets of [n],
/// each sorted, by Bron-Kerbosch on the compatibility graph. Cyclic intervals
/// are separated from everything and therefore seed every collection.
inline std::vector<std::vector<Subset>> maximal_ws_collections(int k, int n, int bound = -1) {
  require(0 <= k && k <= n && n >= 1, ErrorCode::InvalidInput, "need 0 <= k <= n");
  if (bound < 0) bound = default_ws_bound(k, n);
  require(n <= bound, ErrorCode::BoundExceeded,
          "n = " + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(bound));
  const auto all = k_subsets(k, n);
  const int m = static_cast<int>(all.size());
  std::vector<std::vector<char>> ok(m, std::vector<char>(m, 1));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) ok[a][b] = ok[b][a] = weakly_separated(all[a], all[b]);
  std::vector<int> base, pool;
  for (int a = 0; a < m; ++a) {
    const bool universal = std::all_of(ok[a].begin(), ok[a].end(), [](char c) { return c != 0; });
    (universal ? base : pool).push_back(a);
  }
  std::vector<std::vector<Subset>> out;
  std::vector<int> r = base;
  std::function<void(std::vector<int>, std::vector<int>)> expand = [&](std::vector<int> p, std::vector<int> x) {
    if (p.empty() && x.empty()) {
      std::vector<Subset> collection;
      for (int a : r) collection.push_back(all[a]);
      std::sort(collection.begin(), collection.end());
      out.push_back(std::move(collection));
      return;
    }
    int pivot = -1, best = -1;
    for (const auto* group : {&p, &x}) {
      for (int u : *group) {
        int c = 0;
        for (int v : p) c += ok[u][v];
        if (c > best) best = c, pivot = u;
      }
    }
    std::vector<int> candidates;
    for (int v : p)
      if (!ok[pivot][v] || v == pivot) candidates.push_back(v);
    for (int v : candidates) {
      std::vector<int> np, nx;
      for (int u : p)
        if (u != v && ok[v][u]) np.push_back(u);
      for (int u : x)
        if (u != v && ok[v][u]) nx.push_back(u);
      r.push_back(v);
      expand(std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  expand(pool, {});
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

/// Complete reduced plabic graphs of one type indexed by their face-label sets.
class FaceLabelIndex {
 public:
  FaceLabelIndex(int k, int n) {
    for (auto& g : flip_graph(k, n).nodes) {
      auto labels = face_labels(g);
      std::sort(labels.begin(), labels.end());
      graphs_.emplace(std::move(labels), std::move(g));
    }
  }

  const GrassmannianGraph* find(const std::vector<Subset>& sorted_labels) const {
    const auto it = graphs_.find(sorted_labels);
    return it == graphs_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::vector<Subset>, GrassmannianGraph> graphs_;
};

inline const FaceLabelIndex& face_label_index(int k, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, FaceLabelIndex> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({k, n});
  if (it == cache.end()) it = cache.emplace(std::make_pair(k, n), FaceLabelIndex(k, n)).first;
  return it->second;
}

}  // namespace detail

/// A complete reduced plabic graph of type (k,n) whose face labels are exactly
/// the maximal weakly separated collection S, looked up in the flip graph.
inline GrassmannianGraph plabic_from_maximal_ws(int n, std::vector<Subset> sets) {
  require(!sets.empty(), ErrorCode::EmptyInput, "empty collection");
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  const int k = sets.front().size();
  for (Subset s : sets) {
    require(s.size() == k, ErrorCode::SizeMismatch, "subsets of different sizes");
    require(s.elements().empty() || s.max_element() <= n, ErrorCode::InvalidInput,
            "subset " + s.label() + " is not inside [" + std::to_string(n) + "]");
  }
  require(is_ws_collection(sets), ErrorCode::NotWS, "collection is not weakly separated");
  for (Subset candidate : k_subsets(k, n)) {
    if (std::binary_search(sets.begin(), sets.end(), candidate)) continue;
    bool compatible = true;
    for (Subset s : sets) compatible = compatible && weakly_separated(s, candidate);
    require(!compatible, ErrorCode::NotMaximal, candidate.label() + " can be added to the collection");
  }
  if (k == 0 || k == n) return build_reduced_plabic(DecoratedPermutation::shift(k, n));
  const auto* g = detail::face_label_index(k, n).find(sets);
  if (g == nullptr) throw std::logic_error("maximal weakly separated collection missing from the flip graph");
  return *g;
}

}  // namespace plabic
