#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "plabic/error.hpp"
#include "plabic/subset.hpp"

namespace plabic {

/// A permutation of [n] whose fixed points carry a color in {0, 1}.
class DecoratedPermutation {
 public:
  DecoratedPermutation() = default;

  /// `images[i-1]` is w(i). `fixed_colors` maps each fixed point to its color
  /// and must not mention any other position.
  DecoratedPermutation(std::vector<int> images, const std::map<int, int>& fixed_colors = {})
      : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    require(n <= kMaxGroundSet, ErrorCode::BoundExceeded, "permutation too large");
    inverse_.assign(n, 0);
    colors_.assign(n, -1);
    for (int i = 1; i <= n; ++i) {
      const int image = images_[i - 1];
      require(image >= 1 && image <= n && inverse_[image - 1] == 0, ErrorCode::InvalidInput,
              "images do not form a permutation of [" + std::to_string(n) + "]");
      inverse_[image - 1] = i;
    }
    for (const auto& [point, color] : fixed_colors) {
      require(point >= 1 && point <= n && images_[point - 1] == point, ErrorCode::InvalidInput,
              "color given for non-fixed point " + std::to_string(point));
      require(color == 0 || color == 1, ErrorCode::InvalidInput, "fixed point colors are 0 or 1");
      colors_[point - 1] = color;
    }
    for (int i = 1; i <= n; ++i) {
      require(images_[i - 1] != i || colors_[i - 1] >= 0, ErrorCode::InvalidInput,
              "fixed point " + std::to_string(i) + " has no color");
    }
  }

  /// w(i) = i + k mod n; for k = 0 (k = n) the identity colored 0 (colored 1).
  static DecoratedPermutation shift(int k, int n) {
    require(n >= 1 && k >= 0 && k <= n, ErrorCode::InvalidInput, "shift needs 0 <= k <= n, n >= 1");
    std::vector<int> images(n);
    std::map<int, int> colors;
    for (int i = 1; i <= n; ++i) {
      images[i - 1] = mod1(i + k, n);
      if (images[i - 1] == i) colors[i] = (k == n) ? 1 : 0;
    }
    return DecoratedPermutation(std::move(images), colors);
  }

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i - 1); }
  int inverse(int j) const { return inverse_.at(j - 1); }
  bool is_fixed(int i) const { return images_.at(i - 1) == i; }
  /// Color of a fixed point; -1 for points that are not fixed.
  int color(int i) const { return colors_.at(i - 1); }
  const std::vector<int>& images() const { return images_; }

  std::map<int, int> fixed_colors() const {
    std::map<int, int> out;
    for (int i = 1; i <= n(); ++i)
      if (is_fixed(i)) out[i] = colors_[i - 1];
    return out;
  }

  bool has_fixed_points() const {
    for (int i = 1; i <= n(); ++i)
      if (is_fixed(i)) return true;
    return false;
  }

  friend bool operator==(const DecoratedPermutation&, const DecoratedPermutation&) = default;

 private:
  std::vector<int> images_;
  std::vector<int> inverse_;
  std::vector<int> colors_;
};

/// A cyclic sequence (J_1, ..., J_n) of k-subsets obeying the one-step rule.
class GrassmannNecklace {
 public:
  GrassmannNecklace() = default;

  /// `sets[i-1]` is J_i. Throws InvalidNecklace if the step rule fails.
  GrassmannNecklace(int k, int n, std::vector<Subset> sets) : k_(k), n_(n), sets_(std::move(sets)) {
    require(n >= 1 && n <= kMaxGroundSet, ErrorCode::InvalidNecklace, "bad ground set size");
    require(static_cast<int>(sets_.size()) == n, ErrorCode::InvalidNecklace,
            "a necklace of type (k,n) has n entries");
    const Subset ground = Subset::full(n);
    for (int i = 1; i <= n; ++i) {
      const Subset cur = sets_[i - 1];
      require(cur.size() == k && cur.is_subset_of(ground), ErrorCode::InvalidNecklace,
              "J_" + std::to_string(i) + " is not a " + std::to_string(k) + "-subset of [n]");
    }
    for (int i = 1; i <= n; ++i) {
      const Subset cur = sets_[i - 1];
      const Subset next = sets_[i % n];
      if (next == cur) continue;
      const bool ok = cur.contains(i) && (cur.without(i) - next).empty() &&
                      (next - cur.without(i)).size() == 1;
      require(ok, ErrorCode::InvalidNecklace,
              "step rule fails between J_" + std::to_string(i) + " and J_" + std::to_string(i % n + 1));
    }
  }

  int k() const { return k_; }
  int n() const { return n_; }
  /// J_i for 1-based i (taken mod n).
  Subset operator[](int i) const { return sets_.at(mod1(i, n_) - 1); }
  const std::vector<Subset>& sets() const { return sets_; }

  friend bool operator==(const GrassmannNecklace&, const GrassmannNecklace&) = default;

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<Subset> sets_;
};

/// A set of k-subsets of [n] (sorted, duplicate free). Used both for arbitrary
/// candidate collections and for actual positroids.
struct Positroid {
  int k = 0;
  int n = 0;
  std::vector<Subset> bases;

  bool contains(Subset s) const { return std::binary_search(bases.begin(), bases.end(), s); }
  friend bool operator==(const Positroid&, const Positroid&) = default;
};

inline Positroid make_collection(int n, std::vector<Subset> sets) {
  require(!sets.empty(), ErrorCode::EmptyInput, "empty collection");
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  const int k = sets.front().size();
  for (Subset s : sets) {
    require(s.size() == k, ErrorCode::SizeMismatch, "subsets of different sizes");
    require(s.is_subset_of(Subset::full(n)), ErrorCode::InvalidInput, "subset outside [n]");
  }
  return Positroid{k, n, std::move(sets)};
}

/// Elements of s sorted by position in the cyclic order starting at `start`.
inline std::vector<int> ranks_from(Subset s, int start, int n) {
  std::vector<int> ranks;
  for (int e : s.elements()) ranks.push_back(cyclic_rank(e, start, n));
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

/// Gale order I <= J with respect to start < start+1 < ... < start-1.
inline bool gale_leq(Subset lhs, Subset rhs, int start, int n) {
  require(lhs.size() == rhs.size(), ErrorCode::SizeMismatch, "Gale order compares equal-size sets");
  const auto a = ranks_from(lhs, start, n);
  const auto b = ranks_from(rhs, start, n);
  for (std::size_t r = 0; r < a.size(); ++r)
    if (a[r] > b[r]) return false;
  return true;
}

/// Schubert matroid {J : I <= J} in the Gale order starting at `start`.
inline std::vector<Subset> schubert_matroid(Subset lower, int start, int n) {
  std::vector<Subset> out;
  for (Subset s : k_subsets(lower.size(), n))
    if (gale_leq(lower, s, start, n)) out.push_back(s);
  return out;
}

/// Basis-exchange axiom checked by brute force.
inline bool is_matroid(const Positroid& m) {
  if (m.bases.empty()) return false;
  for (Subset a : m.bases) {
    for (Subset b : m.bases) {
      for (int x : (a - b).elements()) {
        bool found = false;
        for (int y : (b - a).elements()) {
          if (m.contains(a.without(x).with(y))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

/// The Gale-minimal element of `sets` in the order starting at `start`,
/// or nullopt if no element is below all others.
inline std::optional<Subset> gale_minimum(const std::vector<Subset>& sets, int start, int n) {
  if (sets.empty()) return std::nullopt;
  // The lexicographic minimum of the rotated rank vectors is the only candidate.
  Subset best = sets.front();
  auto best_ranks = ranks_from(best, start, n);
  for (Subset s : sets) {
    auto r = ranks_from(s, start, n);
    if (r < best_ranks) {
      best = s;
      best_ranks = std::move(r);
    }
  }
  for (Subset s : sets)
    if (!gale_leq(best, s, start, n)) return std::nullopt;
  return best;
}

inline GrassmannNecklace necklace_from_permutation(const DecoratedPermutation& w) {
  const int n = w.n();
  require(n >= 1, ErrorCode::InvalidInput, "empty permutation");
  std::vector<Subset> sets(n);
  for (int i = 1; i <= n; ++i) {
    Subset J;
    for (int j = 1; j <= n; ++j) {
      if (w.is_fixed(j)) {
        if (w.color(j) == 1) J.insert(j);
      } else if (cyclic_rank(w.inverse(j), i, n) > cyclic_rank(j, i, n)) {
        J.insert(j);
      }
    }
    sets[i - 1] = J;
  }
  const int k = sets.front().size();
  return GrassmannNecklace(k, n, std::move(sets));
}

inline int helicity(const DecoratedPermutation& w) {
  return necklace_from_permutation(w).k();
}

inline DecoratedPermutation permutation_from_necklace(const GrassmannNecklace& J) {
  const int n = J.n();
  std::vector<int> images(n);
  std::map<int, int> colors;
  for (int i = 1; i <= n; ++i) {
    const Subset cur = J[i];
    const Subset next = J[i + 1];
    if (cur == next) {
      images[i - 1] = i;
      colors[i] = cur.contains(i) ? 1 : 0;
    } else {
      const Subset added = next - cur.without(i);
      require(added.size() == 1, ErrorCode::InvalidNecklace, "step rule violated");
      images[i - 1] = added.elements().front();
    }
  }
  return DecoratedPermutation(std::move(images), colors);
}

/// Intersection of the n cyclically shifted Schubert matroids.
inline Positroid positroid_from_necklace(const GrassmannNecklace& J) {
  Positroid m{J.k(), J.n(), {}};
  for (Subset s : k_subsets(J.k(), J.n())) {
    bool keep = true;
    for (int i = 1; i <= J.n() && keep; ++i) keep = gale_leq(J[i], s, i, J.n());
    if (keep) m.bases.push_back(s);
  }
  return m;
}

/// J_i is the Gale-minimum of M in the order starting at i. Throws
/// NotPositroid when some rotation has no unique minimum.
inline GrassmannNecklace necklace_from_positroid(const Positroid& m) {
  require(!m.bases.empty(), ErrorCode::EmptyInput, "empty collection");
  std::vector<Subset> sets(m.n);
  for (int i = 1; i <= m.n; ++i) {
    const auto minimum = gale_minimum(m.bases, i, m.n);
    require(minimum.has_value(), ErrorCode::NotPositroid,
            "no Gale-minimal element in the order starting at " + std::to_string(i));
    sets[i - 1] = *minimum;
  }
  return GrassmannNecklace(m.k, m.n, std::move(sets));
}

/// Positroid test by the necklace round trip.
inline bool is_positroid(const Positroid& m) {
  require(!m.bases.empty(), ErrorCode::EmptyInput, "empty collection");
  try {
    return positroid_from_necklace(necklace_from_positroid(m)) == m;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPositroid || e.code() == ErrorCode::InvalidNecklace) return false;
    throw;
  }
}

/// Every decorated permutation of [n] (all permutations, all fixed-point colorings).
inline std::vector<DecoratedPermutation> all_decorated_permutations(int n) {
  require(n >= 1 && n <= 8, ErrorCode::BoundExceeded, "exhaustive enumeration needs 1 <= n <= 8");
  std::vector<DecoratedPermutation> out;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    std::vector<int> fixed;
    for (int i = 1; i <= n; ++i)
      if (images[i - 1] == i) fixed.push_back(i);
    for (unsigned mask = 0; mask < (1u << fixed.size()); ++mask) {
      std::map<int, int> colors;
      for (std::size_t t = 0; t < fixed.size(); ++t) colors[fixed[t]] = (mask >> t) & 1u;
      out.emplace_back(images, colors);
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace plabic
