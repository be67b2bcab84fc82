#include "support.hpp"

using namespace plabic;
using namespace plabic::testing;

namespace {

std::optional<MoveSite> first_site(const GrassmannianGraph& g, MoveKind kind) {
  for (const auto& s : move_sites(g))
    if (s.kind == kind) return s;
  return std::nullopt;
}

std::set<Subset> label_set(const GrassmannianGraph& g) {
  const auto labels = face_labels(g);
  return {labels.begin(), labels.end()};
}

}  // namespace

TEST(Moves, SquareMoveTogglesCentralLabel) {
  const auto g = build_reduced_plabic(DecoratedPermutation::shift(2, 4));
  const auto site = first_site(g, MoveKind::Square);
  ASSERT_TRUE(site.has_value());
  const auto h = apply_move(g, *site);
  const auto before = label_set(g), after = label_set(h);
  EXPECT_EQ(before.count(Subset{1, 3}) + after.count(Subset{1, 3}), 1u);
  EXPECT_EQ(before.count(Subset{2, 4}) + after.count(Subset{2, 4}), 1u);
  std::vector<Subset> only_before, only_after;
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(only_before));
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(only_after));
  EXPECT_EQ(only_before.size(), 1u);
  EXPECT_EQ(only_after.size(), 1u);
  // The colors around the square are swapped.
  int white_before = 0, white_after = 0;
  for (int v : g.internal_vertices()) white_before += g.is_white(v) ? 1 : 0;
  for (int v : h.internal_vertices()) white_after += h.is_white(v) ? 1 : 0;
  EXPECT_EQ(white_before, white_after);
  EXPECT_NE(g.canonical_form(), h.canonical_form());
  const auto back = first_site(h, MoveKind::Square);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(apply_move(h, *back).canonical_form(), g.canonical_form());
}

TEST(Moves, WhiteContractionKeepsPermutationAndLabels) {
  const auto g = build_reduced_plabic(DecoratedPermutation::shift(1, 5));
  const auto site = first_site(g, MoveKind::WhiteContraction);
  ASSERT_TRUE(site.has_value());
  const auto h = apply_move(g, *site);
  EXPECT_TRUE(is_plabic(h));
  EXPECT_EQ(strand_permutation(h), strand_permutation(g));
  EXPECT_EQ(label_set(h), label_set(g));
  EXPECT_NE(h.canonical_form(), g.canonical_form());
}

TEST(Moves, BlackContractionKeepsLabelCount) {
  const auto g = build_reduced_plabic(DecoratedPermutation::shift(4, 5));
  const auto site = first_site(g, MoveKind::BlackContraction);
  ASSERT_TRUE(site.has_value());
  const auto h = apply_move(g, *site);
  EXPECT_EQ(strand_permutation(h), strand_permutation(g));
  EXPECT_EQ(label_set(h).size(), label_set(g).size());
}

TEST(Moves, PatternMismatch) {
  const auto star = star_graph(3, 1);
  EXPECT_ERROR_CODE(apply_move(star, MoveSite{MoveKind::Square, 0}), ErrorCode::PatternMismatch);
  EXPECT_ERROR_CODE(apply_move(star, MoveSite{MoveKind::WhiteContraction, 0}), ErrorCode::PatternMismatch);
  EXPECT_ERROR_CODE(apply_move(star, MoveSite{MoveKind::BlackContraction, 0}), ErrorCode::PatternMismatch);
  EXPECT_EQ(to_string(MoveKind::WhiteContraction), "(1,4)");
  EXPECT_EQ(to_string(MoveKind::Square), "(2,4)");
  EXPECT_EQ(to_string(MoveKind::BlackContraction), "(3,4)");
}

TEST(MoveProperties, MovesPreserveInvariants) {
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{1, 5}, {2, 5}, {3, 5}, {2, 6}}) {
    const auto fg = flip_graph(k, n);
    for (const auto& g : fg.nodes) {
      const auto w = strand_permutation(g);
      const auto m = positroid_of_graph(g);
      const auto labels = label_set(g);
      for (const auto& site : move_sites(g)) {
        const auto h = apply_move(g, site);
        ASSERT_TRUE(is_plabic(h));
        ASSERT_TRUE(is_reduced(h).reduced);
        ASSERT_EQ(strand_permutation(h), w);
        ASSERT_EQ(label_set(h).size(), labels.size());
        if (n <= 5) {
          ASSERT_EQ(positroid_of_graph(h), m);
        }
        std::vector<Subset> changed;
        const auto other = label_set(h);
        std::set_symmetric_difference(labels.begin(), labels.end(), other.begin(), other.end(),
                                      std::back_inserter(changed));
        ASSERT_EQ(changed.size(), site.kind == MoveKind::Square ? 2u : 0u);
      }
    }
  }
}

TEST(MoveEquivalence, Examples) {
  const auto g = build_reduced_plabic(DecoratedPermutation::shift(2, 4));
  const auto h = apply_move(g, *first_site(g, MoveKind::Square));
  EXPECT_TRUE(are_move_equivalent(g, h));
  EXPECT_FALSE(are_move_equivalent(star_graph(3, 1), star_graph(3, 2)));
  EXPECT_EQ(move_equivalence_class(g).size(), 2u);
  EXPECT_ERROR_CODE(move_equivalence_class(build_reduced_plabic(DecoratedPermutation::shift(2, 6)), 10),
                    ErrorCode::CapExceeded);
}

TEST(MoveEquivalence, ClassSizesMatchFlipGraphs) {
  // Regression constants from exhaustive search.
  const std::map<std::pair<int, int>, std::size_t> sizes{{{1, 4}, 2},  {{1, 5}, 5},  {{2, 4}, 2},
                                                         {{2, 5}, 10}, {{3, 5}, 10}, {{2, 6}, 70}};
  for (const auto& [type, size] : sizes) {
    const auto g = build_reduced_plabic(DecoratedPermutation::shift(type.first, type.second));
    const auto cls = move_equivalence_class(g);
    EXPECT_EQ(cls.size(), size);
    for (const auto& h : cls) EXPECT_TRUE(are_move_equivalent(g, h));
  }
}

TEST(MoveEquivalence, BfsAgreesWithStrandPermutationsOnSmallCells) {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& w : all_decorated_permutations(n)) {
      const auto g = build_reduced_plabic(w);
      for (const auto& h : move_equivalence_class(g)) {
        ASSERT_EQ(strand_permutation(h), w);
        ASSERT_TRUE(are_move_equivalent(g, h));
      }
    }
  }
}

TEST(FlipGraph, CatalanForKOne) {
  for (int n = 4; n <= 7; ++n) {
    const auto fg = flip_graph(1, n);
    EXPECT_EQ(static_cast<long long>(fg.nodes.size()), catalan(n - 2));
    EXPECT_EQ(static_cast<long long>(fg.nodes.size()), triangulations(n));
    EXPECT_TRUE(fg.connected());
  }
}

TEST(FlipGraph, RegressionCounts) {
  const auto g24 = flip_graph(2, 4);
  EXPECT_EQ(g24.nodes.size(), 2u);
  EXPECT_EQ(g24.edges.size(), 1u);
  EXPECT_EQ(g24.diameter(), 1);
  EXPECT_EQ(flip_graph(2, 5).nodes.size(), 10u);
  const auto g36 = flip_graph(3, 6);
  EXPECT_EQ(g36.nodes.size(), 148u);
  EXPECT_EQ(g36.edges.size(), 264u);
  EXPECT_TRUE(g36.connected());
}

TEST(FlipGraph, Errors) {
  EXPECT_ERROR_CODE(flip_graph(2, 9), ErrorCode::BoundExceeded);
  EXPECT_ERROR_CODE(flip_graph(0, 5), ErrorCode::InvalidInput);
}

TEST(FlipGraph, NodesAreCompleteAndDistinct) {
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{1, 6}, {2, 5}, {3, 6}}) {
    const auto fg = flip_graph(k, n);
    std::set<std::string> keys(fg.keys.begin(), fg.keys.end());
    EXPECT_EQ(keys.size(), fg.nodes.size());
    for (const auto& g : fg.nodes) {
      ASSERT_TRUE(is_complete(g, k));
      ASSERT_EQ(g.faces().count, k * (n - k) + 1);
    }
  }
}

TEST(Contraction, ClassCounts) {
  EXPECT_EQ(contraction_classes(2, 4).size(), 2u);
  EXPECT_EQ(contraction_classes(2, 5).size(), 5u);
  EXPECT_EQ(contraction_classes(3, 6).size(), 34u);
  // Every (1,n) graph is a tree of white vertices and contracts to one star.
  for (int n = 4; n <= 7; ++n) EXPECT_EQ(contraction_classes(1, n).size(), 1u);
}

TEST(Contraction, ResultIsBipartite) {
  for (const auto& g : flip_graph(2, 6).nodes) {
    const auto c = contract_same_color(g);
    for (int e : c.edges()) {
      if (!c.is_internal_edge(e)) continue;
      const int u = c.origin(2 * e), v = c.origin(2 * e + 1);
      ASSERT_FALSE(c.is_white(u) && c.is_white(v));
      ASSERT_FALSE(c.is_black(u) && c.is_black(v));
    }
    ASSERT_EQ(strand_permutation(c), strand_permutation(g));
  }
}
