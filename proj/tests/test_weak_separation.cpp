#include "support.hpp"

using namespace plabic;
using namespace plabic::testing;

TEST(WeakSeparation, Examples) {
  EXPECT_FALSE(weakly_separated(Subset{1, 3}, Subset{2, 4}));
  EXPECT_TRUE(weakly_separated(Subset{1, 2}, Subset{2, 3}));
  EXPECT_TRUE(weakly_separated(Subset{2, 5}, Subset{2, 5}));
  EXPECT_ERROR_CODE(weakly_separated(Subset{1}, Subset{2, 3}), ErrorCode::SizeMismatch);
}

TEST(WeakSeparation, AgreesWithQuadrupleOracle) {
  for (int k = 1; k <= 4; ++k) {
    const auto all = k_subsets(k, 8);
    for (Subset a : all)
      for (Subset b : all) {
        ASSERT_EQ(weakly_separated(a, b), brute_weakly_separated(a, b)) << a.label() << " " << b.label();
        ASSERT_EQ(weakly_separated(a, b), weakly_separated(b, a));
      }
  }
}

TEST(WeakSeparation, MonotonePathIsNotSeparated) {
  EXPECT_FALSE(is_ws_collection({Subset{1, 2}, Subset{1, 3}, Subset{1, 4}, Subset{2, 4}, Subset{3, 4}}));
  EXPECT_TRUE(is_ws_collection({Subset{1, 2}, Subset{2, 3}, Subset{3, 4}, Subset{1, 4}, Subset{1, 3}}));
}

TEST(MaximalCollections, TwoFour) {
  const auto all = maximal_ws_collections(2, 4);
  ASSERT_EQ(all.size(), 2u);
  for (const auto& c : all) {
    EXPECT_EQ(c.size(), 5u);
    EXPECT_TRUE(is_ws_collection(c));
  }
}

TEST(MaximalCollections, KOneIsASingleCollection) {
  // Singletons are pairwise separated, so [n] choose 1 is the only maximal collection.
  for (int n = 3; n <= 7; ++n) {
    const auto all = maximal_ws_collections(1, n);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all.front(), k_subsets(1, n));
  }
}

TEST(MaximalCollections, CountsMatchContractionClasses) {
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
    EXPECT_EQ(maximal_ws_collections(k, n).size(), contraction_classes(k, n).size()) << k << "," << n;
  }
  // Catalan numbers for k = 2 cross-checked against polygon triangulations.
  for (int n = 4; n <= 7; ++n)
    EXPECT_EQ(static_cast<long long>(maximal_ws_collections(2, n).size()), triangulations(n));
}

TEST(MaximalCollections, PurityAndMaximalityByBruteForce) {
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {2, 6}, {3, 6}}) {
    const auto all = k_subsets(k, n);
    for (const auto& c : maximal_ws_collections(k, n)) {
      ASSERT_EQ(static_cast<int>(c.size()), k * (n - k) + 1);
      for (Subset a : c)
        for (Subset b : c) ASSERT_TRUE(brute_weakly_separated(a, b));
      for (Subset x : all) {
        if (std::find(c.begin(), c.end(), x) != c.end()) continue;
        bool addable = true;
        for (Subset a : c) addable = addable && brute_weakly_separated(a, x);
        ASSERT_FALSE(addable);
      }
    }
  }
}

TEST(MaximalCollections, BoundExceeded) {
  EXPECT_ERROR_CODE(maximal_ws_collections(3, 7), ErrorCode::BoundExceeded);
  EXPECT_ERROR_CODE(maximal_ws_collections(2, 9), ErrorCode::BoundExceeded);
}

TEST(PlabicFromCollection, SquareGraph) {
  const std::vector<Subset> s{Subset{1, 2}, Subset{2, 3}, Subset{3, 4}, Subset{1, 4}, Subset{1, 3}};
  const auto g = plabic_from_maximal_ws(4, s);
  EXPECT_EQ(sorted_labels(g), (std::vector<Subset>{Subset{1, 2}, Subset{1, 3}, Subset{2, 3}, Subset{1, 4}, Subset{3, 4}}));
  EXPECT_TRUE(is_complete(g, 2));
  EXPECT_EQ(g.internal_vertex_count(), 4);
}

TEST(PlabicFromCollection, SingleWhiteVertex) {
  const auto g = plabic_from_maximal_ws(3, {Subset{1}, Subset{2}, Subset{3}});
  EXPECT_EQ(strand_permutation(g), DecoratedPermutation({2, 3, 1}));
  EXPECT_TRUE(is_complete(g, 1));
}

TEST(PlabicFromCollection, Errors) {
  EXPECT_ERROR_CODE(plabic_from_maximal_ws(4, {Subset{1, 3}, Subset{2, 4}}), ErrorCode::NotWS);
  EXPECT_ERROR_CODE(plabic_from_maximal_ws(4, {Subset{1, 2}, Subset{2, 3}}), ErrorCode::NotMaximal);
  EXPECT_ERROR_CODE(plabic_from_maximal_ws(4, {}), ErrorCode::EmptyInput);
  EXPECT_ERROR_CODE(plabic_from_maximal_ws(4, {Subset{1}, Subset{2, 3}}), ErrorCode::SizeMismatch);
}

TEST(PlabicFromCollection, RoundTripsThroughContractionClasses) {
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}}) {
    for (const auto& node : flip_graph(k, n).nodes) {
      const auto labels = sorted_labels(node);
      const auto g = plabic_from_maximal_ws(n, labels);
      ASSERT_EQ(sorted_labels(g), labels);
      ASSERT_EQ(contract_same_color(g).canonical_form(), contract_same_color(node).canonical_form());
    }
    for (const auto& c : maximal_ws_collections(k, n)) ASSERT_EQ(sorted_labels(plabic_from_maximal_ws(n, c)), c);
  }
}

TEST(FaceLabelProperties, CompleteGraphsGiveMaximalCollections) {
  for (const auto& node : flip_graph(2, 6).nodes) {
    const auto labels = sorted_labels(node);
    ASSERT_TRUE(is_ws_collection(labels));
    ASSERT_EQ(labels.size(), 9u);
  }
}
