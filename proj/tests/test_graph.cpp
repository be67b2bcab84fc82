#include "support.hpp"

using namespace plabic;
using namespace plabic::testing;

namespace {

GrassmannianGraph square_graph() { return build_reduced_plabic(DecoratedPermutation::shift(2, 4)); }

std::set<Subset> source_sets(const GrassmannianGraph& g, const std::vector<PerfectOrientation>& os) {
  std::set<Subset> out;
  for (const auto& o : os) out.insert(boundary_sources(g, o));
  return out;
}

}  // namespace

TEST(Graph, HelicityFormula) {
  EXPECT_EQ(graph_helicity(star_graph(3, 1)), Rational(1));
  EXPECT_EQ(graph_helicity(lollipops({0})), Rational(0));
  EXPECT_EQ(graph_helicity(square_graph()), Rational(2));
}

TEST(Graph, ValidationRejectsBadRotation) {
  GrassmannianGraph g(2);
  const int v = g.add_vertex(1);
  g.add_edge(g.boundary_vertex(1), v);
  EXPECT_ERROR_CODE(g.validate(), ErrorCode::InvalidInput);
  GrassmannianGraph h(1);
  const int w = h.add_vertex(5);
  h.add_edge(h.boundary_vertex(1), w);
  EXPECT_ERROR_CODE(h.validate(), ErrorCode::InvalidInput);
}

TEST(Graph, CanonicalFormIgnoresIds) {
  const auto g = square_graph();
  EXPECT_EQ(g.canonical_form(), g.compacted().canonical_form());
  EXPECT_NE(g.canonical_form(), star_graph(4, 2).canonical_form());
}

TEST(Orientation, StarExamples) {
  const auto g = star_graph(3, 1);
  ASSERT_TRUE(find_perfect_orientation(g).has_value());
  EXPECT_TRUE(is_perfect_orientation(g, *find_perfect_orientation(g)));
  EXPECT_EQ(enumerate_perfect_orientations(g).size(), 3u);
  const auto forced = star_graph(3, 3);
  const auto all = enumerate_perfect_orientations(forced);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(boundary_sources(forced, all.front()), Subset({1, 2, 3}));
  const auto leaf = lollipops({0});
  const auto one = enumerate_perfect_orientations(leaf);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(boundary_sources(leaf, one.front()), Subset({}));
}

TEST(Orientation, NotOrientable) {
  GrassmannianGraph g(2);
  const int u = g.add_vertex(2);
  const int v = g.add_vertex(2);
  g.add_edge(g.boundary_vertex(1), u);
  g.add_edge(g.boundary_vertex(2), v);
  // u and v each need two incoming edges but share only one more edge.
  g.add_detached_edge(u, v);
  g.set_rotation(u, {g.rotation(u)[0], 4});
  g.set_rotation(v, {g.rotation(v)[0], 5});
  EXPECT_FALSE(find_perfect_orientation(g).has_value());
  EXPECT_TRUE(enumerate_perfect_orientations(g).empty());
  EXPECT_ERROR_CODE(positroid_of_graph(g), ErrorCode::NotOrientable);
  EXPECT_EQ(graph_helicity(g), Rational(3));
}

TEST(Orientation, SquareGraphHasAllSixSources) {
  const auto g = square_graph();
  EXPECT_EQ(source_sets(g, enumerate_perfect_orientations(g)).size(), 6u);
  EXPECT_EQ(positroid_of_graph(g).bases, k_subsets(2, 4));
  EXPECT_EQ(positroid_of_graph(star_graph(3, 1)).bases, (std::vector<Subset>{Subset{1}, Subset{2}, Subset{3}}));
}

TEST(Orientation, ZeroLollipopExcludesItsIndex) {
  const auto g = build_reduced_plabic(DecoratedPermutation({1, 3, 4, 2}, {{1, 0}}));
  for (Subset I : positroid_of_graph(g).bases) EXPECT_FALSE(I.contains(1));
}

TEST(OrientationProperties, EnumerationMatchesBruteForce) {
  std::vector<GrassmannianGraph> corpus{star_graph(3, 1), star_graph(4, 2), parallel_pair(1, 2), parallel_pair(1, 1)};
  for (const auto& w : sample_permutations()) corpus.push_back(build_reduced_plabic(w));
  for (const auto& node : flip_graph(2, 5).nodes) corpus.push_back(node);
  for (const auto& g : corpus) {
    auto fast = enumerate_perfect_orientations(g);
    std::sort(fast.begin(), fast.end());
    const auto slow = brute_force_orientations(g);
    ASSERT_EQ(fast, slow) << g.canonical_form();
    const bool orientable = !slow.empty();
    EXPECT_EQ(find_perfect_orientation(g).has_value(), orientable);
    for (const auto& o : slow) EXPECT_EQ(Rational(boundary_sources(g, o).size()), graph_helicity(g));
  }
}

TEST(Strands, Examples) {
  EXPECT_EQ(strand_permutation(star_graph(3, 1)), DecoratedPermutation({2, 3, 1}));
  EXPECT_EQ(strand_permutation(star_graph(3, 2)), DecoratedPermutation({3, 1, 2}));
  EXPECT_EQ(strand_permutation(lollipops({0, 1})), DecoratedPermutation({1, 2}, {{1, 0}, {2, 1}}));
  const auto all = strands(star_graph(3, 1));
  EXPECT_EQ(all.size(), 3u);
  for (const auto& s : all) EXPECT_FALSE(s.closed);
}

TEST(Strands, ClosedStrandReported) {
  // An internal bigon of two (1,2) vertices traps a closed strand.
  GrassmannianGraph g(1);
  const int leaf = g.add_vertex(0);
  g.add_edge(g.boundary_vertex(1), leaf);
  const int a = g.add_vertex(1);
  const int b = g.add_vertex(1);
  const int e1 = g.add_detached_edge(a, b);
  const int e2 = g.add_detached_edge(a, b);
  g.set_rotation(a, {2 * e1, 2 * e2});
  g.set_rotation(b, {2 * e2 + 1, 2 * e1 + 1});
  bool closed = false;
  for (const auto& s : strands(g)) closed = closed || s.closed;
  EXPECT_TRUE(closed);
  EXPECT_ERROR_CODE(strand_permutation(g), ErrorCode::ClosedStrand);
}

TEST(Reduced, Examples) {
  EXPECT_TRUE(is_reduced(square_graph()).reduced);
  const auto pair = is_reduced(parallel_pair(1, 2));
  EXPECT_FALSE(pair.reduced);
  EXPECT_TRUE(pair.condition == "self_intersection" || pair.condition == "bad_double_crossing") << pair.condition;
  GrassmannianGraph g(2);
  const int v = g.add_vertex(1);
  g.add_edge(g.boundary_vertex(1), v);
  g.add_edge(g.boundary_vertex(2), v);
  const auto two = is_reduced(g);
  EXPECT_FALSE(two.reduced);
  EXPECT_EQ(two.condition, "degree_two");
}

TEST(FaceLabels, Examples) {
  EXPECT_EQ(sorted_labels(star_graph(3, 1)), (std::vector<Subset>{Subset{1}, Subset{2}, Subset{3}}));
  const auto labels = sorted_labels(square_graph());
  ASSERT_EQ(labels.size(), 5u);
  const std::set<Subset> set(labels.begin(), labels.end());
  for (Subset s : {Subset{1, 2}, Subset{2, 3}, Subset{3, 4}, Subset{1, 4}}) EXPECT_TRUE(set.count(s));
  EXPECT_TRUE(set.count(Subset{1, 3}) + set.count(Subset{2, 4}) == 1);
  EXPECT_EQ(sorted_labels(lollipops({1, 1, 1})), std::vector<Subset>{Subset({1, 2, 3})});
  EXPECT_ERROR_CODE(face_labels(parallel_pair(1, 2)), ErrorCode::NotReduced);
}

TEST(FaceLabels, BoundaryFacesCarryNecklace) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_decorated_permutations(n)) {
      const auto g = build_reduced_plabic(w);
      const auto faces = g.faces();
      const auto labels = face_labels(g);
      const auto J = necklace_from_permutation(w);
      for (int i = 1; i <= n; ++i) ASSERT_EQ(labels[faces.before_boundary[i]], J[i]);
      for (Subset a : labels) {
        ASSERT_EQ(a.size(), J.k());
        for (Subset b : labels) ASSERT_TRUE(brute_weakly_separated(a, b));
      }
    }
  }
}

TEST(Complete, Examples) {
  EXPECT_TRUE(is_complete(square_graph(), 2));
  EXPECT_EQ(square_graph().faces().internal_count(), 1);
  const auto g25 = build_reduced_plabic(DecoratedPermutation::shift(2, 5));
  EXPECT_TRUE(is_complete(g25, 2));
  EXPECT_EQ(g25.faces().internal_count(), 2);
  EXPECT_TRUE(is_complete(star_graph(3, 1), 1));
  EXPECT_EQ(star_graph(3, 1).faces().internal_count(), 0);
  // A (2,4) vertex alone is complete with no internal faces.
  EXPECT_TRUE(is_complete(star_graph(4, 2), 2));
  EXPECT_FALSE(is_complete(build_reduced_plabic(DecoratedPermutation({2, 1, 3}, {{3, 0}})), 1));
  EXPECT_ERROR_CODE(is_complete(parallel_pair(1, 2), 1), ErrorCode::NotReduced);
}

TEST(Refine, Examples) {
  const auto big = star_graph(4, 2);
  EXPECT_FALSE(is_plabic(big));
  const auto refined = plabic_refinement(big);
  EXPECT_TRUE(is_plabic(refined));
  EXPECT_EQ(refined.internal_vertex_count(), 4);
  EXPECT_EQ(strand_permutation(refined), strand_permutation(big));
  EXPECT_EQ(positroid_of_graph(refined), positroid_of_graph(big));
  const auto white = star_graph(3, 1);
  EXPECT_EQ(plabic_refinement(white).canonical_form(), white.canonical_form());
  EXPECT_ERROR_CODE(refine_vertex(big, 4, star_graph(3, 1)), ErrorCode::TypeMismatch);
}

TEST(RefineProperties, InvariantsPreserved) {
  for (int d = 3; d <= 6; ++d) {
    for (int h = 1; h < d; ++h) {
      const auto g = star_graph(d, h);
      const auto r = plabic_refinement(g);
      ASSERT_TRUE(is_plabic(r));
      EXPECT_EQ(strand_permutation(r), strand_permutation(g));
      EXPECT_EQ(positroid_of_graph(r), positroid_of_graph(g));
      EXPECT_EQ(graph_helicity(r), graph_helicity(g));
      EXPECT_TRUE(is_reduced(r).reduced);
      EXPECT_EQ(is_reduced(g).reduced, is_reduced(r).reduced);
      EXPECT_EQ(r.faces().internal_count(), complete_internal_faces(h, d));
    }
  }
}

TEST(Bridge, Examples) {
  const auto white = build_reduced_plabic(DecoratedPermutation({2, 3, 1}));
  EXPECT_EQ(white.canonical_form(), star_graph(3, 1).canonical_form());
  const auto leaves = build_reduced_plabic(DecoratedPermutation({1, 2}, {{1, 1}, {2, 0}}));
  EXPECT_EQ(leaves.canonical_form(), lollipops({1, 0}).canonical_form());
  EXPECT_EQ(strand_permutation(square_graph()), DecoratedPermutation::shift(2, 4));
}

TEST(GraphProperties, AllPermutationsUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_decorated_permutations(n)) {
      const auto g = build_reduced_plabic(w);
      ASSERT_TRUE(is_plabic(g));
      ASSERT_TRUE(is_reduced(g).reduced);
      ASSERT_EQ(strand_permutation(g), w);
      if (n <= 5) {
        ASSERT_EQ(positroid_of_graph(g), positroid_from_necklace(necklace_from_permutation(w)));
      }
    }
  }
}

TEST(GraphProperties, CompleteFaceCountsAndEuler) {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto g = build_reduced_plabic(DecoratedPermutation::shift(k, n));
      ASSERT_TRUE(is_complete(g, k));
      const auto faces = g.faces();
      EXPECT_EQ(faces.count, k * (n - k) + 1);
      EXPECT_EQ(faces.internal_count(), (k - 1) * (n - k - 1));
      int internal_edges = 0;
      for (int e : g.edges()) internal_edges += g.is_internal_edge(e) ? 1 : 0;
      EXPECT_EQ(2 * g.internal_vertex_count() - internal_edges, k * (n - k));
    }
  }
}
