#include <gtest/gtest.h>

#include "qtree/canon.hpp"
#include "qtree/oracle.hpp"
#include "qtree/refine.hpp"
#include "test_support.hpp"

namespace qtree {
namespace {

using testing::graph_of;
using testing::path_graph;
using testing::star_graph;

ColoredGraph plain(Graph g) { return ColoredGraph::uncolored(std::move(g)); }

TEST(ColorRefinement, Examples) {
  auto p3 = color_refinement(plain(path_graph(3)));
  EXPECT_EQ(p3.classes, (std::vector<VertexSet>{{0, 2}, {1}}));
  EXPECT_EQ(p3.class_of, (std::vector<int>{0, 1, 0}));

  auto star = color_refinement(plain(star_graph(4)));
  EXPECT_EQ(star.classes, (std::vector<VertexSet>{{0}, {1, 2, 3, 4}}));

  auto p4 = color_refinement(plain(path_graph(4)));
  EXPECT_EQ(p4.classes, (std::vector<VertexSet>{{0, 3}, {1, 2}}));
}

TEST(ColorRefinement, RegularGraphsStayCoarse) {
  // A 6-cycle and two triangles are indistinguishable to 1-WL.
  Graph c6 = graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  Graph two_triangles = graph_of(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_EQ(color_refinement(plain(c6)).class_count(), 1);
  EXPECT_TRUE(fractionally_isomorphic(plain(c6), plain(two_triangles)));
}

TEST(ColorRefinement, StableRespectsColorsAndDegrees) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    ColoredGraph x = testing::random_colored_graph(n, 3, 0.3, rng);
    Partition p = color_refinement(x);
    EXPECT_EQ(refine_once(x, p), p);
    for (const auto& cls : p.classes)
      for (Vertex v : cls) {
        EXPECT_EQ(x.colors[v], x.colors[cls.front()]);
        EXPECT_EQ(x.graph.degree(v), x.graph.degree(cls.front()));
      }
    for (int c = 1; c < p.class_count(); ++c)
      EXPECT_LT(p.classes[c - 1].front(), p.classes[c].front());
  }
}

TEST(ColorRefinement, CoarsensAutomorphismOrbits) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    ColoredGraph x = testing::random_colored_graph(n, 2, 0.4, rng);
    Partition refined = color_refinement(x);
    for (const auto& orbit : brute_orbits(x).classes)
      for (Vertex v : orbit) EXPECT_EQ(refined.class_of[v], refined.class_of[orbit.front()]);
  }
}

TEST(ColorRefinement, EqualsOrbitsOnTreesUpToEight) {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& t : all_free_trees(n))
      EXPECT_EQ(color_refinement(plain(t)), brute_orbits(plain(t))) << to_structured(t);
}

TEST(IsUnionOfClasses, Examples) {
  auto p3 = color_refinement(plain(path_graph(3)));
  EXPECT_TRUE(is_union_of_classes(p3, {1}));
  EXPECT_FALSE(is_union_of_classes(p3, {0}));
  auto star = color_refinement(plain(star_graph(4)));
  EXPECT_TRUE(is_union_of_classes(star, {1, 2, 3, 4}));
  EXPECT_TRUE(is_union_of_classes(star, {}));
  EXPECT_FALSE(is_union_of_classes(star, {9}));
}

TEST(RefineInduced, Examples) {
  auto p5 = plain(path_graph(5));
  auto inner = refine_induced(p5, {1, 2, 3});
  EXPECT_EQ(inner.classes, (std::vector<VertexSet>{{1, 3}, {2}}));
  EXPECT_EQ(inner.class_of[0], -1);

  auto hub = refine_induced(plain(star_graph(4)), {0});
  EXPECT_EQ(hub.classes, (std::vector<VertexSet>{{0}}));

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    ColoredGraph x = testing::random_colored_graph(7, 2, 0.3, rng);
    VertexSet all{0, 1, 2, 3, 4, 5, 6};
    EXPECT_EQ(refine_induced(x, all), color_refinement(x));
  }
}

TEST(RefineInduced, RejectsNonUnions) {
  try {
    refine_induced(plain(path_graph(3)), {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotClassUnion);
  }
}

TEST(FractionallyIsomorphic, Examples) {
  std::vector<Vertex> perm{3, 1, 0, 2};
  EXPECT_TRUE(fractionally_isomorphic(plain(path_graph(4)), plain(permute(path_graph(4), perm))));
  EXPECT_FALSE(fractionally_isomorphic(plain(path_graph(4)), plain(star_graph(3))));
  EXPECT_FALSE(fractionally_isomorphic(plain(path_graph(4)), plain(path_graph(5))));
}

TEST(FractionallyIsomorphic, ColorsMatter) {
  auto a = ColoredGraph::with_colors(path_graph(3), {1, 0, 0});
  auto b = ColoredGraph::with_colors(path_graph(3), {0, 1, 0});
  EXPECT_FALSE(fractionally_isomorphic(a, b));
  EXPECT_TRUE(fractionally_isomorphic(a, ColoredGraph::with_colors(path_graph(3), {0, 0, 1})));
}

TEST(FractionallyIsomorphic, EqualsTreeIsomorphismUpToEight) {
  std::mt19937_64 rng(41);
  std::vector<Graph> corpus;
  for (int n = 1; n <= 8; ++n)
    for (const Graph& t : all_free_trees(n)) {
      corpus.push_back(t);
      corpus.push_back(permute(t, testing::random_permutation(n, rng)));
    }
  for (const auto& a : corpus)
    for (const auto& b : corpus)
      if (a.vertex_count() == b.vertex_count())
        ASSERT_EQ(fractionally_isomorphic(plain(a), plain(b)), tree_isomorphic(a, b));
}

}  // namespace
}  // namespace qtree
