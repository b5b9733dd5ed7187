#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "qtree/canon.hpp"
#include "qtree/oracle.hpp"
#include "test_support.hpp"

namespace qtree {
namespace {

using testing::graph_of;
using testing::path_graph;
using testing::star_graph;

ColoredGraph plain(const Graph& g) { return ColoredGraph::uncolored(g); }

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) out[v] = a[b[v]];
  return out;
}

TEST(BruteAutomorphisms, Examples) {
  EXPECT_EQ(count_automorphisms(plain(path_graph(4))), 2u);
  EXPECT_EQ(count_automorphisms(plain(star_graph(4))), 24u);
  EXPECT_EQ(count_automorphisms(plain(Graph(1))), 1u);
  EXPECT_EQ(count_automorphisms(plain(Graph(0))), 1u);
  EXPECT_EQ(count_automorphisms(plain(Graph(5))), 120u);
  Graph c5 = graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_EQ(count_automorphisms(plain(c5)), 10u);
  EXPECT_EQ(count_automorphisms(ColoredGraph::with_colors(star_graph(3), {0, 1, 0, 0})), 2u);

  auto perms = brute_automorphisms(plain(path_graph(3)));
  EXPECT_EQ(perms, (std::vector<Permutation>{{0, 1, 2}, {2, 1, 0}}));
}

TEST(BruteAutomorphisms, FormAGroup) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    ColoredGraph x = testing::random_colored_graph(n, 2, 0.4, rng);
    auto perms = brute_automorphisms(x);
    std::set<Permutation> group(perms.begin(), perms.end());
    ASSERT_EQ(group.size(), perms.size());
    Permutation id(n);
    std::iota(id.begin(), id.end(), 0);
    ASSERT_TRUE(group.count(id));
    for (const auto& a : perms) {
      for (Vertex v = 0; v < n; ++v) ASSERT_EQ(x.colors[a[v]], x.colors[v]);
      for (auto [u, v] : x.graph.edges()) ASSERT_TRUE(x.graph.has_edge(a[u], a[v]));
      for (const auto& b : perms) ASSERT_TRUE(group.count(compose(a, b)));
    }
  }
}

TEST(BruteAutomorphisms, MatchesExhaustivePermutations) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    ColoredGraph x = testing::random_colored_graph(n, 2, 0.5, rng);
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t count = 0;
    do {
      bool ok = true;
      for (Vertex v = 0; v < n && ok; ++v) ok = x.colors[p[v]] == x.colors[v];
      for (Vertex u = 0; u < n && ok; ++u)
        for (Vertex v = u + 1; v < n && ok; ++v)
          ok = x.graph.has_edge(u, v) == x.graph.has_edge(p[u], p[v]);
      count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    ASSERT_EQ(count_automorphisms(x), count);
  }
}

TEST(BruteAutomorphisms, SizeGuard) {
  try {
    count_automorphisms(plain(path_graph(13)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  EXPECT_EQ(count_automorphisms(plain(path_graph(13)), 13), 2u);
}

TEST(BruteAutomorphisms, EnvironmentLimit) {
  ::setenv("QTREE_MAX_BRUTE", "20", 1);
  EXPECT_EQ(brute_limit_from_env(), 20);
  ::setenv("QTREE_MAX_BRUTE", "junk", 1);
  EXPECT_EQ(brute_limit_from_env(), kDefaultBruteLimit);
  ::unsetenv("QTREE_MAX_BRUTE");
  EXPECT_EQ(brute_limit_from_env(), kDefaultBruteLimit);
}

TEST(BruteOrbits, Examples) {
  EXPECT_EQ(brute_orbits(plain(path_graph(4))).classes, (std::vector<VertexSet>{{0, 3}, {1, 2}}));
  Graph spider = graph_of(6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}});
  EXPECT_EQ(brute_orbits(plain(spider)).classes,
            (std::vector<VertexSet>{{0}, {1, 3}, {2, 4}, {5}}));
}

TEST(BruteIsomorphic, Examples) {
  EXPECT_TRUE(brute_isomorphic(plain(path_graph(4)), plain(graph_of(4, {{2, 0}, {0, 3}, {3, 1}}))));
  EXPECT_FALSE(brute_isomorphic(plain(path_graph(4)), plain(star_graph(3))));
  EXPECT_FALSE(brute_isomorphic(plain(path_graph(4)), plain(path_graph(5))));
  EXPECT_FALSE(brute_isomorphic(ColoredGraph::with_colors(path_graph(3), {1, 0, 0}),
                                ColoredGraph::with_colors(path_graph(3), {0, 1, 0})));
}

TEST(TreeStreams, KnownCounts) {
  const int free_counts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
  const int rooted_counts[] = {0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842};
  for (int n = 1; n <= 14; ++n) EXPECT_EQ(static_cast<int>(all_free_trees(n).size()), free_counts[n]);
  for (int n = 1; n <= 11; ++n)
    EXPECT_EQ(static_cast<int>(all_rooted_trees(n).size()), rooted_counts[n]);
}

TEST(TreeStreams, RepresentativesArePairwiseDistinct) {
  for (int n = 1; n <= 13; ++n) {
    std::set<std::string> keys;
    for (const Graph& t : all_free_trees(n)) {
      ASSERT_TRUE(is_tree(t));
      ASSERT_EQ(t.vertex_count(), n);
      keys.insert(free_tree_key(t).to_string());
    }
    EXPECT_EQ(static_cast<int>(keys.size()), static_cast<int>(all_free_trees(n).size())) << n;
  }
  for (int n = 1; n <= 10; ++n) {
    std::set<std::string> codes;
    for (const RootedTree& rt : all_rooted_trees(n)) codes.insert(ahu_code(rt).code);
    EXPECT_EQ(codes.size(), all_rooted_trees(n).size());
  }
}

TEST(TreeStreams, AgreeWithPruferEnumeration) {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> level, prufer;
    for (const Graph& t : all_free_trees(n)) level.insert(free_tree_key(t).to_string());
    for (const Graph& t : free_trees_by_prufer(n)) prufer.insert(free_tree_key(t).to_string());
    EXPECT_EQ(level, prufer) << n;

    std::set<std::string> rl, rp;
    for (const RootedTree& t : all_rooted_trees(n)) rl.insert(ahu_code(t).code);
    for (const RootedTree& t : rooted_trees_by_prufer(n)) rp.insert(ahu_code(t).code);
    EXPECT_EQ(rl, rp) << n;
  }
}

TEST(TreeStreams, BruteForceDistinctUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    auto trees = all_free_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i)
      for (std::size_t j = i + 1; j < trees.size(); ++j)
        ASSERT_FALSE(brute_isomorphic(plain(trees[i]), plain(trees[j])));
  }
}

TEST(TreeStreams, RangeChecked) {
  EXPECT_THROW(FreeTreeStream(0), Error);
  EXPECT_THROW(FreeTreeStream(19), Error);
  EXPECT_THROW(RootedTreeStream(0), Error);
}

TEST(LevelSequences, Examples) {
  std::vector<int> star{0, 1, 1, 1};
  Graph s = tree_from_levels(star);
  EXPECT_EQ(s.degree(0), 3);
  std::vector<int> path{0, 1, 2, 3};
  EXPECT_EQ(tree_from_levels(path), path_graph(4));
}

TEST(Prufer, Examples) {
  std::vector<int> code{3, 3, 3};
  Graph star = prufer_decode(5, code);
  EXPECT_EQ(star.degree(3), 4);
  std::vector<int> none;
  EXPECT_EQ(prufer_decode(2, none).edge_count(), 1u);
  EXPECT_EQ(prufer_decode(1, none).vertex_count(), 1);

  int count = 0;
  std::set<std::vector<Edge>> seen;
  for_each_labeled_tree(5, [&](const Graph& g) {
    ++count;
    EXPECT_TRUE(is_tree(g));
    seen.insert(g.edges());
  });
  EXPECT_EQ(count, 125);
  EXPECT_EQ(seen.size(), 125u);
}

TEST(RandomTree, IsATree) {
  std::mt19937_64 rng(3);
  for (int n : {1, 2, 3, 10, 1000}) EXPECT_TRUE(is_tree(random_tree(n, rng)));
  std::mt19937_64 a(9), b(9);
  EXPECT_EQ(random_tree(50, a), random_tree(50, b));
}

}  // namespace
}  // namespace qtree
