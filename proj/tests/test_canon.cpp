#include <gtest/gtest.h>

#include <set>

#include "qtree/canon.hpp"
#include "qtree/center.hpp"
#include "qtree/oracle.hpp"
#include "test_support.hpp"

namespace qtree {
namespace {

using testing::graph_of;
using testing::path_graph;
using testing::star_graph;

TEST(AhuCode, Examples) {
  EXPECT_EQ(ahu_code(RootedTree(Graph(1), 0)).code, "()");
  EXPECT_EQ(ahu_code(RootedTree(path_graph(3), 0)).code, "((()))");
  EXPECT_EQ(ahu_code(RootedTree(path_graph(3), 1)).code, "(()())");
}

TEST(AhuCode, ChildrenSortedLexicographically) {
  // Root 0 with a leaf child and a cherry child; '(' sorts before ')'.
  Graph g = graph_of(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
  EXPECT_EQ(ahu_code(RootedTree(g, 0)).code, "((()())())");
}

TEST(AhuCode, BalancedWithTwiceVertexCountLength) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& rt : all_rooted_trees(n)) {
      auto code = ahu_code(rt).code;
      EXPECT_EQ(code.size(), 2u * n);
      int depth = 0;
      for (char c : code) {
        depth += c == '(' ? 1 : -1;
        ASSERT_GE(depth, 0);
      }
      EXPECT_EQ(depth, 0);
    }
}

TEST(AhuCode, InvariantUnderRelabeling) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 8; ++n)
    for (const Graph& t : all_free_trees(n))
      for (Vertex root = 0; root < n; ++root) {
        auto perm = testing::random_permutation(n, rng);
        RootedTree a(t, root);
        RootedTree b(permute(t, perm), perm[root]);
        EXPECT_EQ(ahu_code(a), ahu_code(b));
        EXPECT_TRUE(rooted_isomorphic(a, b));
      }
}

TEST(RootedIsomorphic, Examples) {
  EXPECT_FALSE(rooted_isomorphic(RootedTree(path_graph(3), 0), RootedTree(path_graph(3), 1)));
  std::set<CanonCode> codes;
  for (Vertex r = 0; r < 3; ++r) codes.insert(ahu_code(RootedTree(path_graph(3), r)));
  EXPECT_EQ(codes.size(), 2u);
}

TEST(RootedIsomorphic, MatchesBruteForceUpToSix) {
  std::vector<RootedTree> corpus;
  for (int n = 1; n <= 6; ++n)
    for (auto& rt : all_rooted_trees(n)) corpus.push_back(rt);
  for (const auto& a : corpus)
    for (const auto& b : corpus)
      EXPECT_EQ(rooted_isomorphic(a, b), brute_isomorphic(a.colored(), b.colored()));
}

TEST(TreeIsomorphic, Examples) {
  EXPECT_FALSE(tree_isomorphic(path_graph(4), star_graph(3)));
  std::vector<Vertex> perm{2, 0, 3, 1};
  EXPECT_TRUE(tree_isomorphic(path_graph(4), permute(path_graph(4), perm)));
}

TEST(TreeIsomorphic, SubdividedFlagSeparatesP2FromP3) {
  // Rootified P2 is a cherry, the same shape as P3 rooted at its middle.
  EXPECT_EQ(ahu_code(rootify(path_graph(2)).rooted), ahu_code(rootify(path_graph(3)).rooted));
  EXPECT_NE(free_tree_key(path_graph(2)), free_tree_key(path_graph(3)));
  EXPECT_FALSE(tree_isomorphic(path_graph(2), path_graph(3)));
}

TEST(TreeIsomorphic, MatchesBruteForceUpToEight) {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 8; ++n) {
    std::vector<Graph> corpus;
    for (const Graph& t : all_free_trees(n)) {
      corpus.push_back(t);
      corpus.push_back(permute(t, testing::random_permutation(n, rng)));
    }
    for (const auto& a : corpus)
      for (const auto& b : corpus)
        ASSERT_EQ(tree_isomorphic(a, b),
                  brute_isomorphic(ColoredGraph::uncolored(a), ColoredGraph::uncolored(b)));
  }
}

TEST(TreeIsomorphic, EquivalenceRelationOnSevenVertexCorpus) {
  std::vector<Graph> corpus;
  std::mt19937_64 rng(23);
  for (int n = 6; n <= 7; ++n)
    for (const Graph& t : all_free_trees(n)) {
      corpus.push_back(t);
      corpus.push_back(permute(t, testing::random_permutation(n, rng)));
    }
  std::size_t m = corpus.size();
  std::vector<std::vector<char>> rel(m, std::vector<char>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rel[i][j] = tree_isomorphic(corpus[i], corpus[j]);
  for (std::size_t i = 0; i < m; ++i) {
    EXPECT_TRUE(rel[i][i]);
    for (std::size_t j = 0; j < m; ++j) {
      EXPECT_EQ(rel[i][j], rel[j][i]);
      for (std::size_t k = 0; k < m; ++k)
        if (rel[i][j] && rel[j][k]) EXPECT_TRUE(rel[i][k]);
    }
  }
}

TEST(ChildClasses, Examples) {
  auto star = child_classes(RootedTree(star_graph(4), 0));
  ASSERT_EQ(star.classes.size(), 1u);
  EXPECT_EQ(star.classes[0].multiplicity, 4);
  EXPECT_EQ(star.classes[0].members, (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_EQ(star.classes[0].representative.vertex_count(), 1);

  Graph g = graph_of(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
  auto mixed = child_classes(RootedTree(g, 0));
  ASSERT_EQ(mixed.classes.size(), 2u);
  EXPECT_EQ(mixed.classes[0].multiplicity, 1);
  EXPECT_EQ(mixed.classes[1].multiplicity, 1);
  EXPECT_EQ(mixed.classes[0].code.code, "(()())");
  EXPECT_EQ(mixed.classes[0].members, (std::vector<Vertex>{2}));
  EXPECT_EQ(mixed.classes[1].code.code, "()");
  EXPECT_LT(mixed.classes[0].code, mixed.classes[1].code);
}

TEST(ChildClasses, MultiplicitiesSumToRootDegree) {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& t : all_free_trees(n))
      for (Vertex r = 0; r < n; ++r) {
        RootedTree rt(t, r);
        auto cc = child_classes(rt);
        int total = 0;
        for (std::size_t i = 0; i < cc.classes.size(); ++i) {
          total += cc.classes[i].multiplicity;
          EXPECT_EQ(ahu_code(cc.classes[i].representative), cc.classes[i].code);
          if (i) EXPECT_LT(cc.classes[i - 1].code, cc.classes[i].code);
        }
        EXPECT_EQ(total, t.degree(r));
      }
}

TEST(RootedClassCounts, PruferDedupAgreesWithLevelSequences) {
  const std::vector<std::size_t> counts{1, 1, 2, 4, 9, 20};
  for (int n = 1; n <= 6; ++n) {
    auto by_prufer = rooted_trees_by_prufer(n);
    std::set<CanonCode> codes;
    for (const auto& rt : all_rooted_trees(n)) codes.insert(ahu_code(rt));
    EXPECT_EQ(by_prufer.size(), counts[n - 1]) << "n=" << n;
    EXPECT_EQ(codes.size(), counts[n - 1]) << "n=" << n;
    std::set<CanonCode> prufer_codes;
    for (const auto& rt : by_prufer) prufer_codes.insert(ahu_code(rt));
    EXPECT_EQ(codes, prufer_codes);
  }
}

TEST(SubtreeInterner, IdsMatchCodes) {
  for (int n = 1; n <= 8; ++n) {
    SubtreeInterner interner;
    std::map<int, CanonCode> by_id;
    for (const Graph& t : all_free_trees(n))
      for (Vertex r = 0; r < n; ++r) {
        RootedTree rt(t, r);
        auto ids = subtree_class_ids(rt, interner);
        auto codes = subtree_codes(rt);
        for (Vertex v = 0; v < n; ++v) {
          auto [it, inserted] = by_id.try_emplace(ids[v], codes[v]);
          EXPECT_EQ(it->second, codes[v]);
        }
      }
    std::set<CanonCode> distinct;
    for (auto& [id, code] : by_id) distinct.insert(code);
    EXPECT_EQ(distinct.size(), by_id.size());
  }
}

}  // namespace
}  // namespace qtree
