#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "qtree/graph.hpp"
#include "qtree/refine.hpp"

namespace qtree {

// Brute-force ground truth. Nothing here depends on the canonization,
// refinement or decomposition code it is used to check, except the
// Prufer-dedup enumerators, which need an isomorphism key by construction.

using Permutation = std::vector<Vertex>;  // perm[v] is the image of v

inline constexpr int kDefaultBruteLimit = 12;

// QTREE_MAX_BRUTE, or kDefaultBruteLimit when unset or unparsable.
int brute_limit_from_env();

// Calls visit for every color- and adjacency-preserving permutation, in
// lexicographic order of the images along a breadth-first vertex order.
// visit returns false to stop. Throws TooLarge above max_vertices.
void for_each_automorphism(const ColoredGraph& x,
                           const std::function<bool(const Permutation&)>& visit,
                           int max_vertices = kDefaultBruteLimit);

std::vector<Permutation> brute_automorphisms(const ColoredGraph& x,
                                             int max_vertices = kDefaultBruteLimit);
std::uint64_t count_automorphisms(const ColoredGraph& x, int max_vertices = kDefaultBruteLimit);
Partition brute_orbits(const ColoredGraph& x, int max_vertices = kDefaultBruteLimit);

// Color-preserving isomorphism search between two colored graphs.
bool brute_isomorphic(const ColoredGraph& a, const ColoredGraph& b,
                      int max_vertices = kDefaultBruteLimit);

// One representative per rooted-tree isomorphism class, generated as
// canonical level sequences (Beyer-Hedetniemi successor rule). The root is
// vertex 0. Throws OutOfRange unless 1 <= n <= 18.
class RootedTreeStream {
 public:
  explicit RootedTreeStream(int n);
  std::optional<RootedTree> next();

 private:
  std::vector<int> levels_;
  bool done_ = false;
};

// One representative per free-tree isomorphism class (Wright, Richmond,
// Odlyzko and McKay: level sequences of center-rooted trees).
class FreeTreeStream {
 public:
  explicit FreeTreeStream(int n);
  std::optional<Graph> next();

 private:
  int n_;
  std::vector<int> levels_;
  bool done_ = false;
};

std::vector<RootedTree> all_rooted_trees(int n);
std::vector<Graph> all_free_trees(int n);

// Tree with parent of vertex i = last earlier vertex one level up.
Graph tree_from_levels(std::span<const int> levels);

// Prufer code of length n-2 over 0..n-1 -> labeled tree on n vertices.
Graph prufer_decode(int n, std::span<const int> code);
// All n^(n-2) labeled trees (n >= 1).
void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& visit);
// Free and rooted isomorphism classes by exhaustive Prufer enumeration,
// deduplicated by canonical key, ordered by key. Intended for n <= 8.
std::vector<Graph> free_trees_by_prufer(int n);
std::vector<RootedTree> rooted_trees_by_prufer(int n);

// Uniform random labeled tree.
Graph random_tree(int n, std::mt19937_64& rng);

}  // namespace qtree
