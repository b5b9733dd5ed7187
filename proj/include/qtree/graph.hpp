#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtree/error.hpp"

namespace qtree {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // always kept sorted and duplicate-free

// Finite simple undirected graph on vertices 0..n-1. Every vertex carries a
// display label (the token it had in the input file, or its id). Labels are
// presentation only: equality compares structure.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  // Throws SelfLoop, DuplicateEdge (either orientation) or InvalidVertex.
  static Graph from_edges(int vertex_count, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // A label not used by any vertex, derived from `hint`.
  std::string fresh_label(std::string_view hint) const;

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

// Vertex coloring on top of a graph. `palette` is the number of registered
// colors; every vertex color lies in [0, palette).
struct ColoredGraph {
  Graph graph;
  std::vector<int> colors;
  int palette = 1;

  static ColoredGraph uncolored(Graph g);
  // Dense color ids in first-appearance order of the tokens (by vertex id).
  static ColoredGraph from_tokens(Graph g, std::span<const std::string> tokens);
  // Throws InvalidVertex if a color is negative or sizes mismatch.
  static ColoredGraph with_colors(Graph g, std::vector<int> colors);

  int vertex_count() const noexcept { return graph.vertex_count(); }
  bool color_used(int color) const;
  // Vertices having `color`, sorted.
  VertexSet color_class(int color) const;

  bool operator==(const ColoredGraph& other) const {
    return graph == other.graph && colors == other.colors;
  }
};

class RootedTree {
 public:
  // Throws NotATree if `tree` is not a tree, InvalidVertex for a bad root.
  RootedTree(Graph tree, Vertex root);

  const Graph& tree() const noexcept { return tree_; }
  Vertex root() const noexcept { return root_; }
  int vertex_count() const noexcept { return tree_.vertex_count(); }

  // parent[root] == -1.
  std::vector<Vertex> parents() const;
  // Vertices in breadth-first order from the root.
  std::vector<Vertex> bfs_order() const;
  // Children of each vertex, sorted by id.
  std::vector<std::vector<Vertex>> children() const;

  // Root colored 1, everything else 0.
  ColoredGraph colored() const;

 private:
  Graph tree_;
  Vertex root_;
};

// Forest whose components each carry exactly one root.
class ForestOfRootedTrees {
 public:
  // Throws HasCycle, or InvalidVertex when roots do not pick exactly one
  // vertex per component.
  ForestOfRootedTrees(Graph graph, VertexSet roots);

  const Graph& graph() const noexcept { return graph_; }
  const VertexSet& roots() const noexcept { return roots_; }

  // Roots colored 1, non-roots 0.
  ColoredGraph colored() const;
  // Each component as a standalone rooted tree (ids renumbered in
  // increasing order, labels kept), ordered like roots().
  std::vector<RootedTree> trees() const;

  static ForestOfRootedTrees from_trees(std::span<const RootedTree> trees);

 private:
  Graph graph_;
  VertexSet roots_;
};

// Edge-list text: one "u v" per line, '#' comment lines, blank lines
// ignored, a single token declares a vertex. Tokens are renumbered in
// first-appearance order and kept as labels.
Graph parse_edge_list(std::string_view text);
// Inverse of parse_edge_list, using the labels.
std::string to_edge_list(const Graph& g);

// Structured form: "n <count>" then "e u v" per edge (u < v, sorted).
std::string to_structured(const Graph& g);
Graph parse_structured(std::string_view text);

// Throws Empty, Disconnected or HasCycle.
void validate_tree(const Graph& g);
bool is_tree(const Graph& g);
// Like validate_tree but reports every failure as NotATree.
void require_tree(const Graph& g);

// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

// Subgraph induced by a sorted vertex set; vertex i of the result is
// `vertices[i]`. Labels and colors are inherited.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
ColoredGraph induced_subgraph(const ColoredGraph& x, std::span<const Vertex> vertices);

// Disjoint union; vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

// Relabels vertex v as perm[v]; labels travel with their vertices.
Graph permute(const Graph& g, std::span<const Vertex> perm);

VertexSet make_vertex_set(std::vector<Vertex> vertices);

}  // namespace qtree
