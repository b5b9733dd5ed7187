#pragma once

#include <vector>

#include "qtree/graph.hpp"

namespace qtree {

struct CenterResult {
  VertexSet center;               // one vertex, or two adjacent vertices
  int radius = 0;
  std::vector<int> eccentricities;  // indexed by vertex
};

struct Rootification {
  RootedTree rooted;
  bool subdivided = false;
  VertexSet original_center;
};

struct LeafLayers {
  std::vector<VertexSet> layers;
  VertexSet survivors;
};

// Eccentricity of every vertex by BFS from each vertex. Throws NotATree.
CenterResult center_by_eccentricity(const Graph& t);

// Jordan's procedure: strip all leaves simultaneously until at most two
// vertices remain. Throws NotATree.
VertexSet center_by_leaf_stripping(const Graph& t);

// Works on any graph. layers[k] holds the leaves (degree exactly 1) of the
// graph left after k rounds. A round that would remove every remaining
// vertex is not taken, so on a tree the survivors are its center.
LeafLayers leaf_stripping_layers(const Graph& g);

// Roots a tree at its center vertex, or at a new vertex (id n) subdividing
// the central edge. Throws NotATree.
Rootification rootify(const Graph& t);

}  // namespace qtree
