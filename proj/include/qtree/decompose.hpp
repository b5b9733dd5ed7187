#pragma once

#include "qtree/center.hpp"
#include "qtree/graph.hpp"
#include "qtree/group_expr.hpp"
#include "qtree/refine.hpp"

namespace qtree {

struct TreeReport {
  int vertex_count = 0;
  std::size_t edge_count = 0;
  CenterResult center;
  Rootification rootification;
  GroupExpr qut = GroupExpr::triv();
  BigInt classical_order = 1;
  bool quantum_symmetry = false;
  Partition refinement_partition;
};

// Quantum automorphism group of a rooted tree (root fixed), in normal form:
// the free product over isomorphism classes of root subtrees T_i, with
// multiplicity m_i, of qut_rooted(T_i) wr S_{m_i}^+. Each isomorphism class
// of subtree is evaluated once. Safe to call concurrently.
GroupExpr qut_rooted(const RootedTree& rt);

// Qut of an unrooted tree, via its rootification. Throws NotATree.
GroupExpr qut_tree(const Graph& t);

// Qut of a forest with roots colored apart from non-roots. The empty forest
// gives the trivial group.
GroupExpr qut_forest(const ForestOfRootedTrees& f);

// An unrooted tree whose Qut equals qut_rooted(rt): K1 when rt is a path
// rooted at an endpoint, otherwise rt plus a 2|V|-vertex path rooted at an
// end, both roots joined to a new vertex.
Graph rooted_to_tree(const RootedTree& rt);

// Throws NotATree.
TreeReport analyze(const Graph& t);

}  // namespace qtree
