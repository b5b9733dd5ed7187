#pragma once

#include <vector>

#include "qtree/graph.hpp"

namespace qtree {

// Partition of a vertex domain into classes numbered 0..k-1 by smallest
// member. class_of spans the ambient graph; vertices outside the domain
// (possible only for refine_induced results) map to -1.
struct Partition {
  std::vector<int> class_of;
  std::vector<VertexSet> classes;

  int class_count() const noexcept { return static_cast<int>(classes.size()); }
  bool operator==(const Partition&) const = default;

  // Builds the canonical numbering from arbitrary per-vertex keys; vertices
  // with key -1 are left outside the domain.
  static Partition from_labels(const std::vector<int>& labels);
};

// Stable color refinement (1-WL) starting from the vertex colors.
Partition color_refinement(const ColoredGraph& x);

// One refinement round applied to `p`; `p` is stable iff this returns `p`.
Partition refine_once(const ColoredGraph& x, const Partition& p);

bool is_union_of_classes(const Partition& p, const VertexSet& s);

// Refinement of the subgraph induced by s, reported on the original ids.
// Throws NotClassUnion unless s is a union of color_refinement(x) classes.
Partition refine_induced(const ColoredGraph& x, const VertexSet& s);

// Refinement on the disjoint union; true iff every class holds equally many
// vertices from each side.
bool fractionally_isomorphic(const ColoredGraph& a, const ColoredGraph& b);

}  // namespace qtree
