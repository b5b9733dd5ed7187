#pragma once

#include "qtree/graph.hpp"

namespace qtree {

// Colored-graph modifications that leave the quantum automorphism group
// unchanged when their preconditions hold. Preconditions are checked and
// reported as Error codes; vertex sets need not be pre-sorted.

// Joins every pair inside s. Requires s independent and a union of whole
// color classes (NotIndependent, NotColorClassUnion).
ColoredGraph add_clique(const ColoredGraph& x, VertexSet s);

// Exact inverse of add_clique: deletes every edge inside s. Requires s to
// be a clique and a union of whole color classes (NotClique,
// NotColorClassUnion).
ColoredGraph remove_clique(const ColoredGraph& x, VertexSet s);

// Adds all s x t edges. Requires s, t disjoint (Overlap), s u t independent
// (NotIndependent), each a union of whole color classes.
ColoredGraph add_biclique(const ColoredGraph& x, VertexSet s, VertexSet t);

// Gives s a fresh color. Requires s monochromatic, a union of
// color-refinement classes (skipped when `force` is set) and a color no
// vertex carries (NotMonochromatic, NotOrbitClosed, ColorInUse).
ColoredGraph recolor(const ColoredGraph& x, VertexSet s, int fresh_color, bool force = false);

// Appends one isolated vertex (id n) colored fresh_color (ColorInUse).
ColoredGraph add_isolated(const ColoredGraph& x, int fresh_color);

}  // namespace qtree
