#include "qtree/refine.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace qtree {

Partition Partition::from_labels(const std::vector<int>& labels) {
  Partition p;
  p.class_of.assign(labels.size(), -1);
  std::unordered_map<int, int> ids;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] < 0) continue;
    auto [it, inserted] = ids.try_emplace(labels[v], p.class_count());
    if (inserted) p.classes.emplace_back();
    p.class_of[v] = it->second;
    p.classes[it->second].push_back(static_cast<Vertex>(v));
  }
  return p;
}

Partition refine_once(const ColoredGraph& x, const Partition& p) {
  const Graph& g = x.graph;
  // New class key: (old class, sorted neighbor classes). Keys are numbered
  // in order of their smallest vertex, which keeps ids canonical.
  std::map<std::pair<int, std::vector<int>>, int> keys;
  std::vector<int> labels(g.vertex_count(), -1);
  std::vector<int> signature;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (p.class_of[v] < 0) continue;
    signature.clear();
    for (Vertex w : g.neighbors(v))
      if (p.class_of[w] >= 0) signature.push_back(p.class_of[w]);
    std::sort(signature.begin(), signature.end());
    auto [it, inserted] =
        keys.try_emplace({p.class_of[v], signature}, static_cast<int>(keys.size()));
    labels[v] = it->second;
  }
  return Partition::from_labels(labels);
}

Partition color_refinement(const ColoredGraph& x) {
  Partition p = Partition::from_labels(x.colors);
  // Refinement only splits classes, so an unchanged class count is a fixpoint.
  while (true) {
    Partition next = refine_once(x, p);
    if (next.class_count() == p.class_count()) return next;
    p = std::move(next);
  }
}

bool is_union_of_classes(const Partition& p, const VertexSet& s) {
  std::vector<int> hits(p.class_count(), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= static_cast<int>(p.class_of.size()) || p.class_of[v] < 0) return false;
    ++hits[p.class_of[v]];
  }
  for (int c = 0; c < p.class_count(); ++c)
    if (hits[c] != 0 && hits[c] != static_cast<int>(p.classes[c].size())) return false;
  return true;
}

Partition refine_induced(const ColoredGraph& x, const VertexSet& s) {
  for (Vertex v : s)
    if (!x.graph.contains(v))
      throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
  if (!is_union_of_classes(color_refinement(x), s))
    throw Error(ErrorCode::NotClassUnion, "vertex set is not a union of refinement classes");
  Partition local = color_refinement(induced_subgraph(x, s));
  std::vector<int> labels(x.vertex_count(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) labels[s[i]] = local.class_of[i];
  return Partition::from_labels(labels);
}

bool fractionally_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  std::vector<int> colors = a.colors;
  colors.insert(colors.end(), b.colors.begin(), b.colors.end());
  ColoredGraph both =
      ColoredGraph::with_colors(disjoint_union(a.graph, b.graph), std::move(colors));
  Partition p = color_refinement(both);
  int n = a.vertex_count();
  for (const auto& cls : p.classes) {
    auto from_a = std::count_if(cls.begin(), cls.end(), [n](Vertex v) { return v < n; });
    if (2 * from_a != static_cast<long>(cls.size())) return false;
  }
  return true;
}

}  // namespace qtree
