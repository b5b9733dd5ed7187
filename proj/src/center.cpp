#include "qtree/center.hpp"

#include <algorithm>
#include <limits>

namespace qtree {

namespace {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

}  // namespace

CenterResult center_by_eccentricity(const Graph& t) {
  require_tree(t);
  CenterResult result;
  result.eccentricities.resize(t.vertex_count());
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    auto dist = bfs_distances(t, v);
    result.eccentricities[v] = *std::max_element(dist.begin(), dist.end());
  }
  result.radius = *std::min_element(result.eccentricities.begin(), result.eccentricities.end());
  for (Vertex v = 0; v < t.vertex_count(); ++v)
    if (result.eccentricities[v] == result.radius) result.center.push_back(v);
  return result;
}

VertexSet center_by_leaf_stripping(const Graph& t) {
  require_tree(t);
  int n = t.vertex_count();
  std::vector<int> degree(n);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) leaves.push_back(v);
  }
  int remaining = n;
  std::vector<char> removed(n, 0);
  while (remaining > 2) {
    std::vector<Vertex> next;
    for (Vertex leaf : leaves) {
      removed[leaf] = 1;
      --remaining;
    }
    for (Vertex leaf : leaves)
      for (Vertex w : t.neighbors(leaf))
        if (!removed[w] && --degree[w] == 1) next.push_back(w);
    leaves = std::move(next);
  }
  VertexSet center;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) center.push_back(v);
  return center;
}

LeafLayers leaf_stripping_layers(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  int remaining = n;
  LeafLayers out;
  while (true) {
    VertexSet leaves;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && degree[v] == 1) leaves.push_back(v);
    if (leaves.empty() || static_cast<int>(leaves.size()) == remaining) break;
    for (Vertex v : leaves) removed[v] = 1;
    for (Vertex v : leaves)
      for (Vertex w : g.neighbors(v))
        if (!removed[w]) --degree[w];
    remaining -= static_cast<int>(leaves.size());
    out.layers.push_back(std::move(leaves));
  }
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) out.survivors.push_back(v);
  return out;
}

Rootification rootify(const Graph& t) {
  VertexSet center = center_by_leaf_stripping(t);
  if (center.size() == 1) return Rootification{RootedTree(t, center[0]), false, center};

  Vertex z1 = center[0];
  Vertex z2 = center[1];
  Vertex r = t.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(t.edge_count() + 1);
  for (auto e : t.edges())
    if (e != Edge{z1, z2}) edges.push_back(e);
  edges.emplace_back(z1, r);
  edges.emplace_back(z2, r);
  auto labels = t.labels();
  labels.push_back(t.fresh_label("r"));
  Graph subdivided = Graph::from_edges(t.vertex_count() + 1, edges, std::move(labels));
  return Rootification{RootedTree(std::move(subdivided), r), true, center};
}

}  // namespace qtree
