#include "qtree/surgery.hpp"

#include <algorithm>

#include "qtree/refine.hpp"

namespace qtree {

namespace {

void check_vertices(const ColoredGraph& x, const VertexSet& s) {
  for (Vertex v : s)
    if (!x.graph.contains(v))
      throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
}

bool independent(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

bool is_color_class_union(const ColoredGraph& x, const VertexSet& s) {
  std::vector<char> inside(x.vertex_count(), 0);
  for (Vertex v : s) inside[v] = 1;
  std::vector<char> touched(x.palette, 0);
  for (Vertex v : s) touched[x.colors[v]] = 1;
  for (Vertex v = 0; v < x.vertex_count(); ++v)
    if (touched[x.colors[v]] && !inside[v]) return false;
  return true;
}

void check_fresh(const ColoredGraph& x, int color) {
  if (color < 0) throw Error(ErrorCode::ColorInUse, "negative color id");
  if (x.color_used(color))
    throw Error(ErrorCode::ColorInUse, "color " + std::to_string(color) + " is already in use");
}

ColoredGraph with_edges(const ColoredGraph& x, std::vector<Edge> edges) {
  ColoredGraph out;
  out.graph = Graph::from_edges(x.vertex_count(), edges, x.graph.labels());
  out.colors = x.colors;
  out.palette = x.palette;
  return out;
}

}  // namespace

ColoredGraph add_clique(const ColoredGraph& x, VertexSet s) {
  s = make_vertex_set(std::move(s));
  check_vertices(x, s);
  if (!independent(x.graph, s))
    throw Error(ErrorCode::NotIndependent, "vertex set is not independent");
  if (!is_color_class_union(x, s))
    throw Error(ErrorCode::NotColorClassUnion, "vertex set is not a union of color classes");
  auto edges = x.graph.edges();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) edges.emplace_back(s[i], s[j]);
  return with_edges(x, std::move(edges));
}

ColoredGraph remove_clique(const ColoredGraph& x, VertexSet s) {
  s = make_vertex_set(std::move(s));
  check_vertices(x, s);
  if (!is_clique(x.graph, s)) throw Error(ErrorCode::NotClique, "vertex set is not a clique");
  if (!is_color_class_union(x, s))
    throw Error(ErrorCode::NotColorClassUnion, "vertex set is not a union of color classes");
  std::vector<char> inside(x.vertex_count(), 0);
  for (Vertex v : s) inside[v] = 1;
  auto edges = x.graph.edges();
  std::erase_if(edges, [&](const Edge& e) { return inside[e.first] && inside[e.second]; });
  return with_edges(x, std::move(edges));
}

ColoredGraph add_biclique(const ColoredGraph& x, VertexSet s, VertexSet t) {
  s = make_vertex_set(std::move(s));
  t = make_vertex_set(std::move(t));
  check_vertices(x, s);
  check_vertices(x, t);
  VertexSet both;
  std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(both));
  if (!both.empty()) throw Error(ErrorCode::Overlap, "vertex sets overlap");
  std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(both));
  if (!independent(x.graph, both))
    throw Error(ErrorCode::NotIndependent, "union of vertex sets is not independent");
  if (!is_color_class_union(x, s) || !is_color_class_union(x, t))
    throw Error(ErrorCode::NotColorClassUnion, "vertex set is not a union of color classes");
  auto edges = x.graph.edges();
  for (Vertex u : s)
    for (Vertex v : t) edges.emplace_back(u, v);
  return with_edges(x, std::move(edges));
}

ColoredGraph recolor(const ColoredGraph& x, VertexSet s, int fresh_color, bool force) {
  s = make_vertex_set(std::move(s));
  check_vertices(x, s);
  for (Vertex v : s)
    if (x.colors[v] != x.colors[s.front()])
      throw Error(ErrorCode::NotMonochromatic, "vertex set is not monochromatic");
  if (!force && !is_union_of_classes(color_refinement(x), s))
    throw Error(ErrorCode::NotOrbitClosed,
                "vertex set is not a union of color-refinement classes");
  check_fresh(x, fresh_color);
  ColoredGraph out = x;
  for (Vertex v : s) out.colors[v] = fresh_color;
  out.palette = std::max(out.palette, fresh_color + 1);
  return out;
}

ColoredGraph add_isolated(const ColoredGraph& x, int fresh_color) {
  check_fresh(x, fresh_color);
  auto labels = x.graph.labels();
  labels.push_back(x.graph.fresh_label("r"));
  ColoredGraph out;
  out.graph = Graph::from_edges(x.vertex_count() + 1, x.graph.edges(), std::move(labels));
  out.colors = x.colors;
  out.colors.push_back(fresh_color);
  out.palette = std::max(x.palette, fresh_color + 1);
  return out;
}

}  // namespace qtree
