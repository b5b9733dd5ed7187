#include "qtree/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace qtree {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::HasCycle: return "HasCycle";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotClassUnion: return "NotClassUnion";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::NotClique: return "NotClique";
    case ErrorCode::NotColorClassUnion: return "NotColorClassUnion";
    case ErrorCode::Overlap: return "Overlap";
    case ErrorCode::NotMonochromatic: return "NotMonochromatic";
    case ErrorCode::NotOrbitClosed: return "NotOrbitClosed";
    case ErrorCode::ColorInUse: return "ColorInUse";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
  return labels;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line_no, line);
    if (end == text.size()) break;
    start = end + 1;
  }
}

bool is_comment_or_blank(std::string_view line) {
  auto first = line.find_first_not_of(" \t");
  return first == std::string_view::npos || line[first] == '#';
}

std::string line_prefix(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

}  // namespace

Graph::Graph(int vertex_count) : adjacency_(vertex_count), labels_(default_labels(vertex_count)) {}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (vertex_count < 0) throw Error(ErrorCode::InvalidVertex, "negative vertex count");
  Graph g(vertex_count);
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != vertex_count)
      throw Error(ErrorCode::InvalidVertex, "label count does not match vertex count");
    g.labels_ = std::move(labels);
  }
  for (auto [u, v] : edges) {
    if (!g.contains(u) || !g.contains(v))
      throw Error(ErrorCode::InvalidVertex,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + g.labels_[u]);
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    auto& nbrs = g.adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
    if (dup != nbrs.end())
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge " + g.labels_[v] + " " + g.labels_[*dup]);
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) result.emplace_back(u, v);
  return result;
}

std::string Graph::fresh_label(std::string_view hint) const {
  std::unordered_set<std::string_view> taken(labels_.begin(), labels_.end());
  std::string candidate(hint);
  while (taken.count(candidate)) candidate += '\'';
  return candidate;
}

ColoredGraph ColoredGraph::uncolored(Graph g) {
  ColoredGraph x;
  x.colors.assign(g.vertex_count(), 0);
  x.graph = std::move(g);
  x.palette = 1;
  return x;
}

ColoredGraph ColoredGraph::from_tokens(Graph g, std::span<const std::string> tokens) {
  if (static_cast<int>(tokens.size()) != g.vertex_count())
    throw Error(ErrorCode::InvalidVertex, "color token count does not match vertex count");
  std::unordered_map<std::string, int> ids;
  std::vector<int> colors(tokens.size());
  for (std::size_t v = 0; v < tokens.size(); ++v) {
    auto [it, inserted] = ids.try_emplace(tokens[v], static_cast<int>(ids.size()));
    colors[v] = it->second;
  }
  return with_colors(std::move(g), std::move(colors));
}

ColoredGraph ColoredGraph::with_colors(Graph g, std::vector<int> colors) {
  if (static_cast<int>(colors.size()) != g.vertex_count())
    throw Error(ErrorCode::InvalidVertex, "color count does not match vertex count");
  int palette = 1;
  for (int c : colors) {
    if (c < 0) throw Error(ErrorCode::InvalidVertex, "negative color id");
    palette = std::max(palette, c + 1);
  }
  return ColoredGraph{std::move(g), std::move(colors), palette};
}

bool ColoredGraph::color_used(int color) const {
  return std::find(colors.begin(), colors.end(), color) != colors.end();
}

VertexSet ColoredGraph::color_class(int color) const {
  VertexSet out;
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (colors[v] == color) out.push_back(v);
  return out;
}

RootedTree::RootedTree(Graph tree, Vertex root) : tree_(std::move(tree)), root_(root) {
  require_tree(tree_);
  if (!tree_.contains(root_))
    throw Error(ErrorCode::InvalidVertex, "root " + std::to_string(root_) + " is not a vertex");
}

std::vector<Vertex> RootedTree::bfs_order() const {
  std::vector<Vertex> order;
  order.reserve(vertex_count());
  std::vector<char> seen(vertex_count(), 0);
  order.push_back(root_);
  seen[root_] = 1;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Vertex w : tree_.neighbors(order[head]))
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
  return order;
}

std::vector<Vertex> RootedTree::parents() const {
  std::vector<Vertex> parent(vertex_count(), -1);
  std::vector<char> seen(vertex_count(), 0);
  std::queue<Vertex> queue;
  queue.push(root_);
  seen[root_] = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : tree_.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        queue.push(w);
      }
  }
  return parent;
}

std::vector<std::vector<Vertex>> RootedTree::children() const {
  auto parent = parents();
  std::vector<std::vector<Vertex>> kids(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (parent[v] >= 0) kids[parent[v]].push_back(v);
  return kids;
}

ColoredGraph RootedTree::colored() const {
  std::vector<int> colors(vertex_count(), 0);
  colors[root_] = 1;
  return ColoredGraph{tree_, std::move(colors), 2};
}

ForestOfRootedTrees::ForestOfRootedTrees(Graph graph, VertexSet roots)
    : graph_(std::move(graph)), roots_(make_vertex_set(std::move(roots))) {
  auto comps = components(graph_);
  std::size_t vertices = static_cast<std::size_t>(graph_.vertex_count());
  if (graph_.edge_count() + comps.size() != vertices)
    throw Error(ErrorCode::HasCycle, "forest contains a cycle");
  for (Vertex r : roots_)
    if (!graph_.contains(r)) throw Error(ErrorCode::InvalidVertex, "root out of range");
  for (const auto& comp : comps) {
    auto hits = std::count_if(roots_.begin(), roots_.end(), [&](Vertex r) {
      return std::binary_search(comp.begin(), comp.end(), r);
    });
    if (hits != 1)
      throw Error(ErrorCode::InvalidVertex,
                  "component of vertex " + graph_.label(comp.front()) + " has " +
                      std::to_string(hits) + " roots");
  }
}

ColoredGraph ForestOfRootedTrees::colored() const {
  std::vector<int> colors(graph_.vertex_count(), 0);
  for (Vertex r : roots_) colors[r] = 1;
  return ColoredGraph{graph_, std::move(colors), 2};
}

std::vector<RootedTree> ForestOfRootedTrees::trees() const {
  std::vector<RootedTree> out;
  for (const auto& comp : components(graph_)) {
    auto root_it = std::find_if(roots_.begin(), roots_.end(), [&](Vertex r) {
      return std::binary_search(comp.begin(), comp.end(), r);
    });
    Vertex local_root =
        static_cast<Vertex>(std::lower_bound(comp.begin(), comp.end(), *root_it) - comp.begin());
    out.emplace_back(induced_subgraph(graph_, comp), local_root);
  }
  // components() orders by smallest member; reorder to follow the root order.
  std::vector<std::size_t> idx(out.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto comps = components(graph_);
  std::vector<Vertex> root_of(out.size());
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (Vertex r : roots_)
      if (std::binary_search(comps[i].begin(), comps[i].end(), r)) root_of[i] = r;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return root_of[a] < root_of[b]; });
  std::vector<RootedTree> ordered;
  ordered.reserve(out.size());
  for (auto i : idx) ordered.push_back(out[i]);
  return ordered;
}

ForestOfRootedTrees ForestOfRootedTrees::from_trees(std::span<const RootedTree> trees) {
  Graph g(0);
  VertexSet roots;
  for (const auto& t : trees) {
    roots.push_back(g.vertex_count() + t.root());
    g = disjoint_union(g, t.tree());
  }
  return ForestOfRootedTrees(std::move(g), std::move(roots));
}

Graph parse_edge_list(std::string_view text) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  auto intern = [&](std::string_view token) {
    auto [it, inserted] = ids.try_emplace(std::string(token), static_cast<Vertex>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (is_comment_or_blank(line)) return;
    auto tokens = split_tokens(line);
    if (tokens.size() == 1) {
      intern(tokens[0]);
      return;
    }
    if (tokens.size() != 2)
      throw Error(ErrorCode::MalformedLine,
                  line_prefix(line_no) + "expected \"u v\", got \"" + std::string(line) + "\"");
    if (tokens[0] == tokens[1])
      throw Error(ErrorCode::SelfLoop,
                  line_prefix(line_no) + "self-loop at vertex " + std::string(tokens[0]));
    Vertex u = intern(tokens[0]);
    Vertex v = intern(tokens[1]);
    Edge key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second)
      throw Error(ErrorCode::DuplicateEdge, line_prefix(line_no) + "duplicate edge " +
                                                std::string(tokens[0]) + " " +
                                                std::string(tokens[1]));
    edges.emplace_back(u, v);
  });
  if (labels.empty()) throw Error(ErrorCode::EmptyInput, "input contains no vertices");
  int n = static_cast<int>(labels.size());
  return Graph::from_edges(n, edges, std::move(labels));
}

std::string to_edge_list(const Graph& g) {
  // Reparsing assigns ids by first appearance, so any vertex that would
  // otherwise appear out of id order is declared on its own line first.
  std::ostringstream out;
  std::vector<char> mentioned(g.vertex_count(), 0);
  Vertex next = 0;
  auto advance = [&] {
    while (next < g.vertex_count() && mentioned[next]) ++next;
  };
  for (auto [u, v] : g.edges()) {
    advance();
    std::vector<Vertex> pending;
    for (Vertex w = next; w < v; ++w)
      if (!mentioned[w]) pending.push_back(w);
    if (!(pending.empty() || (pending.size() == 1 && pending[0] == u)))
      for (Vertex w : pending) {
        out << g.label(w) << '\n';
        mentioned[w] = 1;
      }
    out << g.label(u) << ' ' << g.label(v) << '\n';
    mentioned[u] = mentioned[v] = 1;
  }
  for (Vertex w = 0; w < g.vertex_count(); ++w)
    if (!mentioned[w]) out << g.label(w) << '\n';
  return out.str();
}

std::string to_structured(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_structured(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  auto to_int = [](std::string_view token, std::size_t line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorCode::MalformedLine,
                  line_prefix(line_no) + "bad integer \"" + std::string(token) + "\"");
    return value;
  };
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (is_comment_or_blank(line)) return;
    auto tokens = split_tokens(line);
    if (tokens[0] == "n" && tokens.size() == 2 && n < 0) {
      n = to_int(tokens[1], line_no);
    } else if (tokens[0] == "e" && tokens.size() == 3 && n >= 0) {
      edges.emplace_back(to_int(tokens[1], line_no), to_int(tokens[2], line_no));
    } else {
      throw Error(ErrorCode::MalformedLine,
                  line_prefix(line_no) + "unexpected \"" + std::string(line) + "\"");
    }
  });
  if (n < 0) throw Error(ErrorCode::EmptyInput, "missing \"n <count>\" header");
  return Graph::from_edges(n, edges);
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : g.neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

void validate_tree(const Graph& g) {
  if (g.vertex_count() == 0) throw Error(ErrorCode::Empty, "input is empty");
  if (components(g).size() != 1) throw Error(ErrorCode::Disconnected, "input is disconnected");
  if (g.edge_count() != static_cast<std::size_t>(g.vertex_count() - 1))
    throw Error(ErrorCode::HasCycle, "input has a cycle");
}

bool is_tree(const Graph& g) {
  try {
    validate_tree(g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void require_tree(const Graph& g) {
  try {
    validate_tree(g);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotATree, e.what());
  }
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.vertex_count(), -1);
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!g.contains(vertices[i])) throw Error(ErrorCode::InvalidVertex, "vertex out of range");
    local[vertices[i]] = static_cast<Vertex>(i);
    labels.push_back(g.label(vertices[i]));
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
  return Graph::from_edges(static_cast<int>(vertices.size()), edges, std::move(labels));
}

ColoredGraph induced_subgraph(const ColoredGraph& x, std::span<const Vertex> vertices) {
  ColoredGraph out;
  out.graph = induced_subgraph(x.graph, vertices);
  out.colors.reserve(vertices.size());
  for (Vertex v : vertices) out.colors.push_back(x.colors[v]);
  out.palette = x.palette;
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  int shift = a.vertex_count();
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  std::vector<std::string> labels = a.labels();
  // Labels must stay distinct so that edge-list output reparses faithfully.
  std::unordered_set<std::string> taken(labels.begin(), labels.end());
  for (const auto& l : b.labels()) {
    std::string candidate = l;
    while (taken.count(candidate)) candidate += '\'';
    taken.insert(candidate);
    labels.push_back(std::move(candidate));
  }
  return Graph::from_edges(a.vertex_count() + b.vertex_count(), edges, std::move(labels));
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  std::vector<std::string> labels(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) labels[perm[v]] = g.label(v);
  return Graph::from_edges(g.vertex_count(), edges, std::move(labels));
}

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

}  // namespace qtree
