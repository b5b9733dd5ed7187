#include "qtree/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <map>
#include <numeric>
#include <queue>

#include "qtree/canon.hpp"

namespace qtree {

int brute_limit_from_env() {
  const char* raw = std::getenv("QTREE_MAX_BRUTE");
  if (raw == nullptr) return kDefaultBruteLimit;
  int value = 0;
  auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc() || *ptr != '\0' || value < 1) return kDefaultBruteLimit;
  return value;
}

namespace {

void check_size(const ColoredGraph& x, int max_vertices) {
  if (x.vertex_count() > max_vertices)
    throw Error(ErrorCode::TooLarge, "brute force limited to " + std::to_string(max_vertices) +
                                         " vertices, got " + std::to_string(x.vertex_count()));
}

std::vector<char> adjacency_matrix(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : g.edges()) m[u * n + v] = m[v * n + u] = 1;
  return m;
}

// Backtracking search for color-preserving isomorphisms from a onto b.
// Vertices of a are placed in breadth-first order so that every vertex
// after the first of its component has an already-placed neighbor, whose
// image's neighbors are the only candidates.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const ColoredGraph& a, const ColoredGraph& b)
      : a_(a), b_(b), n_(a.vertex_count()), adj_a_(adjacency_matrix(a.graph)),
        adj_b_(adjacency_matrix(b.graph)), image_(n_, -1), used_(n_, 0) {
    std::vector<char> seen(n_, 0);
    for (Vertex s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      std::size_t start = order_.size();
      order_.push_back(s);
      anchor_.push_back(-1);
      for (std::size_t head = start; head < order_.size(); ++head)
        for (Vertex w : a.graph.neighbors(order_[head]))
          if (!seen[w]) {
            seen[w] = 1;
            order_.push_back(w);
            anchor_.push_back(order_[head]);
          }
    }
  }

  void run(const std::function<bool(const Permutation&)>& visit) {
    if (a_.vertex_count() != b_.vertex_count() || a_.graph.edge_count() != b_.graph.edge_count())
      return;
    visit_ = &visit;
    extend(0);
  }

 private:
  bool consistent(std::size_t depth, Vertex v, Vertex c) const {
    if (used_[c] || a_.colors[v] != b_.colors[c] || a_.graph.degree(v) != b_.graph.degree(c))
      return false;
    for (std::size_t j = 0; j < depth; ++j) {
      Vertex u = order_[j];
      if (adj_a_[v * n_ + u] != adj_b_[c * n_ + image_[u]]) return false;
    }
    return true;
  }

  // Returns false once the visitor asked to stop.
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return (*visit_)(image_);
    Vertex v = order_[depth];
    auto try_candidate = [&](Vertex c) {
      if (!consistent(depth, v, c)) return true;
      image_[v] = c;
      used_[c] = 1;
      bool keep_going = extend(depth + 1);
      used_[c] = 0;
      image_[v] = -1;
      return keep_going;
    };
    if (anchor_[depth] >= 0) {
      for (Vertex c : b_.graph.neighbors(image_[anchor_[depth]]))
        if (!try_candidate(c)) return false;
    } else {
      for (Vertex c = 0; c < n_; ++c)
        if (!try_candidate(c)) return false;
    }
    return true;
  }

  const ColoredGraph& a_;
  const ColoredGraph& b_;
  int n_;
  std::vector<char> adj_a_;
  std::vector<char> adj_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_;
  Permutation image_;
  std::vector<char> used_;
  const std::function<bool(const Permutation&)>* visit_ = nullptr;
};

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

void check_tree_size(int n) {
  if (n < 1 || n > 18)
    throw Error(ErrorCode::OutOfRange, "tree size must be in 1..18, got " + std::to_string(n));
}

// Beyer-Hedetniemi successor of a level sequence (root level 0). When `p`
// is given, it is the position to increment instead of the last non-1.
bool next_level_sequence(std::vector<int>& levels, std::optional<std::size_t> forced = {}) {
  std::size_t p;
  if (forced) {
    p = *forced;
  } else {
    p = levels.size() - 1;
    while (p > 0 && levels[p] == 1) --p;
  }
  if (p == 0) return false;
  std::size_t q = p - 1;
  while (levels[q] != levels[p] - 1) --q;
  for (std::size_t i = p; i < levels.size(); ++i) levels[i] = levels[i - p + q];
  return true;
}

// Left subtree of the root versus everything else, as level sequences.
std::pair<std::vector<int>, std::vector<int>> split_first_subtree(const std::vector<int>& levels) {
  std::size_t m = levels.size();
  bool first = false;
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (levels[i] == 1) {
      if (first) {
        m = i;
        break;
      }
      first = true;
    }
  std::vector<int> left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(levels[i] - 1);
  std::vector<int> rest{0};
  for (std::size_t i = m; i < levels.size(); ++i) rest.push_back(levels[i]);
  return {left, rest};
}

// Accepts the candidate if it is the canonical center rooting, otherwise
// jumps ahead to the next candidate that can be.
std::vector<int> wrom_step(std::vector<int> candidate) {
  auto [left, rest] = split_first_subtree(candidate);
  int left_height = *std::max_element(left.begin(), left.end());
  int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size())
      valid = false;
    else if (left.size() == rest.size() && left > rest)
      valid = false;
  }
  if (valid) return candidate;
  std::size_t p = left.size();
  std::vector<int> jumped = candidate;
  next_level_sequence(jumped, p);
  if (candidate[p] > 2) {
    auto [new_left, new_rest] = split_first_subtree(jumped);
    int h = *std::max_element(new_left.begin(), new_left.end());
    std::size_t len = static_cast<std::size_t>(h) + 1;
    for (std::size_t i = 0; i < len; ++i) jumped[jumped.size() - len + i] = static_cast<int>(i) + 1;
  }
  return jumped;
}

}  // namespace

void for_each_automorphism(const ColoredGraph& x,
                           const std::function<bool(const Permutation&)>& visit,
                           int max_vertices) {
  check_size(x, max_vertices);
  IsomorphismSearch(x, x).run(visit);
}

std::vector<Permutation> brute_automorphisms(const ColoredGraph& x, int max_vertices) {
  std::vector<Permutation> out;
  for_each_automorphism(
      x,
      [&](const Permutation& p) {
        out.push_back(p);
        return true;
      },
      max_vertices);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_automorphisms(const ColoredGraph& x, int max_vertices) {
  std::uint64_t count = 0;
  for_each_automorphism(
      x,
      [&](const Permutation&) {
        ++count;
        return true;
      },
      max_vertices);
  return count;
}

Partition brute_orbits(const ColoredGraph& x, int max_vertices) {
  std::vector<int> parent(x.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  for_each_automorphism(
      x,
      [&](const Permutation& p) {
        for (Vertex v = 0; v < static_cast<Vertex>(p.size()); ++v) {
          int a = find_root(parent, v);
          int b = find_root(parent, p[v]);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
        return true;
      },
      max_vertices);
  std::vector<int> labels(x.vertex_count());
  for (Vertex v = 0; v < x.vertex_count(); ++v) labels[v] = find_root(parent, v);
  return Partition::from_labels(labels);
}

bool brute_isomorphic(const ColoredGraph& a, const ColoredGraph& b, int max_vertices) {
  check_size(a, max_vertices);
  check_size(b, max_vertices);
  bool found = false;
  IsomorphismSearch(a, b).run([&](const Permutation&) {
    found = true;
    return false;
  });
  return found;
}

Graph tree_from_levels(std::span<const int> levels) {
  std::vector<Edge> edges;
  std::vector<Vertex> last_at_level;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    int level = levels[i];
    if (level > 0) edges.emplace_back(last_at_level[level - 1], static_cast<Vertex>(i));
    last_at_level.resize(level + 1);
    last_at_level[level] = static_cast<Vertex>(i);
  }
  return Graph::from_edges(static_cast<int>(levels.size()), edges);
}

RootedTreeStream::RootedTreeStream(int n) {
  check_tree_size(n);
  levels_.resize(n);
  std::iota(levels_.begin(), levels_.end(), 0);
}

std::optional<RootedTree> RootedTreeStream::next() {
  if (done_) return std::nullopt;
  RootedTree current(tree_from_levels(levels_), 0);
  done_ = !next_level_sequence(levels_);
  return current;
}

FreeTreeStream::FreeTreeStream(int n) : n_(n) {
  check_tree_size(n);
  if (n <= 2) return;
  // Path rooted at its center.
  for (int i = 0; i <= n / 2; ++i) levels_.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) levels_.push_back(i);
}

std::optional<Graph> FreeTreeStream::next() {
  if (done_) return std::nullopt;
  if (n_ <= 2) {
    done_ = true;
    return n_ == 1 ? Graph(1) : Graph::from_edges(2, std::vector<Edge>{{0, 1}});
  }
  levels_ = wrom_step(std::move(levels_));
  Graph current = tree_from_levels(levels_);
  done_ = !next_level_sequence(levels_);
  return current;
}

std::vector<RootedTree> all_rooted_trees(int n) {
  std::vector<RootedTree> out;
  RootedTreeStream stream(n);
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<Graph> all_free_trees(int n) {
  std::vector<Graph> out;
  FreeTreeStream stream(n);
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

Graph prufer_decode(int n, std::span<const int> code) {
  if (n < 1 || (n >= 2 && static_cast<int>(code.size()) != n - 2) || (n == 1 && !code.empty()))
    throw Error(ErrorCode::OutOfRange, "Prufer code length must be n - 2");
  if (n == 1) return Graph(1);
  std::vector<int> degree(n, 1);
  for (int c : code) {
    if (c < 0 || c >= n) throw Error(ErrorCode::OutOfRange, "Prufer entry out of range");
    ++degree[c];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int c : code) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  int u = leaves.top();
  leaves.pop();
  edges.emplace_back(u, leaves.top());
  return Graph::from_edges(n, edges);
}

void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "tree size must be positive");
  if (n <= 2) {
    visit(prufer_decode(n, {}));
    return;
  }
  std::vector<int> code(n - 2, 0);
  while (true) {
    visit(prufer_decode(n, code));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) return;
  }
}

std::vector<Graph> free_trees_by_prufer(int n) {
  std::map<FreeTreeKey, Graph> classes;
  for_each_labeled_tree(n, [&](const Graph& g) { classes.try_emplace(free_tree_key(g), g); });
  std::vector<Graph> out;
  for (auto& [key, g] : classes) out.push_back(g);
  return out;
}

std::vector<RootedTree> rooted_trees_by_prufer(int n) {
  std::map<CanonCode, RootedTree> classes;
  for_each_labeled_tree(n, [&](const Graph& g) {
    for (Vertex r = 0; r < n; ++r) {
      RootedTree rt(g, r);
      classes.try_emplace(ahu_code(rt), rt);
    }
  });
  std::vector<RootedTree> out;
  for (auto& [code, rt] : classes) out.push_back(rt);
  return out;
}

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "tree size must be positive");
  if (n <= 2) return prufer_decode(n, {});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  return prufer_decode(n, code);
}

}  // namespace qtree
