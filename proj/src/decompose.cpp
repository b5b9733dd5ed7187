#include "qtree/decompose.hpp"

#include <algorithm>
#include <unordered_set>

#include "qtree/canon.hpp"

namespace qtree {

namespace {

// Evaluates Qut for every subtree class of one or more rooted trees sharing
// an interner. expr_[id] is filled the first time class `id` is seen.
class QutEvaluator {
 public:
  GroupExpr evaluate(const RootedTree& rt) {
    auto order = rt.bfs_order();
    auto parent = rt.parents();
    std::vector<std::vector<int>> child_ids(rt.vertex_count());
    int root_id = -1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Vertex v = *it;
      auto& mine = child_ids[v];
      std::sort(mine.begin(), mine.end());
      std::vector<int> key = mine;
      int id = interner_.intern(std::move(key));
      if (id == static_cast<int>(expr_.size())) expr_.push_back(combine(mine));
      if (parent[v] >= 0)
        child_ids[parent[v]].push_back(id);
      else
        root_id = id;
      std::vector<int>().swap(mine);
    }
    return expr_[root_id];
  }

  // Product over runs of equal class ids of expr wr S_m^+.
  GroupExpr combine(const std::vector<int>& sorted_ids) const {
    std::vector<GroupExpr> factors;
    for (std::size_t i = 0; i < sorted_ids.size();) {
      std::size_t j = i;
      while (j < sorted_ids.size() && sorted_ids[j] == sorted_ids[i]) ++j;
      factors.push_back(normal_wreath(expr_[sorted_ids[i]], static_cast<int>(j - i)));
      i = j;
    }
    return normal_product(factors);
  }

 private:
  SubtreeInterner interner_;
  std::vector<GroupExpr> expr_;
};

bool is_path_rooted_at_endpoint(const RootedTree& rt) {
  const Graph& g = rt.tree();
  if (g.vertex_count() == 1) return true;
  if (g.degree(rt.root()) != 1) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

}  // namespace

GroupExpr qut_rooted(const RootedTree& rt) {
  QutEvaluator evaluator;
  return evaluator.evaluate(rt);
}

GroupExpr qut_tree(const Graph& t) { return qut_rooted(rootify(t).rooted); }

GroupExpr qut_forest(const ForestOfRootedTrees& f) {
  auto trees = f.trees();
  if (trees.empty()) return GroupExpr::triv();
  // Grouping by rooted class id is grouping by AHU code.
  QutEvaluator evaluator;
  SubtreeInterner classes;
  std::vector<std::pair<int, GroupExpr>> tagged;
  for (const auto& t : trees) {
    auto ids = subtree_class_ids(t, classes);
    tagged.emplace_back(ids[t.root()], evaluator.evaluate(t));
  }
  std::stable_sort(tagged.begin(), tagged.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<GroupExpr> factors;
  for (std::size_t i = 0; i < tagged.size();) {
    std::size_t j = i;
    while (j < tagged.size() && tagged[j].first == tagged[i].first) ++j;
    factors.push_back(normal_wreath(tagged[i].second, static_cast<int>(j - i)));
    i = j;
  }
  return normal_product(factors);
}

Graph rooted_to_tree(const RootedTree& rt) {
  if (is_path_rooted_at_endpoint(rt)) return Graph(1);
  const Graph& t = rt.tree();
  int n = t.vertex_count();
  int path_len = 2 * n;
  int total = n + path_len + 1;
  std::vector<Edge> edges = t.edges();
  for (int i = 0; i + 1 < path_len; ++i) edges.emplace_back(n + i, n + i + 1);
  Vertex hub = n + path_len;
  edges.emplace_back(rt.root(), hub);
  edges.emplace_back(n, hub);

  auto labels = t.labels();
  std::unordered_set<std::string> taken(labels.begin(), labels.end());
  auto fresh = [&](std::string candidate) {
    while (taken.count(candidate)) candidate += '\'';
    taken.insert(candidate);
    labels.push_back(candidate);
  };
  for (int i = 0; i < path_len; ++i) fresh("p" + std::to_string(i));
  fresh("r");
  return Graph::from_edges(total, edges, std::move(labels));
}

TreeReport analyze(const Graph& t) {
  CenterResult center = center_by_eccentricity(t);
  Rootification rootification = rootify(t);
  GroupExpr qut = qut_rooted(rootification.rooted);
  BigInt order = classical_order(qut);
  bool quantum = !is_classical(qut);
  return TreeReport{t.vertex_count(),
                    t.edge_count(),
                    std::move(center),
                    std::move(rootification),
                    std::move(qut),
                    std::move(order),
                    quantum,
                    color_refinement(ColoredGraph::uncolored(t))};
}

}  // namespace qtree
