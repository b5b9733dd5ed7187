#include "qtree/canon.hpp"

#include <algorithm>

#include "qtree/center.hpp"

namespace qtree {

std::vector<CanonCode> subtree_codes(const RootedTree& rt) {
  auto order = rt.bfs_order();
  auto kids = rt.children();
  std::vector<CanonCode> codes(rt.vertex_count());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    std::vector<const std::string*> parts;
    parts.reserve(kids[v].size());
    std::size_t total = 2;
    for (Vertex c : kids[v]) {
      parts.push_back(&codes[c].code);
      total += codes[c].code.size();
    }
    std::sort(parts.begin(), parts.end(), [](auto* a, auto* b) { return *a < *b; });
    std::string code;
    code.reserve(total);
    code += '(';
    for (auto* p : parts) code += *p;
    code += ')';
    codes[v].code = std::move(code);
  }
  return codes;
}

CanonCode ahu_code(const RootedTree& rt) { return subtree_codes(rt)[rt.root()]; }

bool rooted_isomorphic(const RootedTree& a, const RootedTree& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  return ahu_code(a) == ahu_code(b);
}

FreeTreeKey free_tree_key(const Graph& t) {
  auto r = rootify(t);
  return FreeTreeKey{r.subdivided, ahu_code(r.rooted)};
}

bool tree_isomorphic(const Graph& a, const Graph& b) {
  auto ka = free_tree_key(a);
  auto kb = free_tree_key(b);
  return a.vertex_count() == b.vertex_count() && ka == kb;
}

RootedTree subtree_at(const RootedTree& rt, Vertex v) {
  auto parent = rt.parents();
  VertexSet members{v};
  for (std::size_t head = 0; head < members.size(); ++head)
    for (Vertex w : rt.tree().neighbors(members[head]))
      if (w != parent[members[head]]) members.push_back(w);
  std::sort(members.begin(), members.end());
  Vertex local_root =
      static_cast<Vertex>(std::lower_bound(members.begin(), members.end(), v) - members.begin());
  return RootedTree(induced_subgraph(rt.tree(), members), local_root);
}

ChildClasses child_classes(const RootedTree& rt) {
  auto codes = subtree_codes(rt);
  auto kids = rt.children()[rt.root()];  // ascending ids
  std::map<CanonCode, std::vector<Vertex>> grouped;
  for (Vertex c : kids) grouped[codes[c]].push_back(c);
  ChildClasses out;
  for (auto& [code, members] : grouped) {
    out.classes.push_back(ChildClass{subtree_at(rt, members.front()),
                                     static_cast<int>(members.size()), members, code});
  }
  return out;
}

int SubtreeInterner::intern(std::vector<int> sorted_child_ids) {
  auto [it, inserted] = ids_.try_emplace(std::move(sorted_child_ids), size());
  return it->second;
}

std::vector<int> subtree_class_ids(const RootedTree& rt, SubtreeInterner& interner) {
  auto order = rt.bfs_order();
  auto parent = rt.parents();
  std::vector<std::vector<int>> child_ids(rt.vertex_count());
  std::vector<int> ids(rt.vertex_count(), -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    auto& mine = child_ids[v];
    std::sort(mine.begin(), mine.end());
    ids[v] = interner.intern(std::move(mine));
    if (parent[v] >= 0) child_ids[parent[v]].push_back(ids[v]);
  }
  return ids;
}

}  // namespace qtree
