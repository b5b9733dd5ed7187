#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qtree/graph.hpp"

namespace qtree {

// AHU parenthesis code of a rooted tree: "(" + sorted child codes + ")".
struct CanonCode {
  std::string code;

  auto operator<=>(const CanonCode&) const = default;
};

struct ChildClass {
  RootedTree representative;
  int multiplicity = 0;
  std::vector<Vertex> members;  // child vertex ids, ascending
  CanonCode code;
};

struct ChildClasses {
  std::vector<ChildClass> classes;  // sorted by code
};

// Canonical key of an unrooted tree: its rootification's code plus whether
// the rootification had to subdivide the central edge.
struct FreeTreeKey {
  bool subdivided = false;
  CanonCode code;

  auto operator<=>(const FreeTreeKey&) const = default;
  std::string to_string() const { return (subdivided ? "~" : "") + code.code; }
};

CanonCode ahu_code(const RootedTree& rt);
// Code of every subtree, indexed by vertex (subtree below v when rooted at rt.root()).
std::vector<CanonCode> subtree_codes(const RootedTree& rt);

bool rooted_isomorphic(const RootedTree& a, const RootedTree& b);

// Throws NotATree.
FreeTreeKey free_tree_key(const Graph& t);
bool tree_isomorphic(const Graph& a, const Graph& b);

ChildClasses child_classes(const RootedTree& rt);

// The subtree hanging below `v` (with v as its root). Vertex ids are
// renumbered in ascending order of the original ids; labels are kept.
RootedTree subtree_at(const RootedTree& rt, Vertex v);

// Integer names for rooted-tree isomorphism classes. A class is identified
// by the sorted multiset of its children's class ids, so two subtrees get
// the same id iff they have the same AHU code, without materializing the
// code strings. Ids are dense and assigned in first-seen order.
class SubtreeInterner {
 public:
  int intern(std::vector<int> sorted_child_ids);
  int size() const noexcept { return static_cast<int>(ids_.size()); }

 private:
  std::map<std::vector<int>, int> ids_;
};

// Class id of the subtree below every vertex of rt.
std::vector<int> subtree_class_ids(const RootedTree& rt, SubtreeInterner& interner);

}  // namespace qtree
