#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <json.hpp>

namespace qtree {

using BigInt = boost::multiprecision::cpp_int;

// Symbolic compact quantum group built from the trivial group, quantum
// symmetric groups S_n^+, free products and free wreath products with S_n^+.
// Values are immutable and cheap to copy (shared nodes). The printed form
// is cached on every node; on normal forms it is a canonical key.
class GroupExpr {
 public:
  enum class Kind { Triv, SnPlus, FreeProd, FreeWreath };

  // Raw constructors, no rewriting. n >= 1; a product needs >= 2 factors.
  // Violations throw std::invalid_argument.
  static GroupExpr triv();
  static GroupExpr sn_plus(int n);
  static GroupExpr free_product(std::vector<GroupExpr> children);
  static GroupExpr free_wreath(GroupExpr base, int n);

  Kind kind() const noexcept;
  // n of S_n^+ (SnPlus) or of the wreath (FreeWreath); 0 otherwise.
  int degree() const noexcept;
  // Only valid for FreeWreath.
  const GroupExpr& base() const;
  std::span<const GroupExpr> children() const noexcept;

  const std::string& text() const noexcept;
  std::size_t node_count() const;

  bool operator==(const GroupExpr& other) const noexcept;
  bool operator<(const GroupExpr& other) const noexcept { return text() < other.text(); }

 private:
  struct Node;
  explicit GroupExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Normal form: products flattened, trivial factors dropped, factors sorted
// by printed form, singleton products unwrapped; S_1^+ -> 1; G wr S_1^+ -> G;
// 1 wr S_n^+ -> S_n^+. Idempotent.
GroupExpr normalize(const GroupExpr& e);

// Rewriting steps on operands that are already in normal form; used to
// build normal forms bottom-up without re-normalizing whole subterms.
GroupExpr normal_wreath(const GroupExpr& normal_base, int n);
GroupExpr normal_product(std::span<const GroupExpr> normal_factors);

// Order of the classical counterpart (x for free product, wreath with S_n
// for free wreath, S_n for S_n^+).
BigInt classical_order(const GroupExpr& e);

// A normal form denotes a classical group iff it is 1, S2+ or S3+.
bool is_classical(const GroupExpr& e);

// Grammar: "1" | "S" INT "+" | "(" E (" * " E)+ ")" | "(" E " wr S" INT "+" ")"
std::string print_expr(const GroupExpr& e);
// Throws ParseError (with byte position). The result is not normalized.
GroupExpr parse_expr(std::string_view text);

// Nested record {kind, n?, base?, children?}.
nlohmann::ordered_json to_json(const GroupExpr& e);

}  // namespace qtree
