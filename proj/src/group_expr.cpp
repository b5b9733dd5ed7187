#include "qtree/group_expr.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

#include "qtree/error.hpp"

namespace qtree {

struct GroupExpr::Node {
  Kind kind;
  int n = 0;
  std::vector<GroupExpr> children;  // FreeProd factors, or the single FreeWreath base
  std::string text;
};

namespace {

std::string render(GroupExpr::Kind kind, int n, const std::vector<GroupExpr>& children) {
  switch (kind) {
    case GroupExpr::Kind::Triv:
      return "1";
    case GroupExpr::Kind::SnPlus:
      return "S" + std::to_string(n) + "+";
    case GroupExpr::Kind::FreeProd: {
      std::size_t size = 2;
      for (const auto& c : children) size += c.text().size() + 3;
      std::string out;
      out.reserve(size);
      out += '(';
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += " * ";
        out += children[i].text();
      }
      out += ')';
      return out;
    }
    case GroupExpr::Kind::FreeWreath:
      return "(" + children.front().text() + " wr S" + std::to_string(n) + "+)";
  }
  return {};
}

}  // namespace

GroupExpr GroupExpr::triv() {
  static const GroupExpr one(std::make_shared<const Node>(Node{Kind::Triv, 0, {}, "1"}));
  return one;
}

GroupExpr GroupExpr::sn_plus(int n) {
  if (n < 1) throw std::invalid_argument("S_n^+ needs n >= 1");
  return GroupExpr(std::make_shared<const Node>(Node{Kind::SnPlus, n, {}, render(Kind::SnPlus, n, {})}));
}

GroupExpr GroupExpr::free_product(std::vector<GroupExpr> children) {
  if (children.size() < 2) throw std::invalid_argument("free product needs at least two factors");
  auto text = render(Kind::FreeProd, 0, children);
  return GroupExpr(
      std::make_shared<const Node>(Node{Kind::FreeProd, 0, std::move(children), std::move(text)}));
}

GroupExpr GroupExpr::free_wreath(GroupExpr base, int n) {
  if (n < 1) throw std::invalid_argument("free wreath product needs n >= 1");
  std::vector<GroupExpr> children{std::move(base)};
  auto text = render(Kind::FreeWreath, n, children);
  return GroupExpr(
      std::make_shared<const Node>(Node{Kind::FreeWreath, n, std::move(children), std::move(text)}));
}

GroupExpr::Kind GroupExpr::kind() const noexcept { return node_->kind; }
int GroupExpr::degree() const noexcept { return node_->n; }

const GroupExpr& GroupExpr::base() const {
  if (node_->kind != Kind::FreeWreath) throw std::logic_error("base() on a non-wreath expression");
  return node_->children.front();
}

std::span<const GroupExpr> GroupExpr::children() const noexcept {
  if (node_->kind != Kind::FreeProd) return {};
  return node_->children;
}

const std::string& GroupExpr::text() const noexcept { return node_->text; }

std::size_t GroupExpr::node_count() const {
  std::size_t count = 1;
  for (const auto& c : node_->children) count += c.node_count();
  return count;
}

bool GroupExpr::operator==(const GroupExpr& other) const noexcept {
  return node_ == other.node_ || node_->text == other.node_->text;
}

GroupExpr normal_wreath(const GroupExpr& normal_base, int n) {
  if (n == 1) return normal_base;
  if (normal_base.kind() == GroupExpr::Kind::Triv) return GroupExpr::sn_plus(n);
  return GroupExpr::free_wreath(normal_base, n);
}

GroupExpr normal_product(std::span<const GroupExpr> normal_factors) {
  std::vector<GroupExpr> flat;
  for (const auto& f : normal_factors) {
    if (f.kind() == GroupExpr::Kind::Triv) continue;
    if (f.kind() == GroupExpr::Kind::FreeProd) {
      auto inner = f.children();
      flat.insert(flat.end(), inner.begin(), inner.end());
    } else {
      flat.push_back(f);
    }
  }
  if (flat.empty()) return GroupExpr::triv();
  if (flat.size() == 1) return flat.front();
  std::stable_sort(flat.begin(), flat.end());
  return GroupExpr::free_product(std::move(flat));
}

GroupExpr normalize(const GroupExpr& e) {
  switch (e.kind()) {
    case GroupExpr::Kind::Triv:
      return e;
    case GroupExpr::Kind::SnPlus:
      return e.degree() == 1 ? GroupExpr::triv() : e;
    case GroupExpr::Kind::FreeWreath:
      return normal_wreath(normalize(e.base()), e.degree());
    case GroupExpr::Kind::FreeProd: {
      std::vector<GroupExpr> factors;
      for (const auto& c : e.children()) factors.push_back(normalize(c));
      return normal_product(factors);
    }
  }
  return e;
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt order_of(const GroupExpr& e, std::unordered_map<std::string, BigInt>& memo) {
  auto hit = memo.find(e.text());
  if (hit != memo.end()) return hit->second;
  BigInt result = 1;
  switch (e.kind()) {
    case GroupExpr::Kind::Triv:
      break;
    case GroupExpr::Kind::SnPlus:
      result = factorial(e.degree());
      break;
    case GroupExpr::Kind::FreeProd:
      for (const auto& c : e.children()) result *= order_of(c, memo);
      break;
    case GroupExpr::Kind::FreeWreath:
      result = boost::multiprecision::pow(order_of(e.base(), memo),
                                          static_cast<unsigned>(e.degree())) *
               factorial(e.degree());
      break;
  }
  memo.emplace(e.text(), result);
  return result;
}

}  // namespace

BigInt classical_order(const GroupExpr& e) {
  std::unordered_map<std::string, BigInt> memo;
  return order_of(e, memo);
}

bool is_classical(const GroupExpr& e) {
  const auto& t = e.text();
  return t == "1" || t == "S2+" || t == "S3+";
}

std::string print_expr(const GroupExpr& e) { return e.text(); }

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  GroupExpr parse_all() {
    GroupExpr e = parse_expr();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) fail("expected \"" + std::string(token) + "\"");
    pos_ += token.size();
  }

  int parse_int() {
    std::size_t start = pos_;
    if (peek() == '0') fail("leading zero in integer");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  GroupExpr parse_expr() {
    if (++depth_ > kMaxDepth) fail("expression nested too deeply");
    GroupExpr result = parse_term();
    --depth_;
    return result;
  }

  GroupExpr parse_term() {
    char c = peek();
    if (c == '1') {
      ++pos_;
      return GroupExpr::triv();
    }
    if (c == 'S') {
      ++pos_;
      int n = parse_int();
      expect("+");
      return GroupExpr::sn_plus(n);
    }
    if (c != '(') fail(at_end() ? "unexpected end of input" : "expected \"1\", \"S\" or \"(\"");
    ++pos_;
    GroupExpr first = parse_expr();
    if (text_.substr(pos_, 5) == " wr S") {
      pos_ += 5;
      int n = parse_int();
      expect("+)");
      return GroupExpr::free_wreath(std::move(first), n);
    }
    std::vector<GroupExpr> factors{std::move(first)};
    while (text_.substr(pos_, 3) == " * ") {
      pos_ += 3;
      factors.push_back(parse_expr());
    }
    if (factors.size() < 2) fail("expected \" * \" or \" wr S\"");
    expect(")");
    return GroupExpr::free_product(std::move(factors));
  }

  static constexpr int kMaxDepth = 10000;
  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

GroupExpr parse_expr(std::string_view text) { return ExprParser(text).parse_all(); }

nlohmann::ordered_json to_json(const GroupExpr& e) {
  nlohmann::ordered_json j;
  switch (e.kind()) {
    case GroupExpr::Kind::Triv:
      j["kind"] = "triv";
      break;
    case GroupExpr::Kind::SnPlus:
      j["kind"] = "sn_plus";
      j["n"] = e.degree();
      break;
    case GroupExpr::Kind::FreeProd: {
      j["kind"] = "free_product";
      auto children = nlohmann::ordered_json::array();
      for (const auto& c : e.children()) children.push_back(to_json(c));
      j["children"] = std::move(children);
      break;
    }
    case GroupExpr::Kind::FreeWreath:
      j["kind"] = "free_wreath";
      j["base"] = to_json(e.base());
      j["n"] = e.degree();
      break;
  }
  return j;
}

}  // namespace qtree
