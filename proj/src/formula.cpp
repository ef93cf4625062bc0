#include "casewise/formula.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace casewise {

namespace detail {

struct FormulaNode {
  Op op;
  std::string name;
  const FormulaNode* left;
  const FormulaNode* right;
  std::uint32_t id;
};

namespace {

struct NodeKey {
  Op op;
  std::string_view name;
  const FormulaNode* left;
  const FormulaNode* right;
};

struct KeyHash {
  std::size_t operator()(const NodeKey& k) const {
    std::size_t h = std::hash<std::string_view>{}(k.name);
    h ^= static_cast<std::size_t>(k.op) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<const void*>{}(k.left) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<const void*>{}(k.right) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct KeyEq {
  bool operator()(const NodeKey& a, const NodeKey& b) const {
    return a.op == b.op && a.left == b.left && a.right == b.right && a.name == b.name;
  }
};

class FormulaTable {
 public:
  static FormulaTable& instance() {
    static FormulaTable table;
    return table;
  }

  const FormulaNode* intern(Op op, std::string_view name, const FormulaNode* l,
                            const FormulaNode* r) {
    std::lock_guard<std::mutex> lock(mu_);
    NodeKey key{op, name, l, r};
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    nodes_.push_back(FormulaNode{op, std::string(name), l, r,
                                 static_cast<std::uint32_t>(nodes_.size())});
    const FormulaNode* n = &nodes_.back();
    index_.emplace(NodeKey{op, n->name, l, r}, n);
    return n;
  }

 private:
  std::mutex mu_;
  std::deque<FormulaNode> nodes_;
  std::unordered_map<NodeKey, const FormulaNode*, KeyHash, KeyEq> index_;
};

}  // namespace
}  // namespace detail

using detail::FormulaNode;
using detail::FormulaTable;

Formula Formula::make(Op op, std::string_view name, const FormulaNode* l, const FormulaNode* r) {
  return Formula(FormulaTable::instance().intern(op, name, l, r));
}

Formula::Formula() : node_(top().node_) {}

Formula Formula::atom(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
    throw std::invalid_argument("invalid atom name '" + std::string(name) + "'");
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      throw std::invalid_argument("invalid atom name '" + std::string(name) + "'");
  return make(Op::Atom, name, nullptr, nullptr);
}

Formula Formula::top() {
  static const FormulaNode* n = FormulaTable::instance().intern(Op::Top, "", nullptr, nullptr);
  return Formula(n);
}

Formula Formula::bottom() {
  static const FormulaNode* n =
      FormulaTable::instance().intern(Op::Bottom, "", nullptr, nullptr);
  return Formula(n);
}

Formula Formula::negate(Formula f) { return make(Op::Not, "", f.node_, nullptr); }
Formula Formula::conj(Formula l, Formula r) { return make(Op::And, "", l.node_, r.node_); }
Formula Formula::disj(Formula l, Formula r) { return make(Op::Or, "", l.node_, r.node_); }
Formula Formula::implies(Formula l, Formula r) {
  return make(Op::Implies, "", l.node_, r.node_);
}
Formula Formula::equiv(Formula l, Formula r) { return make(Op::Equiv, "", l.node_, r.node_); }

Formula Formula::conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) throw std::invalid_argument("conj_all of empty list");
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

Formula Formula::disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) throw std::invalid_argument("disj_all of empty list");
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
Formula Formula::operand() const { return Formula(node_->left); }
Formula Formula::left() const { return Formula(node_->left); }
Formula Formula::right() const { return Formula(node_->right); }
std::uint32_t Formula::id() const { return node_->id; }

bool Formula::is_binary() const {
  switch (op()) {
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Equiv:
      return true;
    default:
      return false;
  }
}

bool Formula::is_literal() const {
  return op() == Op::Atom || (op() == Op::Not && operand().op() == Op::Atom);
}

std::strong_ordering Formula::operator<=>(const Formula& o) const {
  if (node_ == o.node_) return std::strong_ordering::equal;
  if (auto c = node_->op <=> o.node_->op; c != 0) return c;
  switch (node_->op) {
    case Op::Atom:
      return node_->name.compare(o.node_->name) <=> 0;
    case Op::Top:
    case Op::Bottom:
      return std::strong_ordering::equal;
    case Op::Not:
      return operand() <=> o.operand();
    default:
      if (auto c = left() <=> o.left(); c != 0) return c;
      return right() <=> o.right();
  }
}

namespace {

const char* op_symbol(Op op) {
  switch (op) {
    case Op::And: return " & ";
    case Op::Or: return " | ";
    case Op::Implies: return " -> ";
    case Op::Equiv: return " <-> ";
    default: return "";
  }
}

void print(Formula f, std::string& out);

void print_operand(Formula f, std::string& out) {
  if (f.is_binary()) {
    out += '(';
    print(f, out);
    out += ')';
  } else {
    print(f, out);
  }
}

void print(Formula f, std::string& out) {
  switch (f.op()) {
    case Op::Atom: out += f.name(); return;
    case Op::Top: out += 'T'; return;
    case Op::Bottom: out += 'F'; return;
    case Op::Not:
      out += '!';
      print_operand(f.operand(), out);
      return;
    case Op::And:
    case Op::Or:
      // Left spine of the same connective prints as a flat chain.
      if (f.left().op() == f.op())
        print(f.left(), out);
      else
        print_operand(f.left(), out);
      out += op_symbol(f.op());
      print_operand(f.right(), out);
      return;
    case Op::Implies:
    case Op::Equiv:
      print_operand(f.left(), out);
      out += op_symbol(f.op());
      print_operand(f.right(), out);
      return;
  }
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  print(*this, out);
  return out;
}

void Formula::collect_atoms(std::set<std::string>& out) const {
  switch (op()) {
    case Op::Atom: out.insert(name()); return;
    case Op::Top:
    case Op::Bottom: return;
    case Op::Not: operand().collect_atoms(out); return;
    default:
      left().collect_atoms(out);
      right().collect_atoms(out);
  }
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(out);
  return out;
}

namespace {
void collect_subformulas(Formula f, std::unordered_set<Formula>& seen, std::vector<Formula>& out) {
  if (seen.count(f)) return;
  if (f.op() == Op::Not) {
    collect_subformulas(f.operand(), seen, out);
  } else if (f.is_binary()) {
    collect_subformulas(f.left(), seen, out);
    collect_subformulas(f.right(), seen, out);
  }
  seen.insert(f);
  out.push_back(f);
}
}  // namespace

std::vector<Formula> Formula::subformulas() const {
  std::unordered_set<Formula> seen;
  std::vector<Formula> out;
  collect_subformulas(*this, seen, out);
  return out;
}

// {{{ Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty formula", pos_);
    Formula f = parse_equiv();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula parse_equiv() {
    Formula f = parse_implies();
    while (accept("<->")) f = Formula::equiv(f, parse_implies());
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (accept("->")) return Formula::implies(f, parse_implies());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept("|")) f = Formula::disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept("&")) f = Formula::conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      return Formula::negate(parse_unary());
    }
    if (c == '(') {
      std::size_t open = pos_++;
      Formula f = parse_equiv();
      if (!accept(")")) throw ParseError("unbalanced '('", open);
      return f;
    }
    if (c == 'T' || c == 'F') {
      std::size_t end = pos_ + 1;
      if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) ||
                                 text_[end] == '_'))
        throw ParseError("invalid identifier", pos_);
      ++pos_;
      return c == 'T' ? Formula::top() : Formula::bottom();
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return Formula::atom(text_.substr(start, pos_ - start));
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

// }}}

std::vector<Formula> top_disjuncts(Formula f) {
  std::vector<Formula> out;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (g.op() == Op::Or) {
      stack.push_back(g.right());
      stack.push_back(g.left());
    } else {
      out.push_back(g);
    }
  }
  return out;
}

bool negation_complement(Formula a, Formula b) {
  return (a.op() == Op::Not && a.operand() == b) || (b.op() == Op::Not && b.operand() == a);
}

bool evaluate(Formula f, const std::function<bool(const std::string&)>& value) {
  switch (f.op()) {
    case Op::Atom: return value(f.name());
    case Op::Top: return true;
    case Op::Bottom: return false;
    case Op::Not: return !evaluate(f.operand(), value);
    case Op::And: return evaluate(f.left(), value) && evaluate(f.right(), value);
    case Op::Or: return evaluate(f.left(), value) || evaluate(f.right(), value);
    case Op::Implies: return !evaluate(f.left(), value) || evaluate(f.right(), value);
    case Op::Equiv: return evaluate(f.left(), value) == evaluate(f.right(), value);
  }
  return false;
}

}  // namespace casewise
