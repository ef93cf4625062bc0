// Propositional formulas over named atoms.
//
// Formulas are hash-consed: two structurally identical formulas share one
// node, so equality and hashing are pointer operations. Nodes live for the
// lifetime of the process. No normalization is ever applied; `!!p` and `p`
// are different formulas.

#ifndef CASEWISE_FORMULA_HPP
#define CASEWISE_FORMULA_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace casewise {

enum class Op : std::uint8_t { Atom, Top, Bottom, Not, And, Or, Implies, Equiv };

namespace detail {
struct FormulaNode;
}

class Formula {
 public:
  // Default-constructed formula is Top.
  Formula();

  static Formula atom(std::string_view name);
  static Formula top();
  static Formula bottom();
  static Formula negate(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula equiv(Formula l, Formula r);

  // Left fold of a non-empty list with `&` / `|`.
  static Formula conj_all(const std::vector<Formula>& fs);
  static Formula disj_all(const std::vector<Formula>& fs);

  Op op() const;
  const std::string& name() const;  // atoms only
  Formula operand() const;          // Not only
  Formula left() const;             // binary only
  Formula right() const;            // binary only
  bool is_atom() const { return op() == Op::Atom; }
  bool is_binary() const;
  bool is_literal() const;

  std::uint32_t id() const;
  std::size_t hash() const { return id(); }

  // Canonical text; parse(str()) == *this.
  std::string str() const;

  void collect_atoms(std::set<std::string>& out) const;
  std::set<std::string> atoms() const;
  // Every subformula including this one, in post-order without duplicates.
  std::vector<Formula> subformulas() const;

  bool operator==(const Formula& o) const { return node_ == o.node_; }
  bool operator!=(const Formula& o) const { return node_ != o.node_; }
  // Structural order, independent of creation order.
  std::strong_ordering operator<=>(const Formula& o) const;

 private:
  explicit Formula(const detail::FormulaNode* n) : node_(n) {}
  static Formula make(Op op, std::string_view name, const detail::FormulaNode* l,
                      const detail::FormulaNode* r);
  const detail::FormulaNode* node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

// formula := atom | "T" | "F" | "!" f | f "&" f | f "|" f | f "->" f | f "<->" f | "(" f ")"
// Binding strength ! > & > | > -> > <->; `->` associates to the right, the
// others to the left.
Formula parse_formula(std::string_view text);

// Maximal list of non-Or disjuncts, left to right. Non-Or input yields {f}.
std::vector<Formula> top_disjuncts(Formula f);

// a == !b or b == !a, syntactically.
bool negation_complement(Formula a, Formula b);

// Evaluates f under the valuation given by `value(atom_name)`.
bool evaluate(Formula f, const std::function<bool(const std::string&)>& value);

}  // namespace casewise

template <>
struct std::hash<casewise::Formula> {
  std::size_t operator()(const casewise::Formula& f) const noexcept { return f.hash(); }
};

#endif  // CASEWISE_FORMULA_HPP
