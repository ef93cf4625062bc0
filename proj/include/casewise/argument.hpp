// Arguments: premise, strict, defeasible and reasoning-by-cases trees.
//
// An Argument is an immutable shared tree. Identity is structural: two
// arguments are equal iff they have the same shape, rule ids and
// conclusions. Hashes are cached, and equality short-circuits on pointer
// identity, so deduplicated argument sets are cheap to compare.

#ifndef CASEWISE_ARGUMENT_HPP
#define CASEWISE_ARGUMENT_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "casewise/formula.hpp"

namespace casewise {

enum class ArgKind : std::uint8_t { Premise, Strict, Defeasible, Rbc };

const char* to_string(ArgKind k);

class Argument;
struct Case;

namespace detail {
struct ArgumentNode;
}

Formula dagger(const Argument& a);

class Argument {
 public:
  static Argument premise(Formula phi);
  // Children are sorted into canonical order.
  static Argument strict(std::vector<Argument> children, Formula conclusion);
  static Argument defeasible(std::vector<Argument> children, std::string rule_id,
                             Formula conclusion);
  // Conclusion is the set-disjunction of the case conclusions.
  static Argument rbc(Argument trigger, std::vector<Case> cases);

  ArgKind kind() const;
  Formula conclusion() const;
  // Strict/defeasible premises; for Rbc the single trigger.
  const std::vector<Argument>& children() const;
  const std::string& rule_id() const;     // Defeasible only
  const std::vector<Case>& cases() const;  // Rbc only
  Argument trigger() const;                // Rbc only

  // Strict and defeasible steps plus one per rbc step, over the whole tree
  // including case arguments.
  std::uint32_t rule_applications() const;
  std::uint32_t height() const;
  // Defeasible rule ids used anywhere in the tree, sorted.
  const std::vector<std::string>& rules_used() const;
  bool uses_rule(const std::string& id) const;
  // HSub is empty, i.e. no rbc step anywhere in Sub.
  bool rbc_free() const;

  std::size_t hash() const;
  std::string str() const;

  bool operator==(const Argument& o) const;
  bool operator!=(const Argument& o) const { return !(*this == o); }
  std::strong_ordering operator<=>(const Argument& o) const;
  bool same_node(const Argument& o) const { return node_ == o.node_; }

 private:
  explicit Argument(std::shared_ptr<const detail::ArgumentNode> n) : node_(std::move(n)) {}
  static Argument finish(std::shared_ptr<detail::ArgumentNode> n);
  friend Formula dagger(const Argument& a);
  std::shared_ptr<const detail::ArgumentNode> node_;
};

struct Case {
  Formula hypothesis;
  Argument argument;
  bool operator==(const Case& o) const {
    return hypothesis == o.hypothesis && argument == o.argument;
  }
};

struct ArgumentHash {
  std::size_t operator()(const Argument& a) const { return a.hash(); }
};
using ArgumentSet = std::unordered_set<Argument, ArgumentHash>;

// Deduplicated conclusions folded with `|` in first-occurrence order; a
// single distinct conclusion is returned as is.
Formula set_disjunction(const std::vector<Formula>& conclusions);

// Sub(A), including A itself. Deterministic order: A first, then children
// depth-first, without duplicates.
std::vector<Argument> sub_arguments(const Argument& a);
// HSub(A) as (case argument, hypothesis) pairs without duplicates.
std::vector<Case> hypothetical_sub_arguments(const Argument& a);

// Commitment formula: the conclusion conjoined with the children's
// commitments; rbc case commitments are disjoined. Computed once per node.
Formula dagger(const Argument& a);

// Sub(A) strengthened for rbc arguments by every variant whose case
// arguments are replaced by sub-arguments of the originals.
std::vector<Argument> sub_prime(const Argument& a);

// Strict argument over Sub'(A) concluding the conjunction of their
// conclusions, in the order sub_prime returns them.
Argument hat(const Argument& a);

// Canonical order for output: fewer rule applications first, then structure.
bool canonical_less(const Argument& a, const Argument& b);

}  // namespace casewise

template <>
struct std::hash<casewise::Argument> {
  std::size_t operator()(const casewise::Argument& a) const noexcept { return a.hash(); }
};

#endif  // CASEWISE_ARGUMENT_HPP
