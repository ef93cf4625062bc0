// Argumentation theories: defeasible rules plus a knowledge base.
//
// Strict rules are not stored. Every classically valid inference counts as
// a strict rule, and the argument generator realizes them through the
// entailment oracle.

#ifndef CASEWISE_THEORY_HPP
#define CASEWISE_THEORY_HPP

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "casewise/formula.hpp"

namespace casewise {

struct DefeasibleRule {
  std::string id;
  std::vector<Formula> body;  // never empty; an empty body is stored as {T}
  Formula head;

  bool operator==(const DefeasibleRule&) const = default;
  std::string str() const;  // "id: b1, b2 => h"
};

struct TheoryError : std::runtime_error {
  TheoryError(const std::string& msg, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
        line(line) {}
  std::size_t line;
};

// A base theory (D, F), or an extension of one by hypotheses. Extensions
// share the base's rules and facts.
class ArgTheory {
 public:
  ArgTheory() = default;
  ArgTheory(std::vector<DefeasibleRule> rules, std::vector<Formula> facts);

  const std::vector<DefeasibleRule>& rules() const { return core_->rules; }
  const std::vector<Formula>& facts() const { return core_->facts; }
  const std::vector<Formula>& hypotheses() const { return hypotheses_; }
  bool is_base() const { return hypotheses_.empty(); }

  // facts, then hypotheses, then T when not already present.
  std::vector<Formula> effective_facts() const;
  bool has_fact(Formula f) const;
  const DefeasibleRule* find_rule(std::string_view id) const;

  std::set<std::string> atoms() const;

  // Same rules and facts, hypotheses appended. Throws if phi is a fact.
  ArgTheory extend(Formula phi) const;

  // Structural equality on rules, facts and hypotheses.
  bool operator==(const ArgTheory& o) const;

 private:
  struct Core {
    std::vector<DefeasibleRule> rules;
    std::vector<Formula> facts;
  };
  std::shared_ptr<const Core> core_ = std::make_shared<Core>();
  std::vector<Formula> hypotheses_;
};

// Line format:
//   facts:            header, following lines are formulas
//   defeasible:       header, following lines are rules `b1, b2 => h`
//   [name:] => h      empty body, read as T => h
//   # comment
// Unnamed rules get ids d1, d2, ... by their position in the file.
ArgTheory parse_theory(std::string_view text);
std::string print_theory(const ArgTheory& at);
ArgTheory load_theory(const std::string& path);

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
};

ValidationReport validate(const ArgTheory& at);

}  // namespace casewise

#endif  // CASEWISE_THEORY_HPP
