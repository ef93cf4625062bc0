// Bounded generation of the argument universe of a theory.
//
// The strict rule set is every classically valid inference, which is
// infinite. Generation finitizes it:
//   * strict steps only conclude formulas from candidate_conclusions(),
//   * premise sets are subset-minimal, have at most max_strict_premises
//     members, none of them strict, and the conclusion does not already
//     occur in their Sub,
//   * each argument has at most max_rule_applications steps, and no
//     defeasible rule occurs twice on one root-to-leaf branch,
//   * an inconsistent argument is only reused as a premise if it is
//     defeasible-topped and its own premises are consistent.
// Reasoning-by-cases steps take an rbc-free trigger with two or more
// top-level disjuncts and one case argument per disjunct, generated in the
// theory extended by that disjunct with rbc steps disabled (by default only
// its consistent members).

#ifndef CASEWISE_GENERATOR_HPP
#define CASEWISE_GENERATOR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "casewise/argument.hpp"
#include "casewise/entailment.hpp"
#include "casewise/theory.hpp"

namespace casewise {

struct GenConfig {
  std::uint32_t max_rule_applications = 12;
  std::uint32_t max_strict_premises = 3;
  bool minimal_disjunctions = true;
  bool rbc_enabled = true;
  // Draw case arguments only from the consistent part of the extended
  // universe. Off follows the definition literally and admits every
  // inconsistent case argument, which multiplies rbc arguments.
  bool consistent_cases = true;
  // Hard cap on the universe size; reaching it truncates generation.
  std::size_t max_arguments = 100000;

  void check() const;
};

struct GeneratedArgument {
  Argument argument;
  bool consistent;
};

// The unfiltered universe, consistent and inconsistent arguments alike.
struct ArgumentUniverse {
  std::vector<GeneratedArgument> entries;  // canonical order
  bool budget_hit = false;                 // rule-application budget cut something
  bool capped = false;                     // max_arguments reached
  std::vector<std::string> warnings;

  bool truncated() const { return capped; }
};

struct GenResult {
  std::vector<Argument> arguments;  // consistent only, canonical order
  bool budget_hit = false;
  bool capped = false;
  std::vector<std::string> warnings;
};

// Subformulas of facts, hypotheses, rule bodies and heads; their single
// negations; top-level disjuncts of all of these; and T. Sorted.
std::vector<Formula> candidate_conclusions(const ArgTheory& at);

// Generation with caches shared between the base theory and the extended
// theories its rbc steps and hypothetical arguments need.
class ArgumentEngine {
 public:
  ArgumentEngine(ArgTheory at, GenConfig cfg);
  ~ArgumentEngine();
  ArgumentEngine(const ArgumentEngine&) = delete;
  ArgumentEngine& operator=(const ArgumentEngine&) = delete;

  const ArgTheory& theory() const { return at_; }
  const GenConfig& config() const { return cfg_; }
  ModelSpace& space() { return *space_; }

  // Arg-bottom of the theory (with rbc steps when enabled and the theory is
  // a base theory).
  const ArgumentUniverse& universe();
  // Arg-bottom of the theory extended by phi, rbc steps disabled. For
  // phi already a fact this is the rbc-free part of the base universe.
  const ArgumentUniverse& case_universe(Formula phi);

  // Arg(AT): the consistent members of universe().
  GenResult arguments();

  // Arg^phi(AT) for every hypothesis phi of a consistent base argument
  // (phi not a fact): consistent arguments of the extended theory that are
  // not base arguments. Keys in formula order.
  std::map<Formula, std::vector<Argument>> hypothetical_arguments();

  bool is_consistent_argument(const Argument& a);

 private:
  class Saturator;
  std::shared_ptr<ArgumentUniverse> build(const ArgTheory& at, bool with_rbc);

  ArgTheory at_;
  GenConfig cfg_;
  std::unique_ptr<ModelSpace> space_;
  std::shared_ptr<ArgumentUniverse> universe_;
  std::shared_ptr<ArgumentUniverse> base_rbc_free_;
  std::map<Formula, std::shared_ptr<ArgumentUniverse>> cases_;
};

ArgumentUniverse generate_unfiltered(const ArgTheory& at, const GenConfig& cfg);
GenResult generate_arguments(const ArgTheory& at, const GenConfig& cfg);

// Checks the structural invariant of each argument kind against the theory
// it was generated for. Returns a description of the first violation.
std::optional<std::string> check_argument(const Argument& a, const ArgTheory& at);

}  // namespace casewise

#endif  // CASEWISE_GENERATOR_HPP
