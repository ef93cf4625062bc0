// Rationality postulates and the hat construction as executable
// checks over a built SAF, plus a seeded random theory generator.

#ifndef CASEWISE_POSTULATES_HPP
#define CASEWISE_POSTULATES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "casewise/semantics.hpp"

namespace casewise {

enum class Verdict { Pass, Fail, Inconclusive };

const char* to_string(Verdict v);

struct PostulateReport {
  std::string postulate;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  // Offending arguments or formulas, printed.
  std::vector<std::string> counterexample;

  bool failed() const { return verdict == Verdict::Fail; }
};

// Sub(A) and Sub'(A) are contained in e for every member A.
PostulateReport check_subargument_closure(const Saf& saf, const Extension& e);

// Strict steps over base members of e, restricted to candidate conclusions
// and premise sets the generator would build, lead to members of e.
PostulateReport check_strict_closure(const Saf& saf, const Extension& e, const GenConfig& cfg);

// The conclusions of base members of e are jointly consistent.
PostulateReport check_consistency(const Saf& saf, const Extension& e);

// For every node A: hat(A) has the same attackers as A and an equivalent
// commitment formula.
PostulateReport check_hat_attackers(const Saf& saf);
// For every member A of e: e defends hat(A) and stays conflict-free with it.
PostulateReport check_hat_membership(const Saf& saf, const Extension& e);

// Consequences over the atoms of at1 agree between at1 and the union of
// at1 and at2. Throws std::invalid_argument if the atom sets overlap.
PostulateReport check_non_interference(const ArgTheory& at1, const ArgTheory& at2,
                                       Semantics sem, Mode mode, const GenConfig& cfg);

// Rules and facts of both theories; rule ids of the second are prefixed
// when they clash.
ArgTheory disjoint_union(const ArgTheory& at1, const ArgTheory& at2);

// Atoms p1..pn; heads are literals or, with probability p_disjunctive_head,
// two-literal disjunctions; bodies hold zero to two literals; one to three
// facts (literals or two-literal clauses), redrawn until consistent.
ArgTheory random_theory(std::uint64_t seed, std::uint32_t n_atoms, std::uint32_t n_rules,
                        double p_disjunctive_head);

// The seeded corpus of the property suites: theory k has 3 + k % 4 atoms,
// 1 + k % 6 rules and disjunctive heads with probability 0.3, generated
// with corpus_config().
ArgTheory corpus_theory(std::uint64_t k);
GenConfig corpus_config();

// All checks over all extensions; the hat attacker check runs once.
std::vector<PostulateReport> check_postulates(const Saf& saf, const std::vector<Extension>& exts,
                                              const GenConfig& cfg);

}  // namespace casewise

#endif  // CASEWISE_POSTULATES_HPP
