// Comparison formalisms: disjunctive default logic and argument
// construction over a rule set closed under the OR/gOR meta-rules.

#ifndef CASEWISE_BASELINES_HPP
#define CASEWISE_BASELINES_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "casewise/generator.hpp"

namespace casewise {

// prerequisite : justifications / consequent_1 | ... | consequent_m
struct DisjunctiveDefault {
  Formula prerequisite;
  std::vector<Formula> justifications;
  std::vector<Formula> consequents;

  std::string str() const;
};

struct DdlTheory {
  std::vector<DisjunctiveDefault> defaults;
  std::set<std::string> vocabulary;
};

// One default per line: `prereq : j1, j2 / c1 ; c2`. An empty prerequisite
// is T; `fact F1 ; F2` abbreviates `T : / F1 ; F2`. `#` starts a comment.
// Throws TheoryError with the line number.
DdlTheory parse_ddl(std::string_view text);
DdlTheory load_ddl(const std::string& path);

struct DdlExtension {
  // Consequents of the applied defaults; the extension is their closure.
  std::vector<Formula> generators;
  // Vocabulary literals the extension contains, sorted.
  std::vector<Formula> fingerprint;
};

// Reiter-style extensions: one consequent (or none) is selected per default,
// the least fixpoint of the selected defaults is computed with
// justifications checked against the candidate, and candidates that
// reproduce themselves, satisfy every applicable default and are minimal
// are kept. Sorted by fingerprint.
std::vector<DdlExtension> ddl_extensions(const DdlTheory& t);

// Every extension entails phi.
bool ddl_skeptical(const std::vector<DdlExtension>& exts, Formula phi);
bool ddl_skeptical(const DdlTheory& t, Formula phi);

struct GorClosure {
  std::vector<DefeasibleRule> rules;  // the input rules, then g1, g2, ...
  bool truncated = false;
  std::vector<std::string> warnings;
};

// Closes single-body rules under gOR (psi => phi, psi' => phi' gives
// psi | psi' => phi | phi') and OR (equal heads give psi | psi' => phi),
// adding at most `bound` rules. Pairs combine only when their bodies share
// no top-level disjunct. Reflexive rules h => h for every head h take part
// as premises but are not added themselves. Heads are kept syntactically,
// so v | v stays as is.
GorClosure gor_closure(const std::vector<DefeasibleRule>& rules, std::size_t bound = 64);

// The theory with its rules replaced by their closure.
ArgTheory gor_theory(const ArgTheory& at, std::size_t bound = 64);

// generate_arguments over gor_theory with rbc steps disabled.
GenResult gor_arguments(const ArgTheory& at, const GenConfig& cfg, std::size_t bound = 64);

}  // namespace casewise

#endif  // CASEWISE_BASELINES_HPP
