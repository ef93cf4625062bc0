// Classical propositional entailment.
//
// `entails` and `is_consistent` decide exactly, by DPLL over the Tseitin
// clausal form. `ModelSpace` is a truth-table cache for hot loops over a
// small fixed vocabulary; it falls back to DPLL for large vocabularies.

#ifndef CASEWISE_ENTAILMENT_HPP
#define CASEWISE_ENTAILMENT_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "casewise/formula.hpp"

namespace casewise {

// Satisfiability of a conjunction of formulas.
bool satisfiable(std::span<const Formula> fs);

bool entails(std::span<const Formula> premises, Formula goal);
bool entails(std::initializer_list<Formula> premises, Formula goal);
bool is_consistent(std::span<const Formula> fs);
bool is_consistent(std::initializer_list<Formula> fs);
bool equivalent(Formula a, Formula b);

// Bitset of satisfying valuations over a fixed atom ordering.
class ModelSet {
 public:
  ModelSet() = default;
  ModelSet(std::size_t n_words, bool fill) : words_(n_words, fill ? ~0ULL : 0ULL) {}

  ModelSet& operator&=(const ModelSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool subset_of(const ModelSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool operator==(const ModelSet& o) const { return words_ == o.words_; }

  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

// Entailment over a vocabulary, memoizing per-formula model sets. Formulas
// mentioning atoms outside the vocabulary are still decided correctly (the
// space grows, or DPLL takes over).
class ModelSpace {
 public:
  static constexpr std::size_t kMaxTableAtoms = 16;

  explicit ModelSpace(const std::set<std::string>& atoms);

  bool tabular() const { return tabular_; }
  const ModelSet& models(Formula f);
  ModelSet all() const;

  bool entails(std::span<const Formula> premises, Formula goal);
  bool consistent(std::span<const Formula> fs);

 private:
  bool covers(Formula f);
  ModelSet compute(Formula f);

  bool tabular_ = false;
  std::unordered_map<std::string, std::size_t> atom_index_;
  std::size_t n_atoms_ = 0;
  std::size_t n_words_ = 0;
  std::size_t n_valuations_ = 0;
  std::unordered_map<Formula, ModelSet> cache_;
  std::unordered_map<Formula, bool> covered_;
};

}  // namespace casewise

#endif  // CASEWISE_ENTAILMENT_HPP
