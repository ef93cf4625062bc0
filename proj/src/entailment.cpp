#include "casewise/entailment.hpp"

#include <algorithm>
#include <cstdlib>

namespace casewise {

// {{{ DPLL over Tseitin clauses

namespace {

using Lit = int;  // +v / -v, variables numbered from 1

class Cnf {
 public:
  // Returns a literal equivalent to f, adding defining clauses.
  Lit encode(Formula f) {
    auto it = lit_.find(f);
    if (it != lit_.end()) return it->second;
    Lit out = 0;
    switch (f.op()) {
      case Op::Atom: out = fresh(); break;
      case Op::Top:
        out = fresh();
        clauses_.push_back({out});
        break;
      case Op::Bottom:
        out = fresh();
        clauses_.push_back({-out});
        break;
      case Op::Not: out = -encode(f.operand()); break;
      case Op::And: {
        Lit a = encode(f.left()), b = encode(f.right());
        out = fresh();
        clauses_.push_back({-out, a});
        clauses_.push_back({-out, b});
        clauses_.push_back({out, -a, -b});
        break;
      }
      case Op::Or: {
        Lit a = encode(f.left()), b = encode(f.right());
        out = fresh();
        clauses_.push_back({-out, a, b});
        clauses_.push_back({out, -a});
        clauses_.push_back({out, -b});
        break;
      }
      case Op::Implies: {
        Lit a = encode(f.left()), b = encode(f.right());
        out = fresh();
        clauses_.push_back({-out, -a, b});
        clauses_.push_back({out, a});
        clauses_.push_back({out, -b});
        break;
      }
      case Op::Equiv: {
        Lit a = encode(f.left()), b = encode(f.right());
        out = fresh();
        clauses_.push_back({-out, -a, b});
        clauses_.push_back({-out, a, -b});
        clauses_.push_back({out, a, b});
        clauses_.push_back({out, -a, -b});
        break;
      }
    }
    lit_.emplace(f, out);
    return out;
  }

  void assert_true(Formula f) { clauses_.push_back({encode(f)}); }

  int num_vars() const { return n_vars_; }
  const std::vector<std::vector<Lit>>& clauses() const { return clauses_; }

 private:
  Lit fresh() { return ++n_vars_; }

  int n_vars_ = 0;
  std::unordered_map<Formula, Lit> lit_;
  std::vector<std::vector<Lit>> clauses_;
};

class Dpll {
 public:
  Dpll(int n_vars, const std::vector<std::vector<Lit>>& clauses)
      : clauses_(clauses), value_(n_vars + 1, 0), occurs_(2 * (n_vars + 1)) {
    for (std::size_t c = 0; c < clauses_.size(); ++c)
      for (Lit l : clauses_[c]) occurs_[index(-l)].push_back(c);
  }

  bool solve() {
    for (const auto& c : clauses_) {
      if (c.empty()) return false;
      if (c.size() == 1 && !assign(c[0])) return false;
    }
    if (!propagate()) return false;
    return search();
  }

 private:
  static std::size_t index(Lit l) { return l > 0 ? 2 * l : 2 * (-l) + 1; }

  int val(Lit l) const {
    int v = value_[std::abs(l)];
    return l > 0 ? v : -v;
  }

  bool assign(Lit l) {
    int v = val(l);
    if (v == 1) return true;
    if (v == -1) return false;
    value_[std::abs(l)] = l > 0 ? 1 : -1;
    trail_.push_back(l);
    return true;
  }

  // Unit propagation from trail_[head_] onwards.
  bool propagate() {
    while (head_ < trail_.size()) {
      Lit l = trail_[head_++];
      // Clauses containing -l may have become unit or empty.
      for (std::size_t c : occurs_[index(l)]) {
        Lit unassigned = 0;
        int n_unassigned = 0;
        bool sat = false;
        for (Lit m : clauses_[c]) {
          int v = val(m);
          if (v == 1) {
            sat = true;
            break;
          }
          if (v == 0) {
            ++n_unassigned;
            unassigned = m;
          }
        }
        if (sat) continue;
        if (n_unassigned == 0) return false;
        if (n_unassigned == 1 && !assign(unassigned)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[std::abs(trail_.back())] = 0;
      trail_.pop_back();
    }
    head_ = std::min(head_, mark);
  }

  bool search() {
    int var = 0;
    for (std::size_t v = 1; v < value_.size(); ++v)
      if (value_[v] == 0) {
        var = static_cast<int>(v);
        break;
      }
    if (var == 0) return true;
    for (Lit l : {var, -var}) {
      std::size_t mark = trail_.size();
      if (assign(l) && propagate() && search()) return true;
      undo(mark);
    }
    return false;
  }

  const std::vector<std::vector<Lit>>& clauses_;
  std::vector<int> value_;
  std::vector<std::vector<std::size_t>> occurs_;  // by literal: clauses containing its negation
  std::vector<Lit> trail_;
  std::size_t head_ = 0;
};

}  // namespace

bool satisfiable(std::span<const Formula> fs) {
  Cnf cnf;
  for (Formula f : fs) cnf.assert_true(f);
  Dpll solver(cnf.num_vars(), cnf.clauses());
  return solver.solve();
}

// }}}

bool entails(std::span<const Formula> premises, Formula goal) {
  std::vector<Formula> fs(premises.begin(), premises.end());
  fs.push_back(Formula::negate(goal));
  return !satisfiable(fs);
}

bool entails(std::initializer_list<Formula> premises, Formula goal) {
  return entails(std::span<const Formula>(premises.begin(), premises.size()), goal);
}

bool is_consistent(std::span<const Formula> fs) { return satisfiable(fs); }

bool is_consistent(std::initializer_list<Formula> fs) {
  return satisfiable(std::span<const Formula>(fs.begin(), fs.size()));
}

bool equivalent(Formula a, Formula b) { return entails({a}, b) && entails({b}, a); }

// {{{ ModelSpace

ModelSpace::ModelSpace(const std::set<std::string>& atoms) {
  for (const auto& a : atoms) atom_index_.emplace(a, atom_index_.size());
  n_atoms_ = atoms.size();
  tabular_ = n_atoms_ <= kMaxTableAtoms;
  if (tabular_) {
    n_valuations_ = std::size_t{1} << n_atoms_;
    n_words_ = (n_valuations_ + 63) / 64;
  }
}

ModelSet ModelSpace::all() const {
  ModelSet m(n_words_, true);
  if (n_valuations_ % 64) m.words().back() &= (1ULL << (n_valuations_ % 64)) - 1;
  return m;
}

bool ModelSpace::covers(Formula f) {
  if (cache_.count(f)) return true;
  auto it = covered_.find(f);
  if (it != covered_.end()) return it->second;
  std::set<std::string> as = f.atoms();
  bool ok = std::all_of(as.begin(), as.end(),
                        [&](const std::string& a) { return atom_index_.count(a) > 0; });
  covered_.emplace(f, ok);
  return ok;
}

ModelSet ModelSpace::compute(Formula f) {
  switch (f.op()) {
    case Op::Atom: {
      ModelSet m(n_words_, false);
      std::size_t bit = atom_index_.at(f.name());
      for (std::size_t v = 0; v < n_valuations_; ++v)
        if ((v >> bit) & 1U) m.words()[v / 64] |= 1ULL << (v % 64);
      return m;
    }
    case Op::Top: return all();
    case Op::Bottom: return ModelSet(n_words_, false);
    default: break;
  }
  ModelSet out(n_words_, false);
  auto& w = out.words();
  if (f.op() == Op::Not) {
    const auto& a = models(f.operand()).words();
    for (std::size_t i = 0; i < n_words_; ++i) w[i] = ~a[i];
  } else {
    // Copy: models() may rehash the cache and invalidate references.
    auto a = models(f.left()).words();
    const auto& b = models(f.right()).words();
    for (std::size_t i = 0; i < n_words_; ++i) {
      switch (f.op()) {
        case Op::And: w[i] = a[i] & b[i]; break;
        case Op::Or: w[i] = a[i] | b[i]; break;
        case Op::Implies: w[i] = ~a[i] | b[i]; break;
        case Op::Equiv: w[i] = ~(a[i] ^ b[i]); break;
        default: break;
      }
    }
  }
  // Clear padding bits past the last valuation.
  if (n_valuations_ % 64) w.back() &= (1ULL << (n_valuations_ % 64)) - 1;
  return out;
}

const ModelSet& ModelSpace::models(Formula f) {
  auto it = cache_.find(f);
  if (it != cache_.end()) return it->second;
  ModelSet m = compute(f);
  return cache_.emplace(f, std::move(m)).first->second;
}

bool ModelSpace::entails(std::span<const Formula> premises, Formula goal) {
  bool fast = tabular_ && covers(goal) &&
              std::all_of(premises.begin(), premises.end(), [&](Formula f) { return covers(f); });
  if (!fast) return casewise::entails(premises, goal);
  ModelSet m = all();
  for (Formula p : premises) m &= models(p);
  return m.subset_of(models(goal));
}

bool ModelSpace::consistent(std::span<const Formula> fs) {
  bool fast = tabular_ && std::all_of(fs.begin(), fs.end(), [&](Formula f) { return covers(f); });
  if (!fast) return casewise::is_consistent(fs);
  ModelSet m = all();
  for (Formula p : fs) m &= models(p);
  return !m.empty();
}

// }}}

}  // namespace casewise
