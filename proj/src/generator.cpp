#include "casewise/generator.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace casewise {

void GenConfig::check() const {
  if (max_rule_applications == 0) throw std::invalid_argument("max-rule-applications must be positive");
  if (max_strict_premises == 0) throw std::invalid_argument("max-strict-premises must be positive");
  if (max_arguments == 0) throw std::invalid_argument("max-arguments must be positive");
}

std::vector<Formula> candidate_conclusions(const ArgTheory& at) {
  std::set<Formula> base;
  auto add_sub = [&](Formula f) {
    for (Formula s : f.subformulas()) base.insert(s);
  };
  for (Formula f : at.facts()) add_sub(f);
  for (Formula f : at.hypotheses()) add_sub(f);
  for (const auto& r : at.rules()) {
    for (Formula b : r.body) add_sub(b);
    add_sub(r.head);
  }
  std::set<Formula> out = base;
  for (Formula f : base) out.insert(Formula::negate(f));
  std::vector<Formula> snapshot(out.begin(), out.end());
  for (Formula f : snapshot)
    for (Formula d : top_disjuncts(f)) out.insert(d);
  out.insert(Formula::top());
  return {out.begin(), out.end()};
}

// {{{ Saturator: items 1-3 to a fixpoint

class ArgumentEngine::Saturator {
 public:
  struct Entry {
    Argument arg;
    bool consistent;
    bool usable;                         // may serve as a premise of further steps
    std::vector<std::uint32_t> sub_concs;  // formula ids of conclusions in Sub, sorted
  };

  Saturator(const ArgTheory& at, const GenConfig& cfg, ModelSpace& space)
      : at_(at), cfg_(cfg), space_(space) {
    for (Formula c : candidate_conclusions(at)) {
      if (c == Formula::top()) continue;
      if (space_.entails({}, c))
        valid_candidates_.push_back(c);
      else
        candidates_.push_back(c);
    }
  }

  std::vector<Entry>& entries() { return entries_; }
  bool budget_hit() const { return budget_hit_; }
  bool capped() const { return capped_; }

  bool consistent(const Argument& a) {
    Formula d = dagger(a);
    return space_.consistent(std::span<const Formula>(&d, 1));
  }

  const Entry* find(const Argument& a) const {
    auto it = index_.find(a);
    return it == index_.end() ? nullptr : &entries_[it->second];
  }

  bool add(const Argument& a) {
    if (capped_) return false;
    if (index_.count(a)) return false;
    if (entries_.size() >= cfg_.max_arguments) {
      capped_ = true;
      return false;
    }
    Entry e{a, consistent(a), true, {}};
    if (!e.consistent) {
      e.usable = a.kind() == ArgKind::Defeasible;
      for (const auto& c : a.children())
        if (!consistent(c)) e.usable = false;
    }
    e.sub_concs.push_back(a.conclusion().id());
    for (const auto& c : a.children()) {
      const Entry* ce = find(c);
      if (ce) {
        e.sub_concs.insert(e.sub_concs.end(), ce->sub_concs.begin(), ce->sub_concs.end());
      } else {
        for (const auto& s : sub_arguments(c)) e.sub_concs.push_back(s.conclusion().id());
      }
    }
    std::sort(e.sub_concs.begin(), e.sub_concs.end());
    e.sub_concs.erase(std::unique(e.sub_concs.begin(), e.sub_concs.end()), e.sub_concs.end());
    index_.emplace(a, entries_.size());
    entries_.push_back(std::move(e));
    return true;
  }

  void add_premises() {
    for (Formula f : at_.effective_facts()) add(Argument::premise(f));
    Argument top = Argument::premise(Formula::top());
    for (Formula v : valid_candidates_) add(Argument::strict({top}, v));
  }

  void saturate(std::size_t first_new) {
    while (first_new < entries_.size() && !capped_) {
      std::size_t limit = entries_.size();
      defeasible_round(first_new, limit);
      strict_round(first_new, limit);
      first_new = limit;
    }
  }

 private:
  // Calls visit(choice) for each choice of one index per list, skipping
  // tuples made only of indices below first_new.
  static void product(const std::vector<const std::vector<std::size_t>*>& lists,
                      std::size_t first_new,
                      const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> choice(lists.size());
    std::function<void(std::size_t, bool)> rec = [&](std::size_t i, bool any_new) {
      if (i == lists.size()) {
        if (any_new) visit(choice);
        return;
      }
      for (std::size_t idx : *lists[i]) {
        choice[i] = idx;
        rec(i + 1, any_new || idx >= first_new);
      }
    };
    rec(0, false);
  }

  // Strict steps never take strict children: a chain of strict steps is
  // one classically valid step from its non-strict leaves.
  std::unordered_map<Formula, std::vector<std::size_t>> usable_by_conclusion(std::size_t limit,
                                                                             bool for_strict) {
    std::unordered_map<Formula, std::vector<std::size_t>> by;
    for (std::size_t i = 0; i < limit; ++i) {
      const Entry& e = entries_[i];
      if (!e.usable || (for_strict && e.arg.kind() == ArgKind::Strict)) continue;
      by[e.arg.conclusion()].push_back(i);
    }
    return by;
  }

  void defeasible_round(std::size_t first_new, std::size_t limit) {
    auto by = usable_by_conclusion(limit, false);
    for (const auto& rule : at_.rules()) {
      std::vector<const std::vector<std::size_t>*> lists;
      bool ok = true;
      for (Formula b : rule.body) {
        auto it = by.find(b);
        if (it == by.end()) {
          ok = false;
          break;
        }
        lists.push_back(&it->second);
      }
      if (!ok) continue;
      product(lists, first_new, [&](const std::vector<std::size_t>& choice) {
        std::uint32_t apps = 1;
        std::vector<Argument> children;
        for (std::size_t idx : choice) {
          const Argument& c = entries_[idx].arg;
          if (c.uses_rule(rule.id)) return;
          apps += c.rule_applications();
          children.push_back(c);
        }
        if (apps > cfg_.max_rule_applications) {
          budget_hit_ = true;
          return;
        }
        add(Argument::defeasible(std::move(children), rule.id, rule.head));
      });
    }
  }

  struct Group {
    Formula conclusion;
    std::vector<std::size_t> members;
    bool has_new = false;
  };

  void strict_round(std::size_t first_new, std::size_t limit) {
    auto by = usable_by_conclusion(limit, true);
    std::vector<Group> groups;
    for (auto& [conc, members] : by) {
      Group g{conc, std::move(members), false};
      g.has_new = std::any_of(g.members.begin(), g.members.end(),
                              [&](std::size_t i) { return i >= first_new; });
      groups.push_back(std::move(g));
    }
    std::sort(groups.begin(), groups.end(),
              [](const Group& a, const Group& b) { return a.conclusion < b.conclusion; });

    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, const ModelSet&)> rec = [&](std::size_t start,
                                                                const ModelSet& conj) {
      for (std::size_t g = start; g < groups.size(); ++g) {
        chosen.push_back(g);
        ModelSet next = conj;
        next &= space_.models(groups[g].conclusion);
        emit_strict(groups, chosen, next, first_new);
        if (chosen.size() < cfg_.max_strict_premises && !next.empty()) rec(g + 1, next);
        chosen.pop_back();
        if (capped_) return;
      }
    };
    if (space_.tabular()) {
      rec(0, space_.all());
    } else {
      rec_dpll(groups, first_new);
    }
  }

  // Premise-set enumeration without truth tables.
  void rec_dpll(const std::vector<Group>& groups, std::size_t first_new) {
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      for (std::size_t g = start; g < groups.size(); ++g) {
        chosen.push_back(g);
        emit_strict(groups, chosen, ModelSet(), first_new);
        std::vector<Formula> concs;
        for (std::size_t c : chosen) concs.push_back(groups[c].conclusion);
        if (chosen.size() < cfg_.max_strict_premises && space_.consistent(concs)) rec(g + 1);
        chosen.pop_back();
        if (capped_) return;
      }
    };
    rec(0);
  }

  bool set_entails(const std::vector<Group>& groups, const std::vector<std::size_t>& chosen,
                   std::size_t skip, const ModelSet* conj, Formula goal) {
    if (space_.tabular()) {
      if (conj) return conj->subset_of(space_.models(goal));
      ModelSet m = space_.all();
      for (std::size_t i = 0; i < chosen.size(); ++i)
        if (i != skip) m &= space_.models(groups[chosen[i]].conclusion);
      return m.subset_of(space_.models(goal));
    }
    std::vector<Formula> concs;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      if (i != skip) concs.push_back(groups[chosen[i]].conclusion);
    return space_.entails(concs, goal);
  }

  void emit_strict(const std::vector<Group>& groups, const std::vector<std::size_t>& chosen,
                   const ModelSet& conj, std::size_t first_new) {
    if (std::none_of(chosen.begin(), chosen.end(),
                     [&](std::size_t g) { return groups[g].has_new; }))
      return;
    const std::size_t none = chosen.size();
    for (Formula goal : candidates_) {
      if (std::any_of(chosen.begin(), chosen.end(),
                      [&](std::size_t g) { return groups[g].conclusion == goal; }))
        continue;
      if (!set_entails(groups, chosen, none, space_.tabular() ? &conj : nullptr, goal)) continue;
      bool minimal = true;
      if (chosen.size() > 1)
        for (std::size_t skip = 0; skip < chosen.size() && minimal; ++skip)
          if (set_entails(groups, chosen, skip, nullptr, goal)) minimal = false;
      if (!minimal) continue;

      std::vector<const std::vector<std::size_t>*> lists;
      for (std::size_t g : chosen) lists.push_back(&groups[g].members);
      const std::uint32_t goal_id = goal.id();
      product(lists, first_new, [&](const std::vector<std::size_t>& choice) {
        std::uint32_t apps = 1;
        std::vector<Argument> children;
        for (std::size_t idx : choice) {
          const Entry& e = entries_[idx];
          if (std::binary_search(e.sub_concs.begin(), e.sub_concs.end(), goal_id)) return;
          apps += e.arg.rule_applications();
          children.push_back(e.arg);
        }
        if (apps > cfg_.max_rule_applications) {
          budget_hit_ = true;
          return;
        }
        add(Argument::strict(std::move(children), goal));
      });
      if (capped_) return;
    }
  }

  const ArgTheory& at_;
  const GenConfig& cfg_;
  ModelSpace& space_;
  std::vector<Formula> candidates_;
  std::vector<Formula> valid_candidates_;
  std::vector<Entry> entries_;
  std::unordered_map<Argument, std::size_t> index_;
  bool budget_hit_ = false;
  bool capped_ = false;
};

// }}}

namespace {

std::shared_ptr<ArgumentUniverse> snapshot(std::vector<GeneratedArgument> entries, bool budget_hit,
                                           bool capped, const GenConfig& cfg) {
  auto u = std::make_shared<ArgumentUniverse>();
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return canonical_less(a.argument, b.argument);
  });
  u->entries = std::move(entries);
  u->budget_hit = budget_hit;
  u->capped = capped;
  if (budget_hit)
    u->warnings.push_back("rule-application budget (" +
                          std::to_string(cfg.max_rule_applications) +
                          ") reached; longer arguments omitted");
  if (capped)
    u->warnings.push_back("argument cap (" + std::to_string(cfg.max_arguments) +
                          ") reached; generation truncated");
  return u;
}

}  // namespace

ArgumentEngine::ArgumentEngine(ArgTheory at, GenConfig cfg)
    : at_(std::move(at)), cfg_(cfg), space_(std::make_unique<ModelSpace>(at_.atoms())) {
  cfg_.check();
}

ArgumentEngine::~ArgumentEngine() = default;

const ArgumentUniverse& ArgumentEngine::universe() {
  if (!universe_) universe_ = build(at_, cfg_.rbc_enabled && at_.is_base());
  return *universe_;
}

const ArgumentUniverse& ArgumentEngine::case_universe(Formula phi) {
  if (at_.has_fact(phi) || std::find(at_.hypotheses().begin(), at_.hypotheses().end(), phi) !=
                               at_.hypotheses().end()) {
    if (!base_rbc_free_) base_rbc_free_ = build(at_, false);
    return *base_rbc_free_;
  }
  auto it = cases_.find(phi);
  if (it != cases_.end()) return *it->second;
  auto u = build(at_.extend(phi), false);
  cases_.emplace(phi, u);
  return *u;
}

std::shared_ptr<ArgumentUniverse> ArgumentEngine::build(const ArgTheory& at, bool with_rbc) {
  Saturator sat(at, cfg_, *space_);
  sat.add_premises();
  sat.saturate(0);

  auto collect = [&](const Saturator& s) {
    std::vector<GeneratedArgument> out;
    for (const auto& e : const_cast<Saturator&>(s).entries())
      out.push_back({e.arg, e.consistent});
    return out;
  };

  if (!with_rbc) return snapshot(collect(sat), sat.budget_hit(), sat.capped(), cfg_);

  if (at == at_) base_rbc_free_ = snapshot(collect(sat), sat.budget_hit(), sat.capped(), cfg_);

  bool budget_hit = false;
  const std::size_t first_rbc = sat.entries().size();
  std::vector<Argument> triggers;
  for (std::size_t i = 0; i < first_rbc; ++i) {
    const auto& e = sat.entries()[i];
    if (e.usable && e.arg.rbc_free() && top_disjuncts(e.arg.conclusion()).size() >= 2)
      triggers.push_back(e.arg);
  }
  std::sort(triggers.begin(), triggers.end(), canonical_less);

  for (const Argument& trigger : triggers) {
    std::vector<Formula> hyps = top_disjuncts(trigger.conclusion());
    if (cfg_.minimal_disjunctions &&
        (trigger.kind() == ArgKind::Strict || trigger.kind() == ArgKind::Defeasible)) {
      std::vector<Formula> premises;
      for (const auto& c : trigger.children()) premises.push_back(c.conclusion());
      bool minimal = true;
      const std::size_t n = hyps.size();
      for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n) && minimal; ++mask) {
        std::vector<Formula> part;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (std::size_t{1} << i)) part.push_back(hyps[i]);
        if (space_->entails(premises, Formula::disj_all(part))) minimal = false;
      }
      if (!minimal) continue;
    }

    std::vector<const ArgumentUniverse*> per_case;
    for (Formula h : hyps) {
      const ArgumentUniverse& u = case_universe(h);
      budget_hit = budget_hit || u.budget_hit;
      per_case.push_back(&u);
    }

    const std::uint32_t budget = cfg_.max_rule_applications;
    std::vector<Case> cases(hyps.size(), Case{Formula::top(), trigger});
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t used) {
      if (sat.capped()) return;
      if (i == hyps.size()) {
        sat.add(Argument::rbc(trigger, cases));
        return;
      }
      for (const auto& ge : per_case[i]->entries) {
        if (cfg_.consistent_cases && !ge.consistent) continue;
        // Entries are sorted by rule applications.
        if (used + ge.argument.rule_applications() > budget) {
          budget_hit = true;
          break;
        }
        cases[i] = Case{hyps[i], ge.argument};
        rec(i + 1, used + ge.argument.rule_applications());
      }
    };
    std::uint32_t start = trigger.rule_applications() + 1;
    if (start > budget) {
      budget_hit = true;
      continue;
    }
    rec(0, start);
  }

  sat.saturate(first_rbc);
  return snapshot(collect(sat), budget_hit || sat.budget_hit(), sat.capped(), cfg_);
}

GenResult ArgumentEngine::arguments() {
  const ArgumentUniverse& u = universe();
  GenResult r;
  for (const auto& e : u.entries)
    if (e.consistent) r.arguments.push_back(e.argument);
  r.budget_hit = u.budget_hit;
  r.capped = u.capped;
  r.warnings = u.warnings;
  return r;
}

std::map<Formula, std::vector<Argument>> ArgumentEngine::hypothetical_arguments() {
  std::map<Formula, std::vector<Argument>> out;
  ArgumentSet base;
  std::set<Formula> hyps;
  for (const auto& e : universe().entries) {
    if (!e.consistent) continue;
    base.insert(e.argument);
    if (!e.argument.rbc_free())
      for (const auto& c : hypothetical_sub_arguments(e.argument)) hyps.insert(c.hypothesis);
  }
  for (Formula phi : hyps) {
    if (at_.has_fact(phi)) continue;
    std::vector<Argument> args;
    for (const auto& e : case_universe(phi).entries)
      if (e.consistent && !base.count(e.argument)) args.push_back(e.argument);
    out.emplace(phi, std::move(args));
  }
  return out;
}

bool ArgumentEngine::is_consistent_argument(const Argument& a) {
  Formula d = dagger(a);
  return space_->consistent(std::span<const Formula>(&d, 1));
}

ArgumentUniverse generate_unfiltered(const ArgTheory& at, const GenConfig& cfg) {
  ArgumentEngine engine(at, cfg);
  return engine.universe();
}

GenResult generate_arguments(const ArgTheory& at, const GenConfig& cfg) {
  ArgumentEngine engine(at, cfg);
  return engine.arguments();
}

std::optional<std::string> check_argument(const Argument& a, const ArgTheory& at) {
  auto fail = [&](const std::string& why) {
    return std::optional<std::string>(a.str() + ": " + why);
  };
  switch (a.kind()) {
    case ArgKind::Premise: {
      auto facts = at.effective_facts();
      if (std::find(facts.begin(), facts.end(), a.conclusion()) == facts.end())
        return fail("premise is not a fact");
      return std::nullopt;
    }
    case ArgKind::Strict: {
      std::vector<Formula> concs;
      for (const auto& c : a.children()) concs.push_back(c.conclusion());
      if (!entails(concs, a.conclusion())) return fail("strict step is not classically valid");
      break;
    }
    case ArgKind::Defeasible: {
      const DefeasibleRule* rule = at.find_rule(a.rule_id());
      if (!rule) return fail("unknown rule " + a.rule_id());
      if (rule->head != a.conclusion()) return fail("conclusion differs from rule head");
      if (rule->body.size() != a.children().size()) return fail("body arity mismatch");
      for (std::size_t i = 0; i < rule->body.size(); ++i)
        if (rule->body[i] != a.children()[i].conclusion()) return fail("body mismatch");
      break;
    }
    case ArgKind::Rbc: {
      std::vector<Formula> hyps = top_disjuncts(a.trigger().conclusion());
      if (hyps.size() < 2) return fail("trigger is not disjunctive");
      if (hyps.size() != a.cases().size()) return fail("case count mismatch");
      std::vector<Formula> concs;
      for (std::size_t i = 0; i < hyps.size(); ++i) {
        const Case& c = a.cases()[i];
        if (c.hypothesis != hyps[i]) return fail("case hypothesis mismatch");
        if (!c.argument.rbc_free()) return fail("nested rbc step in a case");
        ArgTheory ext = at.has_fact(c.hypothesis) ? at : at.extend(c.hypothesis);
        if (auto err = check_argument(c.argument, ext)) return err;
        concs.push_back(c.argument.conclusion());
      }
      if (set_disjunction(concs) != a.conclusion()) return fail("conclusion is not the case disjunction");
      break;
    }
  }
  for (const auto& c : a.children())
    if (auto err = check_argument(c, at)) return err;
  return std::nullopt;
}

}  // namespace casewise
