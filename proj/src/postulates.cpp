#include "casewise/postulates.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace casewise {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

bool member(const Extension& e, std::size_t i) { return std::binary_search(e.begin(), e.end(), i); }

bool truncated(const Saf& saf) { return saf.budget_hit() || saf.capped(); }

std::string describe(const Saf& saf, std::size_t i) {
  return saf.id(i) + " " + saf.node(i).argument.str();
}

// Node for a sub-argument of a node with the given origin: same origin
// first, else the base node.
std::optional<std::size_t> locate(const Saf& saf, const Argument& a,
                                  const std::optional<Formula>& hyp) {
  if (auto i = saf.find(a, hyp)) return i;
  if (hyp) return saf.find(a, std::nullopt);
  return std::nullopt;
}

// Missing arguments are a failure unless generation was cut short.
void missing(PostulateReport& r, const Saf& saf, const std::string& what) {
  if (truncated(saf)) {
    if (r.verdict == Verdict::Pass) {
      r.verdict = Verdict::Inconclusive;
      r.detail = "budget: " + what;
    }
    return;
  }
  r.verdict = Verdict::Fail;
  r.counterexample.push_back(what);
}

}  // namespace

PostulateReport check_subargument_closure(const Saf& saf, const Extension& e) {
  PostulateReport r{"subargument-closure", Verdict::Pass, "", {}};
  for (std::size_t i : e) {
    const SafNode& n = saf.node(i);
    std::vector<Argument> subs = sub_prime(n.argument);
    for (const auto& s : sub_arguments(n.argument))
      if (std::find(subs.begin(), subs.end(), s) == subs.end()) subs.push_back(s);
    for (const auto& s : subs) {
      if (s.same_node(n.argument)) continue;
      auto j = locate(saf, s, n.hypothesis);
      if (!j) {
        missing(r, saf, describe(saf, i) + ": no node for " + s.str());
        continue;
      }
      if (!member(e, *j)) {
        r.verdict = Verdict::Fail;
        r.counterexample.push_back(describe(saf, i) + ": " + describe(saf, *j) + " not in extension");
      }
    }
  }
  return r;
}

PostulateReport check_strict_closure(const Saf& saf, const Extension& e, const GenConfig& cfg) {
  PostulateReport r{"strict-closure", Verdict::Pass, "", {}};
  ModelSpace space(saf.theory().atoms());
  std::vector<Formula> goals, valid;
  for (Formula c : candidate_conclusions(saf.theory())) {
    if (c == Formula::top()) continue;
    (space.entails({}, c) ? valid : goals).push_back(c);
  }

  std::map<Formula, std::vector<std::size_t>> groups;
  for (std::size_t i : e)
    if (saf.node(i).is_base() && saf.node(i).argument.kind() != ArgKind::Strict)
      groups[saf.node(i).argument.conclusion()].push_back(i);
  std::vector<std::pair<Formula, std::vector<std::size_t>>> gs(groups.begin(), groups.end());

  auto require = [&](std::vector<Argument> children, Formula goal) {
    std::uint32_t apps = 1;
    for (const auto& c : children) apps += c.rule_applications();
    Argument needed = Argument::strict(std::move(children), goal);
    if (apps > cfg.max_rule_applications) {
      if (r.verdict == Verdict::Pass) {
        r.verdict = Verdict::Inconclusive;
        r.detail = "budget: " + needed.str() + " exceeds the rule-application budget";
      }
      return;
    }
    auto j = saf.find(needed, std::nullopt);
    if (!j) {
      missing(r, saf, "no argument " + needed.str());
    } else if (!member(e, *j)) {
      r.verdict = Verdict::Fail;
      r.counterexample.push_back(describe(saf, *j) + " not in extension");
    }
  };

  // Valid candidates come from the T premise alone.
  if (auto top = saf.find(Argument::premise(Formula::top()), std::nullopt); top && member(e, *top))
    for (Formula g : valid) require({saf.node(*top).argument}, g);

  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    for (std::size_t g = start; g < gs.size(); ++g) {
      chosen.push_back(g);
      std::vector<Formula> concs;
      for (std::size_t c : chosen) concs.push_back(gs[c].first);
      for (Formula goal : goals) {
        if (std::find(concs.begin(), concs.end(), goal) != concs.end()) continue;
        if (!space.entails(concs, goal)) continue;
        bool minimal = true;
        if (concs.size() > 1)
          for (std::size_t skip = 0; skip < concs.size() && minimal; ++skip) {
            std::vector<Formula> rest;
            for (std::size_t k = 0; k < concs.size(); ++k)
              if (k != skip) rest.push_back(concs[k]);
            if (space.entails(rest, goal)) minimal = false;
          }
        if (!minimal) continue;
        std::vector<Argument> tuple(chosen.size(), saf.node(0).argument);
        std::function<void(std::size_t)> pick = [&](std::size_t k) {
          if (k == chosen.size()) {
            for (const auto& a : tuple)
              for (const auto& s : sub_arguments(a))
                if (s.conclusion() == goal) return;
            require(tuple, goal);
            return;
          }
          for (std::size_t i : gs[chosen[k]].second) {
            tuple[k] = saf.node(i).argument;
            pick(k + 1);
          }
        };
        pick(0);
      }
      if (chosen.size() < cfg.max_strict_premises && space.consistent(concs)) rec(g + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return r;
}

PostulateReport check_consistency(const Saf& saf, const Extension& e) {
  PostulateReport r{"consistency", Verdict::Pass, "", {}};
  std::vector<Formula> concs;
  for (std::size_t i : e)
    if (saf.node(i).is_base()) concs.push_back(saf.node(i).argument.conclusion());
  if (!is_consistent(concs)) {
    r.verdict = Verdict::Fail;
    for (Formula f : concs) r.counterexample.push_back(f.str());
  }
  return r;
}

PostulateReport check_hat_attackers(const Saf& saf) {
  PostulateReport r{"hat-attackers", Verdict::Pass, "", {}};
  for (std::size_t i = 0; i < saf.size(); ++i) {
    const SafNode& n = saf.node(i);
    Argument h = hat(n.argument);
    if (saf.attackers_of({h, n.hypothesis}) != saf.attackers(i)) {
      r.verdict = Verdict::Fail;
      r.counterexample.push_back(describe(saf, i) + ": attackers differ from " + h.str());
    }
    if (!equivalent(dagger(n.argument), dagger(h))) {
      r.verdict = Verdict::Fail;
      r.counterexample.push_back(describe(saf, i) + ": commitment not equivalent to " + h.str());
    }
  }
  return r;
}

PostulateReport check_hat_membership(const Saf& saf, const Extension& e) {
  PostulateReport r{"hat-membership", Verdict::Pass, "", {}};
  // Attackable conclusions inside members, with the origin they are judged under.
  std::set<std::pair<Formula, std::optional<Formula>>> targets;
  for (std::size_t j : e)
    for (const auto& t : attack_targets(saf.node(j)))
      targets.emplace(t.argument.conclusion(), t.hypothesis);
  auto attacks_member = [&](const SafNode& a) {
    Formula c = a.argument.conclusion();
    std::vector<Formula> hits{Formula::negate(c)};
    if (c.op() == Op::Not) hits.push_back(c.operand());
    for (Formula h : hits)
      for (auto it = targets.lower_bound({h, std::nullopt});
           it != targets.end() && it->first == h; ++it)
        if (a.is_base() || (it->second && it->second == a.hypothesis)) return true;
    return false;
  };
  std::vector<char> countered(saf.size(), 0);
  for (std::size_t a = 0; a < saf.size(); ++a)
    for (std::size_t d : saf.attackers(a))
      if (member(e, d)) {
        countered[a] = 1;
        break;
      }
  for (std::size_t i : e) {
    SafNode h{hat(saf.node(i).argument), saf.node(i).hypothesis};
    bool ok = true;
    for (std::size_t a : saf.attackers_of(h))
      if (member(e, a) || !countered[a]) ok = false;
    if (attacks_member(h)) ok = false;
    if (!ok) {
      r.verdict = Verdict::Fail;
      r.counterexample.push_back(describe(saf, i) + ": " + h.argument.str() + " not acceptable");
    }
  }
  return r;
}

ArgTheory disjoint_union(const ArgTheory& at1, const ArgTheory& at2) {
  std::vector<DefeasibleRule> rules = at1.rules();
  std::set<std::string> ids;
  for (const auto& r : rules) ids.insert(r.id);
  for (auto r : at2.rules()) {
    while (ids.count(r.id)) r.id = "u_" + r.id;
    ids.insert(r.id);
    rules.push_back(std::move(r));
  }
  std::vector<Formula> facts = at1.facts();
  facts.insert(facts.end(), at2.facts().begin(), at2.facts().end());
  return ArgTheory(std::move(rules), std::move(facts));
}

PostulateReport check_non_interference(const ArgTheory& at1, const ArgTheory& at2,
                                       Semantics sem, Mode mode, const GenConfig& cfg) {
  std::set<std::string> a1 = at1.atoms(), a2 = at2.atoms();
  for (const auto& a : a1)
    if (a2.count(a)) throw std::invalid_argument("theories share atom '" + a + "'");
  PostulateReport r{std::string("non-interference-") + to_string(sem) + "-" + to_string(mode),
                    Verdict::Pass, "", {}};
  Saf s1 = build_saf(at1, cfg);
  Saf s2 = build_saf(disjoint_union(at1, at2), cfg);
  auto restrict = [&](std::vector<Formula> fs) {
    std::vector<Formula> out;
    for (Formula f : fs) {
      std::set<std::string> atoms = f.atoms();
      if (std::includes(a1.begin(), a1.end(), atoms.begin(), atoms.end())) out.push_back(f);
    }
    return out;
  };
  std::vector<Formula> c1 = restrict(consequences(s1, sem, mode));
  std::vector<Formula> c2 = restrict(consequences(s2, sem, mode));
  if (c1 != c2) {
    std::vector<Formula> diff;
    std::set_symmetric_difference(c1.begin(), c1.end(), c2.begin(), c2.end(),
                                  std::back_inserter(diff));
    for (Formula f : diff) r.counterexample.push_back(f.str());
    r.verdict = truncated(s1) || truncated(s2) ? Verdict::Inconclusive : Verdict::Fail;
    if (r.verdict == Verdict::Inconclusive) r.detail = "budget: consequence sets differ";
  }
  return r;
}

ArgTheory random_theory(std::uint64_t seed, std::uint32_t n_atoms, std::uint32_t n_rules,
                        double p_disjunctive_head) {
  if (n_atoms == 0) throw std::invalid_argument("n_atoms must be positive");
  if (p_disjunctive_head < 0 || p_disjunctive_head > 1)
    throw std::invalid_argument("probability out of range");
  // Raw engine output only; library distributions differ between
  // standard libraries.
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t n) { return rng() % n; };
  auto unit = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto literal = [&]() {
    Formula a = Formula::atom("p" + std::to_string(pick(n_atoms) + 1));
    return pick(2) ? Formula::negate(a) : a;
  };

  std::vector<DefeasibleRule> rules;
  for (std::uint32_t i = 0; i < n_rules; ++i) {
    DefeasibleRule r;
    r.id = "d" + std::to_string(i + 1);
    std::uint64_t body = pick(3);
    for (std::uint64_t k = 0; k < body; ++k) r.body.push_back(literal());
    r.head = unit() < p_disjunctive_head ? Formula::disj(literal(), literal()) : literal();
    rules.push_back(std::move(r));
  }
  while (true) {
    std::vector<Formula> facts;
    std::uint64_t n = 1 + pick(3);
    for (std::uint64_t k = 0; k < n; ++k)
      facts.push_back(pick(2) ? literal() : Formula::disj(literal(), literal()));
    if (is_consistent(facts)) return ArgTheory(rules, std::move(facts));
  }
}

ArgTheory corpus_theory(std::uint64_t k) {
  return random_theory(k, 3 + k % 4, 1 + k % 6, 0.3);
}

GenConfig corpus_config() {
  GenConfig cfg;
  cfg.max_rule_applications = 5;
  cfg.max_strict_premises = 2;
  return cfg;
}

std::vector<PostulateReport> check_postulates(const Saf& saf, const std::vector<Extension>& exts,
                                              const GenConfig& cfg) {
  std::vector<PostulateReport> out;
  for (std::size_t k = 0; k < exts.size(); ++k) {
    for (auto r : {check_subargument_closure(saf, exts[k]), check_strict_closure(saf, exts[k], cfg),
                   check_consistency(saf, exts[k]), check_hat_membership(saf, exts[k])}) {
      r.detail = "extension " + std::to_string(k) + (r.detail.empty() ? "" : "; " + r.detail);
      out.push_back(std::move(r));
    }
  }
  out.push_back(check_hat_attackers(saf));
  return out;
}

}  // namespace casewise
