#include "casewise/saf.hpp"

#include <algorithm>
#include <tuple>

namespace casewise {

std::vector<AttackTarget> attack_targets(const SafNode& b) {
  std::vector<AttackTarget> out;
  for (const auto& s : sub_arguments(b.argument))
    if (s.kind() == ArgKind::Defeasible)
      out.push_back({s, b.hypothesis, s.same_node(b.argument)});
  for (const auto& c : hypothetical_sub_arguments(b.argument))
    for (const auto& s : sub_arguments(c.argument))
      if (s.kind() == ArgKind::Defeasible) out.push_back({s, c.hypothesis, false});
  return out;
}

namespace {

bool origin_allows(const SafNode& a, const std::optional<Formula>& target_hyp) {
  return a.is_base() || (target_hyp && a.hypothesis == target_hyp);
}

}  // namespace

bool directly_attacks(const SafNode& a, const SafNode& b) {
  return b.argument.kind() == ArgKind::Defeasible &&
         negation_complement(a.argument.conclusion(), b.argument.conclusion()) &&
         origin_allows(a, b.hypothesis);
}

bool attacks(const SafNode& a, const SafNode& b) {
  for (const auto& t : attack_targets(b))
    if (negation_complement(a.argument.conclusion(), t.argument.conclusion()) &&
        origin_allows(a, t.hypothesis))
      return true;
  return false;
}

Saf::Saf(ArgTheory at, std::vector<SafNode> nodes, std::vector<std::string> warnings,
         bool budget_hit, bool capped)
    : at_(std::move(at)),
      nodes_(std::move(nodes)),
      warnings_(std::move(warnings)),
      budget_hit_(budget_hit),
      capped_(capped) {
  n_base_ = static_cast<std::size_t>(
      std::find_if(nodes_.begin(), nodes_.end(), [](const SafNode& n) { return !n.is_base(); }) -
      nodes_.begin());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    by_conclusion_[nodes_[i].argument.conclusion()].push_back(i);
    by_argument_[nodes_[i].argument].push_back(i);
  }

  attackers_.resize(nodes_.size());
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    std::vector<std::pair<std::size_t, bool>> found;
    for (const auto& t : attack_targets(nodes_[j])) {
      auto visit = [&](Formula c) {
        auto it = by_conclusion_.find(c);
        if (it == by_conclusion_.end()) return;
        for (std::size_t i : it->second)
          if (origin_allows(nodes_[i], t.hypothesis)) found.emplace_back(i, t.is_root);
      };
      Formula conc = t.argument.conclusion();
      visit(Formula::negate(conc));
      if (conc.op() == Op::Not) visit(conc.operand());
    }
    std::sort(found.begin(), found.end());
    for (std::size_t k = 0; k < found.size();) {
      std::size_t attacker = found[k].first;
      bool direct = false;
      for (; k < found.size() && found[k].first == attacker; ++k) direct = direct || found[k].second;
      attackers_[j].push_back(attacker);
      edges_.push_back({attacker, j, direct});
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const AttackEdge& a, const AttackEdge& b) {
    return std::tie(a.attacker, a.target) < std::tie(b.attacker, b.target);
  });
}

std::optional<std::size_t> Saf::find(const Argument& a, const std::optional<Formula>& hyp) const {
  auto it = by_argument_.find(a);
  if (it == by_argument_.end()) return std::nullopt;
  for (std::size_t i : it->second)
    if (nodes_[i].hypothesis == hyp) return i;
  return std::nullopt;
}

std::vector<std::size_t> Saf::attackers_of(const SafNode& target) const {
  std::vector<std::size_t> out;
  for (const auto& t : attack_targets(target)) {
    auto visit = [&](Formula c) {
      auto it = by_conclusion_.find(c);
      if (it == by_conclusion_.end()) return;
      for (std::size_t i : it->second)
        if (origin_allows(nodes_[i], t.hypothesis)) out.push_back(i);
    };
    Formula conc = t.argument.conclusion();
    visit(Formula::negate(conc));
    if (conc.op() == Op::Not) visit(conc.operand());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Saf::id(std::size_t i) const {
  return i < n_base_ ? "a" + std::to_string(i) : "h" + std::to_string(i - n_base_);
}

Saf build_saf(ArgumentEngine& engine) {
  GenResult base = engine.arguments();
  std::vector<SafNode> nodes;
  for (const auto& a : base.arguments) nodes.push_back({a, std::nullopt});
  for (auto& [phi, args] : engine.hypothetical_arguments())
    for (const auto& a : args) nodes.push_back({a, phi});
  bool budget_hit = base.budget_hit;
  bool capped = base.capped;
  std::vector<std::string> warnings = base.warnings;
  return Saf(engine.theory(), std::move(nodes), std::move(warnings), budget_hit, capped);
}

Saf build_saf(const ArgTheory& at, const GenConfig& cfg) {
  ArgumentEngine engine(at, cfg);
  return build_saf(engine);
}

std::string edge_list(const Saf& saf) {
  std::string out;
  for (const auto& e : saf.edges()) out += saf.id(e.attacker) + " -> " + saf.id(e.target) + "\n";
  return out;
}

}  // namespace casewise
