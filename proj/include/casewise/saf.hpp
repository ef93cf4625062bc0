// Hypothetical arguments, attacks and the attack graph over
// Arg(AT) plus HArg(AT).

#ifndef CASEWISE_SAF_HPP
#define CASEWISE_SAF_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "casewise/generator.hpp"

namespace casewise {

struct SafNode {
  Argument argument;
  std::optional<Formula> hypothesis;  // empty for base arguments

  bool is_base() const { return !hypothesis.has_value(); }
  bool operator==(const SafNode& o) const {
    return argument == o.argument && hypothesis == o.hypothesis;
  }
};

struct AttackEdge {
  std::size_t attacker;
  std::size_t target;
  bool direct;  // the attacked argument is the target node itself
};

// A defeasible-topped argument inside a node, with the origin it is judged
// under: the node's own origin, or the hypothesis of an enclosing case.
struct AttackTarget {
  Argument argument;
  std::optional<Formula> hypothesis;
  bool is_root;
};

std::vector<AttackTarget> attack_targets(const SafNode& b);

bool directly_attacks(const SafNode& a, const SafNode& b);
bool attacks(const SafNode& a, const SafNode& b);

class Saf {
 public:
  Saf(ArgTheory at, std::vector<SafNode> nodes, std::vector<std::string> warnings,
      bool budget_hit, bool capped);

  const ArgTheory& theory() const { return at_; }
  const std::vector<SafNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  const SafNode& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<AttackEdge>& edges() const { return edges_; }
  // Sorted indices.
  const std::vector<std::size_t>& attackers(std::size_t i) const { return attackers_[i]; }
  const std::vector<std::vector<std::size_t>>& attacker_lists() const { return attackers_; }

  std::optional<std::size_t> find(const Argument& a, const std::optional<Formula>& hyp) const;
  // Attackers among the nodes of an arbitrary node, e.g. one not in the SAF.
  std::vector<std::size_t> attackers_of(const SafNode& target) const;

  // a0, a1, ... for base nodes and h0, h1, ... for hypothetical ones.
  std::string id(std::size_t i) const;

  const std::vector<std::string>& warnings() const { return warnings_; }
  bool budget_hit() const { return budget_hit_; }
  bool capped() const { return capped_; }

 private:
  ArgTheory at_;
  std::vector<SafNode> nodes_;
  std::size_t n_base_ = 0;
  std::vector<AttackEdge> edges_;
  std::vector<std::vector<std::size_t>> attackers_;
  std::unordered_map<Formula, std::vector<std::size_t>> by_conclusion_;
  std::unordered_map<Argument, std::vector<std::size_t>, ArgumentHash> by_argument_;
  std::vector<std::string> warnings_;
  bool budget_hit_ = false;
  bool capped_ = false;
};

Saf build_saf(ArgumentEngine& engine);
Saf build_saf(const ArgTheory& at, const GenConfig& cfg);

// `attacker -> target` per line, node ids as in Saf::id.
std::string edge_list(const Saf& saf);

}  // namespace casewise

#endif  // CASEWISE_SAF_HPP
