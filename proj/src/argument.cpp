#include "casewise/argument.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace casewise {

const char* to_string(ArgKind k) {
  switch (k) {
    case ArgKind::Premise: return "premise";
    case ArgKind::Strict: return "strict";
    case ArgKind::Defeasible: return "defeasible";
    case ArgKind::Rbc: return "rbc";
  }
  return "?";
}

namespace detail {

struct ArgumentNode {
  ArgKind kind = ArgKind::Premise;
  Formula conclusion;
  std::vector<Argument> children;
  std::string rule_id;
  std::vector<Case> cases;

  std::size_t hash = 0;
  std::uint32_t rule_applications = 0;
  std::uint32_t height = 0;
  std::vector<std::string> rules_used;
  bool rbc_free = true;
  Formula dagger;
};

}  // namespace detail

using detail::ArgumentNode;

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

void merge_rules(std::vector<std::string>& into, const std::vector<std::string>& from) {
  std::vector<std::string> out;
  out.reserve(into.size() + from.size());
  std::set_union(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(out));
  into = std::move(out);
}

}  // namespace

Argument Argument::finish(std::shared_ptr<ArgumentNode> n) {
  std::size_t h = mix(static_cast<std::size_t>(n->kind), n->conclusion.hash());
  h = mix(h, std::hash<std::string>{}(n->rule_id));
  std::uint32_t apps = n->kind == ArgKind::Premise ? 0 : 1;
  std::uint32_t height = 0;
  for (const auto& c : n->children) {
    h = mix(h, c.hash());
    apps += c.rule_applications();
    height = std::max(height, c.height() + 1);
    merge_rules(n->rules_used, c.rules_used());
    n->rbc_free = n->rbc_free && c.rbc_free();
  }
  for (const auto& c : n->cases) {
    h = mix(h, mix(c.hypothesis.hash(), c.argument.hash()));
    apps += c.argument.rule_applications();
    height = std::max(height, c.argument.height() + 1);
    merge_rules(n->rules_used, c.argument.rules_used());
  }
  if (n->kind == ArgKind::Defeasible) merge_rules(n->rules_used, {n->rule_id});
  if (n->kind == ArgKind::Rbc) n->rbc_free = false;
  n->hash = h;
  n->rule_applications = apps;
  switch (n->kind) {
    case ArgKind::Premise: n->dagger = n->conclusion; break;
    case ArgKind::Strict:
    case ArgKind::Defeasible:
      n->dagger = n->conclusion;
      for (const auto& c : n->children) n->dagger = Formula::conj(n->dagger, dagger(c));
      break;
    case ArgKind::Rbc: {
      std::vector<Formula> cases;
      for (const auto& c : n->cases) cases.push_back(dagger(c.argument));
      n->dagger = Formula::conj(Formula::conj(n->conclusion, dagger(n->children[0])),
                                Formula::disj_all(cases));
      break;
    }
  }
  n->height = height;
  return Argument(std::move(n));
}

Argument Argument::premise(Formula phi) {
  auto n = std::make_shared<ArgumentNode>();
  n->kind = ArgKind::Premise;
  n->conclusion = phi;
  return finish(std::move(n));
}

Argument Argument::strict(std::vector<Argument> children, Formula conclusion) {
  if (children.empty()) throw std::invalid_argument("strict step without premises");
  std::sort(children.begin(), children.end());
  auto n = std::make_shared<ArgumentNode>();
  n->kind = ArgKind::Strict;
  n->conclusion = conclusion;
  n->children = std::move(children);
  return finish(std::move(n));
}

Argument Argument::defeasible(std::vector<Argument> children, std::string rule_id,
                              Formula conclusion) {
  if (children.empty()) throw std::invalid_argument("defeasible step without premises");
  auto n = std::make_shared<ArgumentNode>();
  n->kind = ArgKind::Defeasible;
  n->conclusion = conclusion;
  n->children = std::move(children);
  n->rule_id = std::move(rule_id);
  return finish(std::move(n));
}

Argument Argument::rbc(Argument trigger, std::vector<Case> cases) {
  if (cases.size() < 2) throw std::invalid_argument("rbc step needs at least two cases");
  std::vector<Formula> concs;
  for (const auto& c : cases) concs.push_back(c.argument.conclusion());
  auto n = std::make_shared<ArgumentNode>();
  n->kind = ArgKind::Rbc;
  n->conclusion = set_disjunction(concs);
  n->children = {std::move(trigger)};
  n->cases = std::move(cases);
  return finish(std::move(n));
}

ArgKind Argument::kind() const { return node_->kind; }
Formula Argument::conclusion() const { return node_->conclusion; }
const std::vector<Argument>& Argument::children() const { return node_->children; }
const std::string& Argument::rule_id() const { return node_->rule_id; }
const std::vector<Case>& Argument::cases() const { return node_->cases; }
Argument Argument::trigger() const { return node_->children.at(0); }
std::uint32_t Argument::rule_applications() const { return node_->rule_applications; }
std::uint32_t Argument::height() const { return node_->height; }
const std::vector<std::string>& Argument::rules_used() const { return node_->rules_used; }
bool Argument::uses_rule(const std::string& id) const {
  return std::binary_search(node_->rules_used.begin(), node_->rules_used.end(), id);
}
bool Argument::rbc_free() const { return node_->rbc_free; }
std::size_t Argument::hash() const { return node_->hash; }

bool Argument::operator==(const Argument& o) const {
  if (node_ == o.node_) return true;
  if (node_->hash != o.node_->hash) return false;
  return (*this <=> o) == 0;
}

std::strong_ordering Argument::operator<=>(const Argument& o) const {
  if (node_ == o.node_) return std::strong_ordering::equal;
  const ArgumentNode& a = *node_;
  const ArgumentNode& b = *o.node_;
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.conclusion <=> b.conclusion; c != 0) return c;
  if (auto c = a.rule_id.compare(b.rule_id) <=> 0; c != 0) return c;
  if (auto c = a.children.size() <=> b.children.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (auto c = a.children[i] <=> b.children[i]; c != 0) return c;
  if (auto c = a.cases.size() <=> b.cases.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    if (auto c = a.cases[i].hypothesis <=> b.cases[i].hypothesis; c != 0) return c;
    if (auto c = a.cases[i].argument <=> b.cases[i].argument; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Argument::str() const {
  switch (kind()) {
    case ArgKind::Premise: return "<" + conclusion().str() + ">";
    case ArgKind::Strict:
    case ArgKind::Defeasible: {
      std::string out = "<";
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i) out += ", ";
        out += children()[i].str();
      }
      out += kind() == ArgKind::Strict ? " -> " : " => ";
      return out + conclusion().str() + ">";
    }
    case ArgKind::Rbc: {
      std::string out = "<" + trigger().str();
      for (const auto& c : cases()) out += ", [" + c.argument.str() + "]";
      return out + " ~> " + conclusion().str() + ">";
    }
  }
  return "";
}

bool canonical_less(const Argument& a, const Argument& b) {
  if (a.rule_applications() != b.rule_applications())
    return a.rule_applications() < b.rule_applications();
  return a < b;
}

Formula set_disjunction(const std::vector<Formula>& conclusions) {
  std::vector<Formula> distinct;
  for (Formula f : conclusions)
    if (std::find(distinct.begin(), distinct.end(), f) == distinct.end()) distinct.push_back(f);
  return Formula::disj_all(distinct);
}

namespace {

void collect_sub(const Argument& a, ArgumentSet& seen, std::vector<Argument>& out) {
  if (!seen.insert(a).second) return;
  out.push_back(a);
  for (const auto& c : a.children()) collect_sub(c, seen, out);
}

}  // namespace

std::vector<Argument> sub_arguments(const Argument& a) {
  ArgumentSet seen;
  std::vector<Argument> out;
  collect_sub(a, seen, out);
  return out;
}

std::vector<Case> hypothetical_sub_arguments(const Argument& a) {
  std::vector<Case> out;
  for (const auto& s : sub_arguments(a))
    for (const auto& c : s.cases())
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  return out;
}

Formula dagger(const Argument& a) { return a.node_->dagger; }

std::vector<Argument> sub_prime(const Argument& a) {
  if (a.kind() != ArgKind::Rbc) return sub_arguments(a);
  std::vector<Argument> out = sub_prime(a.trigger());
  ArgumentSet seen(out.begin(), out.end());

  std::vector<std::vector<Argument>> options;
  for (const auto& c : a.cases()) options.push_back(sub_arguments(c.argument));
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::vector<Case> cases;
    for (std::size_t i = 0; i < options.size(); ++i)
      cases.push_back(Case{a.cases()[i].hypothesis, options[i][pick[i]]});
    Argument variant = Argument::rbc(a.trigger(), std::move(cases));
    if (seen.insert(variant).second) out.push_back(variant);
    std::size_t i = options.size();
    while (i > 0) {
      --i;
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (options.empty()) return out;
  }
}

Argument hat(const Argument& a) {
  std::vector<Argument> subs = sub_prime(a);
  std::vector<Formula> concs;
  for (const auto& s : subs) concs.push_back(s.conclusion());
  return Argument::strict(std::move(subs), Formula::conj_all(concs));
}

}  // namespace casewise
