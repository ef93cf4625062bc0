#include "casewise/theory.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "casewise/entailment.hpp"

namespace casewise {

std::string DefeasibleRule::str() const {
  std::string out = id + ": ";
  if (!(body.size() == 1 && body[0] == Formula::top())) {
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (i) out += ", ";
      out += body[i].str();
    }
    out += ' ';
  }
  out += "=> " + head.str();
  return out;
}

ArgTheory::ArgTheory(std::vector<DefeasibleRule> rules, std::vector<Formula> facts) {
  std::unordered_set<std::string> ids;
  for (auto& r : rules) {
    if (r.body.empty()) r.body.push_back(Formula::top());
    if (!ids.insert(r.id).second) throw TheoryError("duplicate rule id '" + r.id + "'", 0);
  }
  std::vector<Formula> unique;
  for (Formula f : facts)
    if (std::find(unique.begin(), unique.end(), f) == unique.end()) unique.push_back(f);
  core_ = std::make_shared<Core>(Core{std::move(rules), std::move(unique)});
}

std::vector<Formula> ArgTheory::effective_facts() const {
  std::vector<Formula> out = facts();
  for (Formula h : hypotheses_)
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
  if (std::find(out.begin(), out.end(), Formula::top()) == out.end())
    out.push_back(Formula::top());
  return out;
}

bool ArgTheory::has_fact(Formula f) const {
  if (f == Formula::top()) return true;
  return std::find(facts().begin(), facts().end(), f) != facts().end();
}

const DefeasibleRule* ArgTheory::find_rule(std::string_view id) const {
  for (const auto& r : rules())
    if (r.id == id) return &r;
  return nullptr;
}

std::set<std::string> ArgTheory::atoms() const {
  std::set<std::string> out;
  for (Formula f : facts()) f.collect_atoms(out);
  for (Formula f : hypotheses_) f.collect_atoms(out);
  for (const auto& r : rules()) {
    for (Formula b : r.body) b.collect_atoms(out);
    r.head.collect_atoms(out);
  }
  return out;
}

ArgTheory ArgTheory::extend(Formula phi) const {
  if (has_fact(phi))
    throw std::invalid_argument("hypothesis " + phi.str() + " is already a fact");
  ArgTheory out = *this;
  if (std::find(out.hypotheses_.begin(), out.hypotheses_.end(), phi) == out.hypotheses_.end())
    out.hypotheses_.push_back(phi);
  return out;
}

bool ArgTheory::operator==(const ArgTheory& o) const {
  return rules() == o.rules() && facts() == o.facts() && hypotheses_ == o.hypotheses_;
}

// {{{ File format

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Formula parse_at(std::string_view text, std::size_t line) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    throw TheoryError(e.what(), line);
  } catch (const std::invalid_argument& e) {
    throw TheoryError(e.what(), line);
  }
}

}  // namespace

ArgTheory parse_theory(std::string_view text) {
  enum class Section { None, Facts, Defeasible } section = Section::None;
  std::vector<Formula> facts;
  std::vector<DefeasibleRule> rules;
  std::unordered_set<std::string> ids;
  std::size_t line_no = 0;
  std::size_t auto_id = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line == "facts:") {
      section = Section::Facts;
      continue;
    }
    if (line == "defeasible:") {
      section = Section::Defeasible;
      continue;
    }
    switch (section) {
      case Section::None:
        throw TheoryError("expected 'facts:' or 'defeasible:' header", line_no);
      case Section::Facts:
        facts.push_back(parse_at(line, line_no));
        break;
      case Section::Defeasible: {
        std::size_t arrow = line.find("=>");
        if (arrow == std::string::npos) throw TheoryError("rule without '=>'", line_no);
        std::string lhs = line.substr(0, arrow);
        std::string head_text = trim(std::string_view(line).substr(arrow + 2));
        if (head_text.empty()) throw TheoryError("rule without head", line_no);
        ++auto_id;
        std::string id = "d" + std::to_string(auto_id);
        if (auto colon = lhs.find(':'); colon != std::string::npos) {
          id = trim(std::string_view(lhs).substr(0, colon));
          if (!is_identifier(id)) throw TheoryError("invalid rule name '" + id + "'", line_no);
          lhs.erase(0, colon + 1);
        }
        if (!ids.insert(id).second) throw TheoryError("duplicate rule id '" + id + "'", line_no);
        DefeasibleRule rule{id, {}, parse_at(head_text, line_no)};
        std::string body = trim(lhs);
        if (!body.empty()) {
          std::size_t start = 0;
          while (true) {
            std::size_t comma = body.find(',', start);
            std::string part = trim(std::string_view(body).substr(
                start, comma == std::string::npos ? std::string::npos : comma - start));
            if (part.empty()) throw TheoryError("empty body formula", line_no);
            rule.body.push_back(parse_at(part, line_no));
            if (comma == std::string::npos) break;
            start = comma + 1;
          }
        }
        rules.push_back(std::move(rule));
        break;
      }
    }
  }
  return ArgTheory(std::move(rules), std::move(facts));
}

std::string print_theory(const ArgTheory& at) {
  std::string out = "facts:\n";
  for (Formula f : at.facts()) out += "  " + f.str() + "\n";
  out += "defeasible:\n";
  for (const auto& r : at.rules()) out += "  " + r.str() + "\n";
  return out;
}

ArgTheory load_theory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TheoryError("cannot read '" + path + "'", 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_theory(buf.str());
}

// }}}

ValidationReport validate(const ArgTheory& at) {
  ValidationReport report;
  if (at.is_base() && !is_consistent(at.facts())) {
    report.valid = false;
    report.errors.push_back("inconsistent knowledge base");
  }
  for (Formula h : at.hypotheses())
    if (std::find(at.facts().begin(), at.facts().end(), h) != at.facts().end()) {
      report.valid = false;
      report.errors.push_back("hypothesis " + h.str() + " is a fact");
    }

  std::set<std::string> in_facts, in_bodies, in_heads;
  for (Formula f : at.facts()) f.collect_atoms(in_facts);
  for (const auto& r : at.rules()) {
    for (Formula b : r.body) b.collect_atoms(in_bodies);
    r.head.collect_atoms(in_heads);
  }
  for (const auto& a : in_facts)
    if (!in_bodies.count(a) && !in_heads.count(a))
      report.warnings.push_back("atom '" + a + "' occurs in no rule");
  for (const auto& a : in_bodies)
    if (!in_facts.count(a) && !in_heads.count(a))
      report.warnings.push_back("atom '" + a + "' occurs only in rule bodies");
  return report;
}

}  // namespace casewise
