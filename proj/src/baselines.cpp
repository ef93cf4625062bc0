#include "casewise/baselines.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "casewise/entailment.hpp"

namespace casewise {

std::string DisjunctiveDefault::str() const {
  std::string out = prerequisite.str() + " :";
  for (std::size_t i = 0; i < justifications.size(); ++i)
    out += (i ? ", " : " ") + justifications[i].str();
  out += " /";
  for (std::size_t i = 0; i < consequents.size(); ++i)
    out += (i ? " ; " : " ") + consequents[i].str();
  return out;
}

// {{{ Parsing

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    out.push_back(trim(s.substr(start, at == std::string_view::npos ? s.size() - start : at - start)));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

Formula parse_part(const std::string& text, std::size_t line) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    throw TheoryError(e.what(), line);
  } catch (const std::invalid_argument& e) {
    throw TheoryError(e.what(), line);
  }
}

std::vector<Formula> parse_consequents(std::string_view text, std::size_t line) {
  std::vector<Formula> out;
  for (const auto& part : split(text, ';')) {
    if (part.empty()) throw TheoryError("empty consequent", line);
    out.push_back(parse_part(part, line));
  }
  return out;
}

}  // namespace

DdlTheory parse_ddl(std::string_view text) {
  DdlTheory t;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    DisjunctiveDefault d;
    if (line.rfind("fact ", 0) == 0) {
      d.prerequisite = Formula::top();
      d.consequents = parse_consequents(std::string_view(line).substr(5), line_no);
    } else {
      std::size_t colon = line.find(':');
      std::size_t slash = line.find('/');
      if (colon == std::string::npos || slash == std::string::npos || slash < colon)
        throw TheoryError("expected 'prerequisite : justifications / consequents'", line_no);
      std::string pre = trim(std::string_view(line).substr(0, colon));
      d.prerequisite = pre.empty() ? Formula::top() : parse_part(pre, line_no);
      std::string just = trim(std::string_view(line).substr(colon + 1, slash - colon - 1));
      if (!just.empty())
        for (const auto& j : split(just, ',')) {
          if (j.empty()) throw TheoryError("empty justification", line_no);
          d.justifications.push_back(parse_part(j, line_no));
        }
      d.consequents = parse_consequents(std::string_view(line).substr(slash + 1), line_no);
    }
    d.prerequisite.collect_atoms(t.vocabulary);
    for (Formula f : d.justifications) f.collect_atoms(t.vocabulary);
    for (Formula f : d.consequents) f.collect_atoms(t.vocabulary);
    t.defaults.push_back(std::move(d));
  }
  return t;
}

DdlTheory load_ddl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TheoryError("cannot read '" + path + "'", 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ddl(buf.str());
}

// }}}

// {{{ Extensions

namespace {

std::vector<std::string> key(const DdlExtension& e) {
  std::vector<std::string> out;
  for (Formula f : e.fingerprint) out.push_back(f.str());
  return out;
}

}  // namespace

std::vector<DdlExtension> ddl_extensions(const DdlTheory& t) {
  ModelSpace space(t.vocabulary);
  const auto& ds = t.defaults;
  const std::size_t none = static_cast<std::size_t>(-1);

  auto applicable = [&](const DisjunctiveDefault& d, const std::vector<Formula>& base,
                        const std::vector<Formula>& candidate) {
    if (!space.entails(base, d.prerequisite)) return false;
    for (Formula j : d.justifications)
      if (space.entails(candidate, Formula::negate(j))) return false;
    return true;
  };
  auto entails_all = [&](const std::vector<Formula>& from, const std::vector<Formula>& goals) {
    for (Formula g : goals)
      if (!space.entails(from, g)) return false;
    return true;
  };

  std::vector<std::vector<Formula>> found;
  std::vector<std::size_t> pick(ds.size(), none);
  while (true) {
    std::vector<Formula> candidate;
    for (std::size_t i = 0; i < ds.size(); ++i)
      if (pick[i] != none) candidate.push_back(ds[i].consequents[pick[i]]);

    if (space.consistent(candidate)) {
      // Least fixpoint of the selected defaults against the candidate.
      std::vector<Formula> gamma;
      std::vector<char> applied(ds.size(), 0);
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < ds.size(); ++i)
          if (pick[i] != none && !applied[i] && applicable(ds[i], gamma, candidate)) {
            applied[i] = 1;
            gamma.push_back(ds[i].consequents[pick[i]]);
            changed = true;
          }
      }
      bool ok = entails_all(gamma, candidate);
      for (std::size_t i = 0; ok && i < ds.size(); ++i) {
        if (!applicable(ds[i], candidate, candidate)) continue;
        ok = std::any_of(ds[i].consequents.begin(), ds[i].consequents.end(),
                         [&](Formula c) { return space.entails(candidate, c); });
      }
      if (ok) {
        bool duplicate = false;
        for (const auto& f : found)
          if (entails_all(f, candidate) && entails_all(candidate, f)) duplicate = true;
        if (!duplicate) found.push_back(gamma);
      }
    }

    std::size_t i = 0;
    for (; i < ds.size(); ++i) {
      pick[i] = pick[i] == none ? 0 : pick[i] + 1;
      if (pick[i] < ds[i].consequents.size()) break;
      pick[i] = none;
    }
    if (i == ds.size()) break;
  }

  std::vector<DdlExtension> out;
  for (std::size_t a = 0; a < found.size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < found.size() && minimal; ++b)
      if (a != b && entails_all(found[a], found[b]) && !entails_all(found[b], found[a]))
        minimal = false;
    if (!minimal) continue;
    DdlExtension e{found[a], {}};
    for (const auto& name : t.vocabulary) {
      Formula p = Formula::atom(name);
      if (space.entails(found[a], p)) e.fingerprint.push_back(p);
      if (space.entails(found[a], Formula::negate(p))) e.fingerprint.push_back(Formula::negate(p));
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const DdlExtension& a, const DdlExtension& b) { return key(a) < key(b); });
  return out;
}

bool ddl_skeptical(const std::vector<DdlExtension>& exts, Formula phi) {
  return std::all_of(exts.begin(), exts.end(),
                     [&](const DdlExtension& e) { return entails(e.generators, phi); });
}

bool ddl_skeptical(const DdlTheory& t, Formula phi) { return ddl_skeptical(ddl_extensions(t), phi); }

// }}}

// {{{ OR / gOR

GorClosure gor_closure(const std::vector<DefeasibleRule>& rules, std::size_t bound) {
  GorClosure out{rules, false, {}};
  std::set<std::string> ids;
  // Bodies are compared as sets of disjuncts, heads syntactically.
  auto body_key = [](Formula body) {
    std::vector<std::string> out;
    for (Formula d : top_disjuncts(body)) out.push_back(d.str());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  std::set<std::pair<std::vector<std::string>, Formula>> known;
  for (const auto& r : rules) {
    ids.insert(r.id);
    if (r.body.size() == 1) known.emplace(body_key(r.body[0]), r.head);
  }

  struct Item {
    Formula body, head;
    bool seed;
  };
  std::vector<Item> pool;
  for (const auto& r : rules)
    if (r.body.size() == 1) pool.push_back({r.body[0], r.head, false});
  std::set<Formula> heads;
  for (const auto& r : rules)
    if (r.head.is_literal() && heads.insert(r.head).second) pool.push_back({r.head, r.head, true});

  auto disjoint = [](Formula a, Formula b) {
    std::vector<Formula> da = top_disjuncts(a), db = top_disjuncts(b);
    for (Formula x : da)
      if (std::find(db.begin(), db.end(), x) != db.end()) return false;
    return true;
  };

  std::size_t next_id = 0;
  auto add = [&](Formula body, Formula head) {
    if (body == head || !known.emplace(body_key(body), head).second) return true;
    if (out.rules.size() - rules.size() >= bound) {
      out.truncated = true;
      return false;
    }
    std::string id;
    do id = "g" + std::to_string(++next_id);
    while (ids.count(id));
    ids.insert(id);
    out.rules.push_back(DefeasibleRule{id, {body}, head});
    pool.push_back({body, head, false});
    return true;
  };

  std::size_t done = 0;  // pool[0, done) already paired among themselves
  while (done < pool.size()) {
    const std::size_t end = pool.size();
    for (std::size_t j = done; j < end; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        Item a = pool[i], b = pool[j];
        if ((a.seed && b.seed) || !disjoint(a.body, b.body)) continue;
        if (b.body.str() < a.body.str()) std::swap(a, b);
        std::vector<Formula> parts = top_disjuncts(a.body);
        for (Formula d : top_disjuncts(b.body)) parts.push_back(d);
        std::sort(parts.begin(), parts.end(),
                  [](Formula x, Formula y) { return x.str() < y.str(); });
        Formula body = Formula::disj_all(parts);
        bool ok = true;
        if (a.head == b.head) ok = add(body, a.head);
        if (ok) ok = add(body, Formula::disj(a.head, b.head));
        if (!ok) {
          out.warnings.push_back("gOR closure truncated at " + std::to_string(bound) +
                                 " added rules");
          return out;
        }
      }
    done = end;
  }
  return out;
}

ArgTheory gor_theory(const ArgTheory& at, std::size_t bound) {
  return ArgTheory(gor_closure(at.rules(), bound).rules, at.facts());
}

GenResult gor_arguments(const ArgTheory& at, const GenConfig& cfg, std::size_t bound) {
  GenConfig plain = cfg;
  plain.rbc_enabled = false;
  GorClosure closure = gor_closure(at.rules(), bound);
  GenResult r = generate_arguments(ArgTheory(closure.rules, at.facts()), plain);
  r.warnings.insert(r.warnings.begin(), closure.warnings.begin(), closure.warnings.end());
  return r;
}

// }}}

}  // namespace casewise
