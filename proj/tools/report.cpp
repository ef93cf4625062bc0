#include "report.hpp"

namespace casewise::report {

ordered_json config(const GenConfig& cfg) {
  return {{"max_rule_applications", cfg.max_rule_applications},
          {"max_strict_premises", cfg.max_strict_premises},
          {"minimal_disjunctions", cfg.minimal_disjunctions},
          {"rbc", cfg.rbc_enabled}};
}

ordered_json node(const Saf& saf, std::size_t i) {
  const SafNode& n = saf.node(i);
  ordered_json j{{"id", saf.id(i)},
                 {"kind", to_string(n.argument.kind())},
                 {"conclusion", n.argument.conclusion().str()},
                 {"argument", n.argument.str()},
                 {"rule_applications", n.argument.rule_applications()}};
  j["hypothesis"] = n.is_base() ? ordered_json(nullptr) : ordered_json(n.hypothesis->str());
  return j;
}

ordered_json extension(const Saf& saf, const Extension& e) {
  ordered_json ids = ordered_json::array();
  for (std::size_t i : e) ids.push_back(saf.id(i));
  return ids;
}

ordered_json postulate(const PostulateReport& r) {
  return {{"postulate", r.postulate},
          {"verdict", to_string(r.verdict)},
          {"detail", r.detail},
          {"counterexample", r.counterexample}};
}

ordered_json rule(const DefeasibleRule& r) {
  ordered_json body = ordered_json::array();
  for (Formula b : r.body) body.push_back(b.str());
  return {{"id", r.id}, {"body", body}, {"head", r.head.str()}};
}

ordered_json ddl_extension(const DdlExtension& e) {
  ordered_json gens = ordered_json::array(), fp = ordered_json::array();
  for (Formula f : e.generators) gens.push_back(f.str());
  for (Formula f : e.fingerprint) fp.push_back(f.str());
  return {{"generators", gens}, {"fingerprint", fp}};
}

std::string node_text(const Saf& saf, std::size_t i) {
  const SafNode& n = saf.node(i);
  std::string out = saf.id(i) + "  ";
  if (!n.is_base()) out += "[" + n.hypothesis->str() + "] ";
  return out + n.argument.str();
}

std::string extension_text(const Saf& saf, const Extension& e) {
  std::string out = "{";
  for (std::size_t k = 0; k < e.size(); ++k) out += (k ? ", " : "") + saf.id(e[k]);
  return out + "}";
}

std::string postulate_text(const PostulateReport& r) {
  std::string out = std::string(to_string(r.verdict)) + "  " + r.postulate;
  if (!r.detail.empty()) out += "  (" + r.detail + ")";
  for (const auto& c : r.counterexample) out += "\n    " + c;
  return out;
}

std::string ddl_extension_text(const DdlExtension& e) {
  std::string out = "Cn({";
  for (std::size_t k = 0; k < e.fingerprint.size(); ++k)
    out += (k ? ", " : "") + e.fingerprint[k].str();
  return out + "})";
}

}  // namespace casewise::report
