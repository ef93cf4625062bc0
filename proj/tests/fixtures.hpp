// Shared helpers for the test binaries: data files and argument builders.

#ifndef CASEWISE_TESTS_FIXTURES_HPP
#define CASEWISE_TESTS_FIXTURES_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "casewise/argument.hpp"
#include "casewise/theory.hpp"

namespace fx {

using namespace casewise;

inline std::string data(const std::string& name) { return std::string(CASEWISE_DATA_DIR) + "/" + name; }
inline ArgTheory theory(const std::string& name) { return load_theory(data(name)); }

inline Formula f(const std::string& s) { return parse_formula(s); }
inline Argument prem(const std::string& s) { return Argument::premise(f(s)); }
inline Argument def(std::vector<Argument> children, const std::string& rule, const std::string& head) {
  return Argument::defeasible(std::move(children), rule, f(head));
}
inline Argument strict(std::vector<Argument> children, const std::string& conc) {
  return Argument::strict(std::move(children), f(conc));
}
inline Case in_case(const std::string& hyp, Argument a) { return Case{f(hyp), std::move(a)}; }

template <class Range>
bool contains(const Range& r, const Argument& a) {
  return std::find(r.begin(), r.end(), a) != r.end();
}

}  // namespace fx

#endif  // CASEWISE_TESTS_FIXTURES_HPP
