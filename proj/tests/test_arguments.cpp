#include <doctest.h>

#include "casewise/generator.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace casewise;
using namespace fx;

namespace {

// Arguments over ex1.at, rules d1..d6 in file order.
struct Ex1 {
  Argument a1 = def({prem("T")}, "d1", "p | q");
  Argument p_chain = def({def({def({prem("p")}, "d2", "p1")}, "d3", "p2")}, "d4", "r");
  Argument q_chain = def({def({prem("q")}, "d5", "q1")}, "d6", "r");
  Argument a2 = Argument::rbc(a1, {in_case("p", p_chain), in_case("q", q_chain)});
  Argument a3 = Argument::rbc(a1, {in_case("p", def({prem("p")}, "d2", "p1")),
                                   in_case("q", def({prem("q")}, "d5", "q1"))});
};

bool on_branch_twice(const Argument& a, std::vector<std::string>& path) {
  if (a.kind() == ArgKind::Defeasible) {
    if (std::find(path.begin(), path.end(), a.rule_id()) != path.end()) return true;
    path.push_back(a.rule_id());
  }
  bool twice = false;
  for (const auto& c : a.children()) twice = twice || on_branch_twice(c, path);
  for (const auto& c : a.cases()) {
    std::vector<std::string> inner = path;
    twice = twice || on_branch_twice(c.argument, inner);
  }
  if (a.kind() == ArgKind::Defeasible) path.pop_back();
  return twice;
}

const char* kTheories[] = {"ex1.at", "ex2.at", "ex3.at", "ex4.at", "at1.at", "arm.at", "at4.at"};

}  // namespace

TEST_SUITE("arguments") {

TEST_CASE("conclusions and sub-arguments") {
  Ex1 x;
  CHECK(x.a2.conclusion() == f("r"));
  CHECK(x.a3.conclusion() == f("p1 | q1"));
  CHECK(x.a2.kind() == ArgKind::Rbc);
  CHECK(x.a2.trigger() == x.a1);
  auto sub = sub_arguments(x.a2);
  CHECK(sub.size() == 3);
  CHECK(contains(sub, x.a1));
  CHECK(contains(sub, prem("T")));
  CHECK_FALSE(contains(sub, x.q_chain));
  CHECK(hypothetical_sub_arguments(x.a1).empty());
  CHECK(x.a1.rbc_free());
  CHECK_FALSE(x.a2.rbc_free());
  CHECK(x.a2.rule_applications() == 1 + 1 + 3 + 2);
}

TEST_CASE("set-disjunction of case conclusions") {
  CHECK(set_disjunction({f("v"), f("v")}) == f("v"));
  CHECK(set_disjunction({f("a"), f("b"), f("a")}) == f("a | b"));
}

TEST_CASE("structural identity") {
  Ex1 x, y;
  CHECK(x.a2 == y.a2);
  CHECK(x.a2.hash() == y.a2.hash());
  CHECK(x.a2 != x.a3);
  CHECK(strict({prem("p"), prem("q")}, "p & q") == strict({prem("q"), prem("p")}, "p & q"));
}

TEST_CASE("dagger") {
  Ex1 x;
  CHECK(dagger(prem("p")) == f("p"));
  CHECK(dagger(def({prem("p")}, "d", "q")) == f("q & p"));
  // r & (p|q & T) & (dagger of the p case | dagger of the q case)
  Formula expected = Formula::conj(Formula::conj(f("r"), dagger(x.a1)),
                                   Formula::disj(dagger(x.p_chain), dagger(x.q_chain)));
  CHECK(dagger(x.a2) == expected);
}

TEST_CASE("sub-prime and hat") {
  Ex1 x;
  auto sp = sub_prime(x.a3);
  // Sub(A1) plus the 2 x 2 case variants.
  CHECK(sp.size() == 2 + 4);
  CHECK(contains(sp, x.a3));
  CHECK(contains(sp, Argument::rbc(x.a1, {in_case("p", prem("p")), in_case("q", prem("q"))})));
  Argument h = hat(x.a3);
  CHECK(h.kind() == ArgKind::Strict);
  CHECK(h.children().size() == sp.size());
  CHECK(oracle::entails({dagger(h)}, dagger(x.a3)));
  CHECK(oracle::entails({dagger(x.a3)}, dagger(h)));
  CHECK(sub_prime(x.a1) == sub_arguments(x.a1));
}

TEST_CASE("two-chain theory arguments are generated") {
  ArgTheory at = theory("ex1.at");
  GenResult r = generate_arguments(at, GenConfig{});
  Ex1 x;
  CHECK(contains(r.arguments, x.a1));
  CHECK(contains(r.arguments, x.a2));
  CHECK(contains(r.arguments, x.a3));
  auto hsub = hypothetical_sub_arguments(x.a2);
  REQUIRE(hsub.size() == 2);
  CHECK(hsub[0] == in_case("p", x.p_chain));
  CHECK(hsub[1] == in_case("q", x.q_chain));
}

TEST_CASE("self-defeating chain is filtered") {
  ArgTheory at = theory("ex2.at");
  ArgumentUniverse u = generate_unfiltered(at, GenConfig{});
  GenResult r = generate_arguments(at, GenConfig{});
  Argument a0 = def({prem("T")}, "d2", "p");
  Argument a1 = def({a0}, "d3", "!p");
  Argument a2 = strict({a0, a1}, "!s");
  Argument a3 = def({prem("T")}, "d1", "s");
  auto flag = [&](const Argument& a) -> int {
    for (const auto& e : u.entries)
      if (e.argument == a) return e.consistent ? 1 : 0;
    return -1;
  };
  CHECK(flag(a1) == 0);
  CHECK(flag(a2) == 0);
  CHECK(flag(a3) == 1);
  CHECK_FALSE(contains(r.arguments, a1));
  CHECK_FALSE(contains(r.arguments, a2));
  CHECK(contains(r.arguments, a3));
  CHECK_FALSE(oracle::consistent({dagger(a2)}));
}

TEST_CASE("generated arguments are well formed and consistent") {
  for (const char* name : kTheories) {
    CAPTURE(name);
    ArgTheory at = theory(name);
    GenConfig cfg;
    ArgumentEngine engine(at, cfg);
    GenResult r = engine.arguments();
    CHECK_FALSE(r.capped);
    for (const auto& a : r.arguments) {
      auto err = check_argument(a, at);
      CHECK_MESSAGE(!err, *err);
      CHECK(a.rule_applications() <= cfg.max_rule_applications);
      CHECK(oracle::consistent({dagger(a)}));
      std::vector<std::string> path;
      CHECK_FALSE(on_branch_twice(a, path));
    }
    for (const auto& [phi, args] : engine.hypothetical_arguments())
      for (const auto& a : args) {
        auto err = check_argument(a, at.extend(phi));
        CHECK_MESSAGE(!err, *err);
        CHECK_FALSE(contains(r.arguments, a));
      }
  }
}

TEST_CASE("check_argument rejects malformed arguments") {
  ArgTheory at = theory("ex3.at");
  CHECK(check_argument(prem("q"), at));
  CHECK(check_argument(def({prem("p")}, "d2", "s"), at));
  CHECK(check_argument(def({prem("p")}, "nope", "q | r"), at));
  CHECK(check_argument(strict({prem("p")}, "t"), at));
  CHECK_FALSE(check_argument(strict({prem("p"), prem("t")}, "p & t"), at));
  Argument trig = def({prem("p")}, "d1", "q | r");
  CHECK(check_argument(Argument::rbc(trig, {in_case("r", prem("r")), in_case("q", prem("q"))}), at));
  CHECK_FALSE(check_argument(Argument::rbc(trig, {in_case("q", prem("q")), in_case("r", prem("r"))}), at));
}

TEST_CASE("budget, rbc switch and determinism") {
  ArgTheory at = theory("ex3.at");
  GenConfig small;
  small.max_rule_applications = 2;
  GenResult r = generate_arguments(at, small);
  CHECK(r.budget_hit);
  CHECK_FALSE(r.warnings.empty());
  for (const auto& a : r.arguments) CHECK(a.rule_applications() <= 2);

  GenConfig no_rbc;
  no_rbc.rbc_enabled = false;
  for (const auto& a : generate_arguments(at, no_rbc).arguments) CHECK(a.rbc_free());

  GenResult once = generate_arguments(at, GenConfig{});
  GenResult twice = generate_arguments(at, GenConfig{});
  CHECK(once.arguments == twice.arguments);
  CHECK(std::is_sorted(once.arguments.begin(), once.arguments.end(), canonical_less));
}

TEST_CASE("minimal disjunctions") {
  // <<p> -> p | q> is not a minimal trigger: p alone already follows.
  ArgTheory at({{"d1", {f("p")}, f("s")}, {"d2", {f("q")}, f("s")}, {"d3", {f("p | q")}, f("z")}},
               {f("p")});
  Argument weak = strict({prem("p")}, "p | q");
  auto rbc_on = [&](bool minimal) {
    GenConfig cfg;
    cfg.minimal_disjunctions = minimal;
    bool found = false;
    for (const auto& a : generate_arguments(at, cfg).arguments)
      if (a.kind() == ArgKind::Rbc && a.trigger() == weak) found = true;
    return found;
  };
  CHECK_FALSE(rbc_on(true));
  CHECK(rbc_on(false));
}

TEST_CASE("config validation") {
  GenConfig cfg;
  cfg.max_rule_applications = 0;
  CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
  CHECK_THROWS_AS(generate_arguments(theory("ex1.at"), cfg), std::invalid_argument);
}

}  // TEST_SUITE
