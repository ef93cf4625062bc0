#include <doctest.h>

#include "casewise/postulates.hpp"
#include "casewise/saf.hpp"
#include "fixtures.hpp"

using namespace casewise;
using namespace fx;

namespace {

SafNode base(Argument a) { return {std::move(a), std::nullopt}; }
SafNode hyp(Argument a, const std::string& phi) { return {std::move(a), f(phi)}; }

struct Ex3 {
  Argument trigger = def({prem("p")}, "d1", "q | r");
  Argument qs = def({prem("q")}, "d2", "s");
  Argument a1 = Argument::rbc(trigger, {in_case("q", def({qs}, "d3", "v")),
                                        in_case("r", def({prem("r")}, "d4", "v"))});
  Argument a2 = def({prem("t")}, "d5", "!s");
};

struct Ex4 {
  Argument a0 = def({prem("p")}, "d1", "q | r");
  Argument qs1 = def({prem("q")}, "d2", "s1");
  Argument a1 = Argument::rbc(a0, {in_case("q", def({def({qs1}, "d3", "s2")}, "d4", "v")),
                                   in_case("r", def({prem("r")}, "d5", "v"))});
  Argument a2 = def({prem("q")}, "d6", "!s1");
};

bool has_edge(const Saf& saf, const SafNode& a, const SafNode& b) {
  auto i = saf.find(a.argument, a.hypothesis);
  auto j = saf.find(b.argument, b.hypothesis);
  REQUIRE(i);
  REQUIRE(j);
  const auto& at = saf.attackers(*j);
  return std::find(at.begin(), at.end(), *i) != at.end();
}

const char* kTheories[] = {"ex1.at", "ex2.at", "ex3.at", "ex3_not_r.at", "ex4.at", "at1.at", "arm.at", "at4.at"};

}  // namespace

TEST_SUITE("attacks") {

TEST_CASE("direct attacks need a defeasible top and matching origin") {
  SafNode np = base(def({prem("T")}, "x", "!p"));
  SafNode p_def = base(def({prem("T")}, "y", "p"));
  SafNode p_prem = base(prem("p"));
  CHECK(directly_attacks(np, p_def));
  CHECK(directly_attacks(p_def, np));
  CHECK_FALSE(directly_attacks(np, p_prem));
  CHECK_FALSE(directly_attacks(base(def({prem("T")}, "x", "!!p")), p_def));

  SafNode hq = hyp(def({prem("q")}, "z", "!p"), "q");
  SafNode hr = hyp(def({prem("r")}, "z", "p"), "r");
  CHECK_FALSE(directly_attacks(hq, p_def));
  CHECK(directly_attacks(p_def, hq));
  CHECK_FALSE(directly_attacks(hq, hr));
  CHECK(directly_attacks(hq, hyp(def({prem("q")}, "w", "p"), "q")));
}

TEST_CASE("base argument attacks a hypothetical case") {
  Ex3 x;
  SafNode a1 = base(x.a1), a2 = base(x.a2), hqs = hyp(x.qs, "q");
  CHECK(directly_attacks(a2, hqs));
  CHECK_FALSE(directly_attacks(a2, a1));
  CHECK(attacks(a2, a1));
  CHECK_FALSE(attacks(a1, a2));
  CHECK_FALSE(attacks(hqs, a2));

  Saf saf = build_saf(theory("ex3.at"), GenConfig{});
  CHECK(saf.find(x.a1, std::nullopt));
  CHECK(saf.find(x.qs, f("q")));
  CHECK(has_edge(saf, a2, a1));
  CHECK(has_edge(saf, a2, hqs));
  CHECK(saf.attackers(*saf.find(x.a2, std::nullopt)).empty());
}

TEST_CASE("hypothetical arguments under one hypothesis attack each other") {
  Ex4 x;
  SafNode a1 = base(x.a1), a2 = hyp(x.a2, "q"), hs1 = hyp(x.qs1, "q");
  CHECK(directly_attacks(a2, hs1));
  CHECK(directly_attacks(hs1, a2));
  CHECK(attacks(a2, a1));
  CHECK_FALSE(directly_attacks(a2, a1));

  Saf saf = build_saf(theory("ex4.at"), GenConfig{});
  CHECK(has_edge(saf, a2, hs1));
  CHECK(has_edge(saf, hs1, a2));
  CHECK(has_edge(saf, a2, a1));
  bool lifted = false;
  for (const auto& e : saf.edges())
    if (e.attacker == *saf.find(x.a2, f("q")) && e.target == *saf.find(x.a1, std::nullopt))
      lifted = !e.direct;
  CHECK(lifted);
}

TEST_CASE("reasoning by cases in AT1 is unattacked") {
  Saf saf = build_saf(theory("at1.at"), GenConfig{});
  Argument a = Argument::rbc(prem("p | q"), {in_case("p", def({prem("p")}, "d1", "r")),
                                             in_case("q", def({prem("q")}, "d2", "r"))});
  auto i = saf.find(a, std::nullopt);
  REQUIRE(i);
  CHECK(saf.attackers(*i).empty());
}

TEST_CASE("graph invariants on the example theories") {
  for (const char* name : kTheories) {
    CAPTURE(name);
    Saf saf = build_saf(theory(name), GenConfig{});
    for (std::size_t j = 0; j < saf.size(); ++j) {
      for (std::size_t i : saf.attackers(j)) {
        CHECK(attacks(saf.node(i), saf.node(j)));
        // No self-attack from a consistent argument.
        CHECK(i != j);
      }
      CHECK(saf.attackers_of(saf.node(j)) == saf.attackers(j));
    }
    for (const auto& e : saf.edges()) {
      const SafNode& a = saf.node(e.attacker);
      const SafNode& b = saf.node(e.target);
      if (e.direct) {
        CHECK(directly_attacks(a, b));
        CHECK((a.is_base() || a.hypothesis == b.hypothesis));
      }
    }
    CHECK(std::is_sorted(saf.edges().begin(), saf.edges().end(), [](const AttackEdge& a, const AttackEdge& b) {
      return std::tie(a.attacker, a.target) < std::tie(b.attacker, b.target);
    }));
    // Lifting through sub-arguments: an attacker of a proper sub-argument attacks the whole.
    for (std::size_t j = 0; j < saf.size(); ++j)
      for (const auto& s : sub_arguments(saf.node(j).argument)) {
        auto k = saf.find(s, saf.node(j).hypothesis);
        if (!k) continue;
        for (std::size_t i : saf.attackers(*k)) CHECK(attacks(saf.node(i), saf.node(j)));
      }
  }
}

TEST_CASE("hat has the same attackers") {
  for (const char* name : kTheories) {
    CAPTURE(name);
    Saf saf = build_saf(theory(name), GenConfig{});
    PostulateReport r = check_hat_attackers(saf);
    CHECK_MESSAGE(r.verdict == Verdict::Pass, r.detail);
  }
}

TEST_CASE("hypothetical nodes") {
  Saf saf = build_saf(theory("ex3.at"), GenConfig{});
  bool any = false;
  for (const auto& n : saf.nodes()) {
    if (n.is_base()) continue;
    any = true;
    CHECK_FALSE(saf.theory().has_fact(*n.hypothesis));
    CHECK_FALSE(saf.find(n.argument, std::nullopt));
  }
  CHECK(any);
  CHECK(saf.id(0) == "a0");
  std::string edges = edge_list(saf);
  CHECK(edges.find(" -> ") != std::string::npos);
}

}  // TEST_SUITE
