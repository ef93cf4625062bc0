#include <doctest.h>

#include "casewise/postulates.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace casewise;
using namespace fx;

namespace {

bool passes(const PostulateReport& r) { return r.verdict == Verdict::Pass; }

const char* kTheories[] = {"ex1.at", "ex2.at", "ex3.at", "ex3_not_r.at", "ex4.at", "at1.at", "arm.at", "at4.at"};

}  // namespace

TEST_SUITE("postulates") {

TEST_CASE("all postulates on the example theories") {
  for (const char* name : kTheories) {
    CAPTURE(name);
    GenConfig cfg;
    Saf saf = build_saf(theory(name), cfg);
    std::vector<Extension> exts = complete(Af::from_saf(saf));
    REQUIRE_FALSE(exts.empty());
    for (const auto& r : check_postulates(saf, exts, cfg)) {
      CAPTURE(r.postulate);
      CHECK_MESSAGE(!r.failed(), r.detail);
    }
  }
}

TEST_CASE("sub-argument closure negative control") {
  Saf saf = build_saf(theory("ex3.at"), GenConfig{});
  Extension grd = grounded(Af::from_saf(saf));
  CHECK(passes(check_subargument_closure(saf, grd)));
  // Drop a member that is a proper sub-argument of another member.
  Extension broken;
  bool dropped = false;
  for (std::size_t i : grd) {
    const Argument& a = saf.node(i).argument;
    bool is_sub = false;
    for (std::size_t j : grd)
      if (j != i && contains(sub_arguments(saf.node(j).argument), a) && saf.node(j).is_base() && saf.node(i).is_base())
        is_sub = true;
    if (is_sub && !dropped) {
      dropped = true;
      continue;
    }
    broken.push_back(i);
  }
  REQUIRE(dropped);
  PostulateReport r = check_subargument_closure(saf, broken);
  CHECK(r.failed());
  CHECK_FALSE(r.counterexample.empty());
}

TEST_CASE("consistency negative control") {
  ArgTheory at({{"d1", {Formula::top()}, f("p")}, {"d2", {Formula::top()}, f("!p")}}, {Formula::top()});
  Saf saf = build_saf(at, GenConfig{});
  auto p = saf.find(def({prem("T")}, "d1", "p"), std::nullopt);
  auto np = saf.find(def({prem("T")}, "d2", "!p"), std::nullopt);
  REQUIRE(p);
  REQUIRE(np);
  Extension e{std::min(*p, *np), std::max(*p, *np)};
  PostulateReport r = check_consistency(saf, e);
  CHECK(r.failed());
  CHECK_FALSE(r.counterexample.empty());
  CHECK(passes(check_consistency(saf, {})));
}

TEST_CASE("strict closure in the broken arm") {
  GenConfig cfg;
  Saf saf = build_saf(theory("arm.at"), cfg);
  Extension grd = grounded(Af::from_saf(saf));
  CHECK(passes(check_strict_closure(saf, grd, cfg)));
  CHECK(passes(check_strict_closure(saf, {}, cfg)));
  Argument nr = def({prem("w")}, "d1", "!r");
  Argument l = strict({nr, prem("l | r")}, "l");
  auto i = saf.find(l, std::nullopt);
  REQUIRE(i);
  CHECK(std::binary_search(grd.begin(), grd.end(), *i));
}

TEST_CASE("self-defeating chain does not contaminate s") {
  GenConfig cfg;
  Saf saf = build_saf(theory("ex2.at"), cfg);
  for (const auto& e : complete(Af::from_saf(saf))) {
    CHECK(passes(check_consistency(saf, e)));
    bool s = false;
    for (std::size_t i : e) s = s || saf.node(i).argument.conclusion() == f("s");
    CHECK(s);
  }
}

TEST_CASE("hat construction") {
  for (const char* name : kTheories) {
    CAPTURE(name);
    Saf saf = build_saf(theory(name), GenConfig{});
    CHECK(passes(check_hat_attackers(saf)));
    for (const auto& e : complete(Af::from_saf(saf))) CHECK(passes(check_hat_membership(saf, e)));
    for (const auto& n : saf.nodes()) {
      Formula d = dagger(n.argument), dh = dagger(hat(n.argument));
      CHECK(oracle::entails({d}, dh));
      CHECK(oracle::entails({dh}, d));
    }
  }
}

TEST_CASE("non-interference") {
  ArgTheory left({{"d1", {f("p")}, f("q")}}, {f("p")});
  ArgTheory right({{"d1", {f("a")}, f("b")}}, {f("a")});
  for (Semantics s : {Semantics::Grounded, Semantics::Complete, Semantics::Preferred})
    for (Mode m : {Mode::Forall, Mode::Intersect}) {
      CHECK(passes(check_non_interference(left, right, s, m, GenConfig{})));
      CHECK(passes(check_non_interference(theory("ex3.at"), parse_theory("defeasible:\n => x\n => y\n y => !y\n"),
                                          s, m, GenConfig{})));
    }
  CHECK_THROWS_AS(check_non_interference(left, left, Semantics::Grounded, Mode::Forall, GenConfig{}),
                  std::invalid_argument);
  ArgTheory u = disjoint_union(left, right);
  CHECK(u.rules().size() == 2);
  CHECK(u.rules()[0].id != u.rules()[1].id);
  CHECK(u.facts().size() == 2);
}

TEST_CASE("random theories are reproducible") {
  CHECK(print_theory(random_theory(7, 5, 4, 0.3)) ==
        "facts:\n  p5 | p1\ndefeasible:\n  d1: => p4\n  d2: !p4 => p2\n  d3: !p1 => !p3\n"
        "  d4: !p2, !p5 => p2 | !p1\n");
  CHECK(random_theory(11, 4, 3, 0.5) == random_theory(11, 4, 3, 0.5));
  CHECK(random_theory(3, 4, 0, 0.3).rules().empty());
  CHECK_THROWS_AS(random_theory(1, 0, 2, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(random_theory(1, 3, 2, 1.5), std::invalid_argument);
  for (std::uint64_t k = 0; k < 50; ++k) {
    ArgTheory at = corpus_theory(k);
    CHECK(oracle::consistent(at.facts()));
    CHECK(at.rules().size() == 1 + k % 6);
  }
}

TEST_CASE("random theories satisfy the postulates") {
  // A slice of the corpus; the full run lives in the acceptance binary.
  GenConfig cfg = corpus_config();
  for (std::uint64_t k = 0; k < 30; ++k) {
    CAPTURE(k);
    Saf saf = build_saf(corpus_theory(k), cfg);
    std::vector<Extension> exts = complete(Af::from_saf(saf));
    for (const auto& r : check_postulates(saf, exts, cfg)) {
      CAPTURE(r.postulate);
      CHECK_MESSAGE(!r.failed(), r.detail);
    }
  }
}

}  // TEST_SUITE
