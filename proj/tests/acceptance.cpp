// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "casewise/baselines.hpp"
#include "casewise/postulates.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace casewise;
using namespace fx;

namespace {

class Criterion {
 public:
  Criterion(int n, std::string title) : n_(n), title_(std::move(title)) {}
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  void note(std::string s) { notes_ = std::move(s); }
  bool report() const {
    std::cout << (failed_ ? "FAIL" : "PASS") << "  " << n_ << ". " << title_;
    if (!notes_.empty()) std::cout << " (" << notes_ << ")";
    std::cout << "\n";
    for (const auto& f : failures_) std::cout << "      " << f << "\n";
    return !failed_;
  }

 private:
  int n_;
  std::string title_;
  std::string notes_;
  bool failed_ = false;
  std::vector<std::string> failures_;
};

// Runs body, turning exceptions into failures.
template <class F>
bool run(int n, const std::string& title, F body) {
  Criterion c(n, title);
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  return c.report();
}

bool holds(const Saf& saf, Semantics sem, Mode mode, const char* phi) {
  return entails_query(saf, sem, mode, f(phi)).holds;
}

bool attacked_by(const Saf& saf, const SafNode& a, const SafNode& b) {
  auto i = saf.find(a.argument, a.hypothesis);
  auto j = saf.find(b.argument, b.hypothesis);
  if (!i || !j) return false;
  const auto& at = saf.attackers(*j);
  return std::find(at.begin(), at.end(), *i) != at.end();
}

using Fingerprints = std::set<std::set<std::string>>;

Fingerprints fingerprints(const std::vector<DdlExtension>& exts) {
  Fingerprints out;
  for (const auto& e : exts) {
    std::set<std::string> s;
    for (Formula l : e.fingerprint) s.insert(l.str());
    out.insert(s);
  }
  return out;
}

constexpr Semantics kSems[] = {Semantics::Grounded, Semantics::Complete, Semantics::Preferred};
constexpr Mode kModes[] = {Mode::Forall, Mode::Intersect};

bool subset(const Extension& a, const Extension& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Structural checks of criterion 11 for one framework.
void check_structure(Criterion& c, const Af& af, const std::string& where) {
  Extension grd = grounded(af);
  std::vector<Extension> cmp = complete(af);
  std::vector<Extension> prf = preferred(af);
  c.expect(!cmp.empty() && cmp.front() == grd, where + ": grounded is not the first complete extension");
  for (std::size_t k = 0; k < cmp.size(); ++k) {
    c.expect(subset(grd, cmp[k]), where + ": grounded not contained in complete " + std::to_string(k));
    c.expect(conflict_free(af, cmp[k]), where + ": complete " + std::to_string(k) + " not conflict-free");
    c.expect(is_complete(af, cmp[k]), where + ": complete " + std::to_string(k) + " not complete");
    if (k > 0) c.expect(cmp[k] != grd, where + ": grounded listed twice");
  }
  std::vector<Extension> maximal;
  for (const auto& e : cmp) {
    bool max = true;
    for (const auto& o : cmp)
      if (o != e && subset(e, o)) max = false;
    if (max) maximal.push_back(e);
  }
  std::sort(maximal.begin(), maximal.end());
  std::vector<Extension> p = prf;
  std::sort(p.begin(), p.end());
  c.expect(p == maximal, where + ": preferred differs from the maximal complete extensions");
  for (const auto& e : prf) c.expect(is_complete(af, e), where + ": preferred extension not complete");
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  GenConfig cfg;

  ok &= run(1, "Two-chain arguments and hypothetical sub-arguments", [&](Criterion& c) {
    GenResult r = generate_arguments(theory("ex1.at"), cfg);
    Argument a1 = def({prem("T")}, "d1", "p | q");
    Argument pc = def({def({def({prem("p")}, "d2", "p1")}, "d3", "p2")}, "d4", "r");
    Argument qc = def({def({prem("q")}, "d5", "q1")}, "d6", "r");
    Argument a2 = Argument::rbc(a1, {in_case("p", pc), in_case("q", qc)});
    Argument a3 = Argument::rbc(a1, {in_case("p", def({prem("p")}, "d2", "p1")),
                                     in_case("q", def({prem("q")}, "d5", "q1"))});
    c.expect(contains(r.arguments, a1), "A1 not generated");
    c.expect(contains(r.arguments, a2), "A2 not generated");
    c.expect(contains(r.arguments, a3), "A3 not generated");
    c.expect(a2.conclusion() == f("r"), "A2 does not conclude r");
    c.expect(a3.conclusion() == f("p1 | q1"), "A3 does not conclude p1 | q1");
    auto h = hypothetical_sub_arguments(a2);
    c.expect(h.size() == 2 && h[0] == in_case("p", pc) && h[1] == in_case("q", qc), "HSub(A2) differs");
  });

  ok &= run(2, "Inconsistent arguments filtered, s survives", [&](Criterion& c) {
    ArgTheory at = theory("ex2.at");
    ArgumentUniverse u = generate_unfiltered(at, cfg);
    GenResult r = generate_arguments(at, cfg);
    Argument a0 = def({prem("T")}, "d2", "p");
    Argument a1 = def({a0}, "d3", "!p");
    Argument a2 = strict({a0, a1}, "!s");
    Argument a3 = def({prem("T")}, "d1", "s");
    auto flag = [&](const Argument& a) -> int {
      for (const auto& e : u.entries)
        if (e.argument == a) return e.consistent ? 1 : 0;
      return -1;
    };
    c.expect(flag(a1) == 0, "A1 not classified inconsistent");
    c.expect(flag(a2) == 0, "A2 not classified inconsistent");
    c.expect(!contains(r.arguments, a1) && !contains(r.arguments, a2), "inconsistent argument in Arg");
    c.expect(contains(r.arguments, a3), "A3 missing");
    Saf saf = build_saf(at, cfg);
    for (Semantics s : kSems)
      for (Mode m : kModes)
        c.expect(holds(saf, s, m, "s"), std::string("s fails under ") + to_string(s) + "/" + to_string(m));
  });

  ok &= run(3, "Attack asymmetry through a case and skeptical consequences", [&](Criterion& c) {
    Saf saf = build_saf(theory("ex3.at"), cfg);
    Argument trig = def({prem("p")}, "d1", "q | r");
    SafNode a1{Argument::rbc(trig, {in_case("q", def({def({prem("q")}, "d2", "s")}, "d3", "v")),
                                    in_case("r", def({prem("r")}, "d4", "v"))}),
               std::nullopt};
    SafNode a2{def({prem("t")}, "d5", "!s"), std::nullopt};
    c.expect(saf.find(a1.argument, std::nullopt).has_value(), "A1 not in the SAF");
    c.expect(attacked_by(saf, a2, a1), "A2 does not attack A1");
    c.expect(!attacks(a1, a2) && !attacked_by(saf, a1, a2), "A1 attacks A2");
    c.expect(holds(saf, Semantics::Complete, Mode::Forall, "!s"), "!s not skeptical");
    c.expect(!holds(saf, Semantics::Complete, Mode::Forall, "v"), "v skeptical");
  });

  ok &= run(4, "Mutual hypothetical attack", [&](Criterion& c) {
    Saf saf = build_saf(theory("ex4.at"), cfg);
    Argument a0 = def({prem("p")}, "d1", "q | r");
    Argument qs1 = def({prem("q")}, "d2", "s1");
    SafNode a1{Argument::rbc(a0, {in_case("q", def({def({qs1}, "d3", "s2")}, "d4", "v")),
                                  in_case("r", def({prem("r")}, "d5", "v"))}),
               std::nullopt};
    SafNode a2{def({prem("q")}, "d6", "!s1"), f("q")};
    SafNode hs{qs1, f("q")};
    c.expect(directly_attacks(a2, hs) && directly_attacks(hs, a2), "no mutual direct attack");
    c.expect(attacked_by(saf, a2, hs) && attacked_by(saf, hs, a2), "mutual attack missing from the SAF");
    c.expect(attacked_by(saf, a2, a1), "A2 does not attack A1");
  });

  ok &= run(5, "AT1 and broken arm consequences", [&](Criterion& c) {
    Saf at1 = build_saf(theory("at1.at"), cfg);
    for (Semantics s : kSems)
      for (Mode m : kModes)
        c.expect(holds(at1, s, m, "r"), std::string("r fails under ") + to_string(s) + "/" + to_string(m));
    Saf arm = build_saf(theory("arm.at"), cfg);
    c.expect(holds(arm, Semantics::Complete, Mode::Forall, "l"), "l not skeptical in the arm theory");
  });

  ok &= run(6, "Disjunctive default logic extensions", [&](Criterion& c) {
    DdlTheory d1 = load_ddl(data("delta1.ddl"));
    c.expect(fingerprints(ddl_extensions(d1)) == Fingerprints{{"p", "r"}, {"q", "r"}}, "Delta1 extensions");
    c.expect(ddl_skeptical(d1, f("r")), "r not skeptical in Delta1");
    DdlTheory arm = load_ddl(data("delta_arm.ddl"));
    c.expect(fingerprints(ddl_extensions(arm)) == Fingerprints{{"l", "!r", "w"}, {"r", "w"}}, "arm extensions");
    c.expect(!ddl_skeptical(arm, f("l")), "l skeptical in the arm theory");
    Fingerprints d3{{"p", "t", "q", "s", "v"}, {"p", "t", "q", "!s"}, {"p", "t", "!s", "r", "v"}};
    for (const char* name : {"delta3.ddl", "delta3_alt.ddl"}) {
      DdlTheory t = load_ddl(data(name));
      c.expect(fingerprints(ddl_extensions(t)) == d3, std::string(name) + " extensions");
      c.expect(!ddl_skeptical(t, f("v")), std::string("v skeptical in ") + name);
    }
  });

  ok &= run(7, "gOR closure keeps v where reasoning by cases drops it", [&](Criterion& c) {
    GenConfig gcfg;
    gcfg.max_rule_applications = 6;
    gcfg.rbc_enabled = false;
    ArgTheory closed = gor_theory(theory("ex3.at"));
    auto rule_id = [&](const char* body, const char* head) {
      std::set<std::string> want;
      for (Formula d : top_disjuncts(f(body))) want.insert(d.str());
      for (const auto& rule : closed.rules()) {
        std::set<std::string> got;
        for (Formula d : top_disjuncts(rule.body[0])) got.insert(d.str());
        if (got == want && rule.head == f(head)) return rule.id;
      }
      return std::string();
    };
    std::string sv = rule_id("q | r", "s | v"), vv = rule_id("s | v", "v | v");
    c.expect(!sv.empty() && !vv.empty(), "closure lacks the rules A3 needs");
    if (sv.empty() || vv.empty()) return;
    Argument a3 = strict({def({def({def({prem("p")}, "d1", "q | r")}, sv, "s | v")}, vv, "v | v")}, "v");
    Saf saf = build_saf(closed, gcfg);
    auto i = saf.find(a3, std::nullopt);
    c.expect(i.has_value(), "A3 not constructed");
    if (i) c.expect(saf.attackers(*i).empty(), "A3 is attacked");

    Saf gor_not_r = build_saf(gor_theory(theory("ex3_not_r.at")), gcfg);
    Saf main_not_r = build_saf(theory("ex3_not_r.at"), cfg);
    c.expect(holds(gor_not_r, Semantics::Grounded, Mode::Forall, "v"), "v not derivable with gOR and !r");
    c.expect(!holds(main_not_r, Semantics::Complete, Mode::Forall, "v"), "main engine derives v with !r");
    c.expect(!holds(build_saf(theory("ex3.at"), cfg), Semantics::Complete, Mode::Forall, "v"),
             "main engine derives v");
  });

  // Criteria 8, 9 and 11 share the corpus SAFs.
  GenConfig ccfg = corpus_config();
  std::size_t inconclusive = 0, checked = 0, n_ext = 0, sampled = 0;
  Criterion c8(8, "Postulates over the random corpus");
  Criterion c9(9, "Hat construction over the random corpus");
  Criterion c11(11, "Structural invariants of emitted extensions");
  std::mt19937_64 rng(99);
  for (std::uint64_t k = 0; k < 200; ++k) {
    std::string where = "theory " + std::to_string(k);
    try {
      Saf saf = build_saf(corpus_theory(k), ccfg);
      Af af = Af::from_saf(saf);
      std::vector<Extension> exts = complete(af);
      n_ext += exts.size();
      for (const auto& r : check_postulates(saf, exts, ccfg)) {
        bool lemma = r.postulate.rfind("hat-", 0) == 0;
        Criterion& c = lemma ? c9 : c8;
        ++checked;
        if (r.verdict == Verdict::Inconclusive) ++inconclusive;
        c.expect(!r.failed(), where + " " + r.postulate + ": " + r.detail);
      }
      // Truth-table check of commitment equivalence on a sample of nodes.
      for (int s = 0; s < 20 && saf.size(); ++s) {
        const Argument& a = saf.node(rng() % saf.size()).argument;
        Formula d = dagger(a), dh = dagger(hat(a));
        c9.expect(oracle::entails({d}, dh) && oracle::entails({dh}, d), where + ": commitment of hat differs");
        ++sampled;
      }
      check_structure(c11, af, where);
    } catch (const std::exception& e) {
      c8.expect(false, where + ": " + e.what());
    }
  }
  std::ostringstream n8;
  n8 << "200 theories, " << n_ext << " complete extensions, " << checked << " reports, " << inconclusive
     << " inconclusive (budget)";
  c8.note(n8.str());
  c9.note(std::to_string(sampled) + " commitments checked by truth table");
  ok &= c8.report();
  ok &= c9.report();

  ok &= run(10, "Labelling semantics against exhaustive enumeration", [&](Criterion& c) {
    std::mt19937_64 grng(10);
    for (int i = 0; i < 100; ++i) {
      oracle::Graph g = oracle::random_graph(grng, 8);
      std::vector<std::pair<std::size_t, std::size_t>> edges(g.att.begin(), g.att.end());
      Af af = Af::from_edges(g.n, edges);
      std::vector<Extension> cmp = complete(af);
      std::sort(cmp.begin(), cmp.end());
      std::string where = "graph " + std::to_string(i);
      c.expect(grounded(af) == oracle::grounded(g), where + ": grounded");
      c.expect(cmp == oracle::all_complete(g), where + ": complete");
      c.expect(preferred(af) == oracle::all_preferred(g), where + ": preferred");
      check_structure(c11, af, where);
    }
  });

  for (const char* name : {"ex1.at", "ex2.at", "ex3.at", "ex3_not_r.at", "ex4.at", "at1.at", "arm.at", "at4.at"})
    check_structure(c11, Af::from_saf(build_saf(theory(name), cfg)), name);
  ok &= c11.report();

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << " in " << static_cast<int>(secs)
            << " s\n";
  return ok ? 0 : 1;
}
