#include <gtest/gtest.h>

#include <random>

#include "nondec/errors.hpp"
#include "nondec/solvers.hpp"
#include "nondec/spaces.hpp"
#include "nondec/verifiers.hpp"

using namespace nondec;

namespace {

const std::string kFiveCycle = "a,b b,p p,q q,r r,a";

std::string printable_ascii() {
  std::string out;
  for (int c = 32; c <= 126; ++c) out += static_cast<char>(c);
  return out;
}

}  // namespace

TEST(Verify, Examples) {
  Verifier ham = verifier_for(ProblemId::HamCycle);
  EXPECT_EQ(verify(ham, "a,b b,c c,a", "a,b,c", ""), "yes");
  EXPECT_EQ(verify(ham, "a,b b,c c,a", "a,c", ""), "no");
  EXPECT_EQ(verify(ham, "a,b b,c c,a", "a,c,b", ""), "no");

  Verifier edge = verifier_for(ProblemId::HamCycleEdge);
  EXPECT_EQ(verify(edge, kFiveCycle, "a,b", "p,q,r"), "yes");
  EXPECT_EQ(verify(edge, kFiveCycle, "a,b", ""), "no");
  EXPECT_EQ(verify(edge, kFiveCycle, "a,b", "r,q,p"), "no");

  EXPECT_EQ(verify(verifier_for(ProblemId::Factor), "35", "7", ""), "yes");
  EXPECT_EQ(verify(verifier_for(ProblemId::Factor), "35", "6", ""), "no");
  EXPECT_EQ(verify(verifier_for("Sat"), "x,!y y,z", "x=1 y=1 z=1", ""), "yes");
  EXPECT_EQ(verify(verifier_for("SatD"), "x,!y y,z", "yes", "x=1 y=1 z=1"), "yes");
  EXPECT_EQ(verify(verifier_for("SatD"), "x,!y y,z", "yes", ""), "no");
  EXPECT_THROW(verifier_for("Banana"), UnknownProblem);
}

TEST(Verify, TimeoutRaises) {
  EXPECT_THROW(verify(verifier_for(ProblemId::HamCycle), "a,b b,c c,a", "a,b,c", "", StepBudget{2}),
               VerifierTimeout);
}

// 29 is prime: no s, h of up to four printable bytes is ever accepted. The
// axiom checker covers the whole space through prefix pruning.
TEST(Verify, FactorRejectsEverythingOnPrime) {
  AxiomOptions options;
  options.string_bound = 4;
  options.alphabet = printable_ascii();
  auto report = check_verifier_axioms(verifier_for(ProblemId::Factor), ProblemId::Factor, {"29"},
                                      options);
  EXPECT_TRUE(report.passed()) << report.to_records();
  EXPECT_TRUE(report.axiom2_violations.empty());
  for (const std::string s : {"29", "1", "0", "no", "29 ", "2"}) {
    for (const std::string h : {"", "1", "abcd"}) {
      EXPECT_EQ(verify(verifier_for(ProblemId::Factor), "29", s, h), "no");
    }
  }
}

TEST(Verify, SatDRejectsUnsatisfiable) {
  AxiomOptions options;
  options.string_bound = 8;
  options.alphabet = printable_ascii();
  options.max_runs_per_instance = 20'000'000;
  // Only s = "yes" can pass the first check; hints are then searched in full.
  auto report = check_verifier_axioms(verifier_for(ProblemId::SatD), ProblemId::SatD, {"x !x"},
                                      options);
  EXPECT_TRUE(report.passed()) << report.to_records();
  for (const std::string h : {"", "x=0", "x=1", "x=1 ", "yes"}) {
    EXPECT_EQ(verify(verifier_for(ProblemId::SatD), "x !x", "yes", h), "no");
  }
}

TEST(Axioms, ShippedVerifiersPassSmallSpaces) {
  struct Case {
    ProblemId p;
    InstanceSpace space;
  };
  std::vector<Case> cases = {
      {ProblemId::HamCycle, all_graphs(4, false)},
      {ProblemId::HamCycleD, all_graphs(4, false)},
      {ProblemId::HamCycleEdge, all_graphs(4, false)},
      {ProblemId::DirectedHamCycle, all_graphs(3, true)},
      {ProblemId::DirectedHamCycleD, all_graphs(3, true)},
      {ProblemId::Factor, naturals(0, 60)},
      {ProblemId::FactorD, naturals(0, 40)},
      {ProblemId::FactorInRangeD, {"35 2 34", "35 6 34", "29 2 28", "12 5 5", "4 2 2", "9 3 3"}},
      {ProblemId::Sat, all_cnfs(2, 2)},
      {ProblemId::SatD, all_cnfs(2, 2)},
  };
  for (const auto& c : cases) {
    auto report = check_verifier_axioms(verifier_for(c.p), c.p, c.space);
    EXPECT_TRUE(report.passed()) << to_string(c.p) << "\n" << report.to_records();
    EXPECT_EQ(report.instances, c.space.size());
    EXPECT_GT(report.verifier_runs, 0u);
  }
}

TEST(Axioms, ExampleBoundsForHamCycleAndFactor) {
  AxiomOptions ham;
  ham.string_bound = 8;
  auto r1 = check_verifier_axioms(verifier_for(ProblemId::HamCycle), ProblemId::HamCycle,
                                  all_graphs(4, false), ham);
  EXPECT_TRUE(r1.passed());
  AxiomOptions factor;
  factor.string_bound = 3;
  factor.alphabet = "0123456789";
  auto r2 = check_verifier_axioms(verifier_for(ProblemId::Factor), ProblemId::Factor,
                                  naturals(0, 60), factor);
  EXPECT_TRUE(r2.passed()) << r2.to_records();
}

TEST(Axioms, StrictModeOnShippedVerifiers) {
  AxiomOptions options;
  options.strict = true;
  for (auto p : {ProblemId::HamCycle, ProblemId::HamCycleEdge}) {
    auto report = check_verifier_axioms(verifier_for(p), p, all_graphs(4, false), options);
    EXPECT_TRUE(report.passed()) << report.to_records();
  }
  auto sat = check_verifier_axioms(verifier_for(ProblemId::Sat), ProblemId::Sat, all_cnfs(2, 2),
                                   options);
  EXPECT_TRUE(sat.passed());
}

TEST(Axioms, PartialCycleFailsAxiomThree) {
  Verifier v = adversarial_verifier("partial-cycle-as-solution");
  EXPECT_EQ(verify(v, "a,b b,c c,a", "a,b", ""), "yes");
  EXPECT_FALSE(check_solution(ProblemId::HamCycle, "a,b b,c c,a", "a,b"));
  auto report = check_verifier_axioms(v, ProblemId::HamCycle, all_graphs(4, false));
  EXPECT_FALSE(report.passed());
  ASSERT_FALSE(report.axiom3_violations.empty());
  bool triangle = false;
  for (const auto& r : report.axiom3_violations) {
    EXPECT_EQ(verify(v, r.instance, r.s, r.h), "yes");
    EXPECT_FALSE(check_solution(ProblemId::HamCycle, r.instance, r.s));
    triangle = triangle || (r.instance == "a,b a,c b,c" && r.s == "a,b");
  }
  EXPECT_TRUE(triangle);
}

TEST(Axioms, AcceptsNegativeFailsAxiomTwo) {
  Verifier v = adversarial_verifier("accepts-negative");
  auto report = check_verifier_axioms(v, ProblemId::HamCycle, all_graphs(4, false));
  EXPECT_FALSE(report.passed());
  ASSERT_FALSE(report.axiom2_violations.empty());
  EXPECT_EQ(report.axiom2_violations.front().instance, "");
}

TEST(Axioms, RejectsEverythingFailsAxiomOne) {
  Verifier v = adversarial_verifier("rejects-everything");
  auto report = check_verifier_axioms(v, ProblemId::HamCycle, all_graphs(4, false));
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(report.axiom1_failures.empty());
  EXPECT_TRUE(report.axiom3_violations.empty());
  EXPECT_EQ(adversarial_kinds().size(), 3u);
  EXPECT_THROW(adversarial_verifier("nope"), UnknownKind);
}

TEST(Axioms, RecordsFormat) {
  auto report = check_verifier_axioms(adversarial_verifier("accepts-negative"), ProblemId::HamCycle,
                                      {"", "a,b b,c c,a"});
  std::string text = report.to_records();
  EXPECT_EQ(text.rfind("# axiom\tinstance\ts\th\tverdict\n", 0), 0u);
  EXPECT_NE(text.find("\n1\ta,b b,c c,a\ta,b,c\t\tyes\n"), std::string::npos) << text;
  EXPECT_NE(text.find("\n2\t\t\t\tyes\n"), std::string::npos) << text;
}

TEST(Axioms, ParallelMatchesSequential) {
  AxiomOptions seq, par;
  par.threads = 4;
  Verifier v = adversarial_verifier("partial-cycle-as-solution");
  auto a = check_verifier_axioms(v, ProblemId::HamCycle, all_graphs(4, false), seq);
  auto b = check_verifier_axioms(v, ProblemId::HamCycle, all_graphs(4, false), par);
  EXPECT_EQ(a.to_records(), b.to_records());
  EXPECT_EQ(a.verifier_runs, b.verifier_runs);
}

TEST(Axioms, SearchSpaceCeiling) {
  AxiomOptions options;
  options.max_runs_per_instance = 10;
  EXPECT_THROW(check_verifier_axioms(verifier_for(ProblemId::HamCycle), ProblemId::HamCycle,
                                     {"a,b a,c a,d b,c b,d c,d"}, options),
               SearchSpaceTooLarge);
}

// Whenever a shipped verifier says yes, s is a solution.
TEST(Properties, AcceptanceImpliesSolution) {
  std::mt19937_64 rng(99);
  struct Case {
    ProblemId p;
    InstanceSpace space;
  };
  std::vector<Case> cases = {
      {ProblemId::HamCycle, all_graphs(5, false)},
      {ProblemId::HamCycleEdge, all_graphs(5, false)},
      {ProblemId::Factor, naturals(0, 500)},
      {ProblemId::Sat, all_cnfs(3, 2)},
  };
  for (const auto& c : cases) {
    std::uniform_int_distribution<std::size_t> pick(0, c.space.size() - 1);
    for (int i = 0; i < 3000; ++i) {
      const std::string& w = c.space[pick(rng)];
      std::string alphabet = default_alphabet(c.p, w);
      std::uniform_int_distribution<std::size_t> ch(0, alphabet.size() - 1);
      std::uniform_int_distribution<int> len(0, 9);
      // Half the time start from a real solution and mutate one byte.
      std::string s;
      SolutionSet f = enumerate_solutions(c.p, w);
      if (i % 2 == 0 && !f.is_negative()) {
        s = *std::next(f.begin(), static_cast<long>(rng() % f.size()));
        if (!s.empty() && i % 4 == 0) s[rng() % s.size()] = alphabet[ch(rng)];
      } else {
        for (int k = len(rng); k > 0; --k) s += alphabet[ch(rng)];
      }
      std::string h;
      for (int k = len(rng); k > 0; --k) h += alphabet[ch(rng)];
      for (const auto& hint : {h, std::string()}) {
        if (verify(verifier_for(c.p), w, s, hint) == "yes") {
          ASSERT_TRUE(check_solution(c.p, w, s)) << w << " | " << s << " | " << hint;
        }
      }
    }
  }
}

// Factor, HamCycle and Sat verifiers never look at h.
TEST(Properties, HintIrrelevance) {
  auto hints = all_strings("ab,=1 ", 3);
  struct Case {
    ProblemId p;
    InstanceSpace space;
    std::vector<std::string> extra;
  };
  std::vector<Case> cases = {
      {ProblemId::Factor, naturals(0, 40), {"5", "7", "2", "no", ""}},
      {ProblemId::HamCycle, all_graphs(4, false), {"a,b,c", "a,b,c,d", "a,c,b,d", "no"}},
      {ProblemId::Sat, all_cnfs(2, 1), {"a=1", "a=0 b=1", "", "no"}},
  };
  for (const auto& c : cases) {
    Verifier v = verifier_for(c.p);
    for (const auto& w : c.space) {
      std::vector<std::string> candidates = c.extra;
      for (const auto& s : enumerate_solutions(c.p, w)) candidates.push_back(s);
      for (const auto& s : candidates) {
        std::string first = verify(v, w, s, "");
        for (const auto& h : hints) ASSERT_EQ(verify(v, w, s, h), first) << w << " " << s << " " << h;
        VerifierRun r = run_verifier(v, w, s, "zz");
        EXPECT_EQ(r.h_observed, 0u);
      }
    }
  }
}
