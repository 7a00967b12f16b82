#include <gtest/gtest.h>

#include "cllr/properties.hpp"
#include "cllr/syntax.hpp"

using namespace cllr;

TEST(Generator, Deterministic) {
  GenConfig cfg;
  cfg.seed = 1;
  cfg.max_depth = 3;
  EXPECT_EQ(gen_term(cfg), gen_term(cfg));
  GenConfig other = cfg;
  other.seed = 2;
  bool differs = false;
  for (std::uint64_t s = 2; s < 10 && !differs; ++s) {
    other.seed = s;
    differs = gen_term(other) != gen_term(cfg);
  }
  EXPECT_TRUE(differs);
}

TEST(Generator, ClosedGuardedNormalized) {
  for (std::size_t i = 0; i < 1000; ++i) {
    GenConfig cfg;
    cfg.seed = trial_seed(31, i);
    Term t = gen_term(cfg);
    EXPECT_TRUE(is_closed(t)) << print(t);
    EXPECT_FALSE(find_unguarded(t).has_value()) << print(t);
    EXPECT_EQ(normalize(t), t);
  }
}

TEST(Generator, MostSamplesBuildWithinDefaultLimits) {
  for (int depth = 1; depth <= 5; ++depth) {
    std::size_t ok = 0, n = 300;
    for (std::size_t i = 0; i < n; ++i) {
      GenConfig cfg;
      cfg.seed = trial_seed(32, i);
      cfg.max_depth = depth;
      try {
        build_lts(gen_term(cfg));
        ++ok;
      } catch (const StateBoundExceeded &) {
      }
    }
    EXPECT_GE(ok * 100, n * 95) << "depth " << depth;
  }
}

TEST(Generator, ContextsContainTheHole) {
  for (std::size_t i = 0; i < 300; ++i) {
    GenConfig cfg;
    cfg.seed = trial_seed(33, i);
    Term c = gen_context(cfg, "H");
    EXPECT_EQ(free_vars(c), VarSet{"H"}) << print(c);
    EXPECT_FALSE(find_unguarded(c).has_value());
  }
}

TEST(Generator, BodiesAreStronglyGuardedAndConjunctionFree) {
  for (std::size_t i = 0; i < 300; ++i) {
    GenConfig cfg;
    cfg.seed = trial_seed(34, i);
    Term b = gen_body(cfg, "Z");
    VarStatus st = variable_status(b, "Z");
    EXPECT_TRUE(st.free);
    EXPECT_TRUE(st.strongly_guarded) << print(b);
    EXPECT_FALSE(st.in_conjunction_scope) << print(b);
    EXPECT_EQ(print(b).find("/\\"), std::string::npos);
  }
}

TEST(Shrink, ReducesToMinimalWitness) {
  Term big = parse("a.(b.0 [] c.bot) \\/ (a.0 |[a]| tau.b.0)");
  auto has_bot = [](const Term &t) { return print(t).find("bot") != std::string::npos; };
  Term small = shrink(big, has_bot);
  EXPECT_EQ(small, Term::bottom());
  auto is_big = [](const Term &t) { return degree(t) > 100; };
  EXPECT_EQ(shrink(big, is_big), big);
}

TEST(FLaws, Examples) {
  auto f = [](const std::string &s) {
    Lts l = build_lts(parse(s));
    return l.in_f(l.root());
  };
  EXPECT_FALSE(f("bot \\/ 0"));
  EXPECT_TRUE(f("bot [] 0"));
  EXPECT_EQ(f("a.bot"), f("bot"));
}

TEST(FLaws, Sampled) {
  GenConfig cfg;
  cfg.seed = 41;
  auto r = check_f_laws(cfg, 200);
  EXPECT_TRUE(r.pass()) << report_to_json(r).dump(2);
  EXPECT_EQ(r.trials, 200u);
}

TEST(Precongruence, Examples) {
  EXPECT_TRUE(refines(parse("c.a.0"), parse("c.(a.0 \\/ b.0)")).holds);
  Term p = parse("tau.a.0"), q = parse("a.0");
  Term ctx = parse("H /\\ a.0");
  EXPECT_TRUE(equivalent(substitute(ctx, "H", p), substitute(ctx, "H", q)));
  for (std::size_t i = 0; i < 50; ++i) {
    GenConfig cfg;
    cfg.seed = trial_seed(42, i);
    Term c = gen_context(cfg, "H");
    Term x = normalize(substitute(c, "H", parse("a.0 \\/ b.0")));
    try {
      EXPECT_TRUE(refines(x, x).holds);
    } catch (const StateBoundExceeded &) {
    }
  }
}

TEST(Precongruence, Sampled) {
  GenConfig cfg;
  cfg.seed = 43;
  auto r = check_precongruence(cfg, 150);
  EXPECT_TRUE(r.pass()) << report_to_json(r).dump(2);
  EXPECT_LE(r.skipped * 10, r.trials);
}

TEST(UniqueSolution, StrongGuard) {
  GenConfig cfg;
  auto r = check_unique_solution(parse("a.X"), "X", cfg, {Term::bottom()});
  EXPECT_TRUE(r.pass()) << report_to_json(r).dump(2);
  EXPECT_TRUE(r.unmet_preconditions.empty());
  Lts l = build_lts(parse("<X | X = a.X>"));
  EXPECT_FALSE(l.in_f(l.root()));
}

TEST(UniqueSolution, WeakGuardIsNotUnique) {
  GenConfig cfg;
  auto r = check_unique_solution(parse("tau.X"), "X", cfg, {parse("a.0"), parse("0")});
  ASSERT_FALSE(r.unmet_preconditions.empty());
  EXPECT_NE(r.unmet_preconditions.front().find("strongly guarded"), std::string::npos);
  bool non_unique = false;
  for (const auto &n : r.notes)
    non_unique = non_unique || n.rfind("non-unique", 0) == 0;
  EXPECT_TRUE(non_unique);
  EXPECT_TRUE(r.pass());
}

TEST(UniqueSolution, UnfoldingCandidate) {
  GenConfig cfg;
  Term body = parse("a.X \\/ b.0");
  Term rec = normalize(Term::rec("X", RecSpec{{"X", body}}));
  Term unfolded = unfold_rec(rec);
  auto r = check_unique_solution(body, "X", cfg, {unfolded});
  EXPECT_TRUE(r.pass()) << report_to_json(r).dump(2);
  EXPECT_TRUE(equivalent(unfolded, rec));
}

TEST(UniqueSolution, ConjunctionScopeIsInformational) {
  GenConfig cfg;
  auto r = check_unique_solution(parse("a.X /\\ a.X"), "X", cfg);
  EXPECT_FALSE(r.unmet_preconditions.empty());
  EXPECT_TRUE(r.pass());
}

TEST(UniqueSolution, Sampled) {
  GenConfig cfg;
  cfg.seed = 44;
  auto r = check_unique_solution_sampled(cfg, 60);
  EXPECT_TRUE(r.pass()) << report_to_json(r).dump(2);
}

TEST(Unfolding, Examples) {
  EXPECT_TRUE(equivalent(parse("<X | X = a.X>"), parse("a.<X | X = a.X>")));
  EXPECT_TRUE(unfold_one(parse("a.0 [] b.0")).empty());
}

TEST(Unfolding, Sampled) {
  GenConfig cfg;
  cfg.seed = 45;
  auto r = check_unfolding_equiv(cfg, 200);
  EXPECT_TRUE(r.pass()) << report_to_json(r).dump(2);
}

TEST(Reports, JsonAndBaseline) {
  TheoremReport r;
  r.theorem = "x";
  r.trials = 3;
  r.skip("StateBoundExceeded");
  r.fail({"a.0"}, "o", "e");
  auto j = report_to_json(r);
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["skipped"], 1);
  EXPECT_EQ(j["failures"][0]["inputs"][0], "a.0");
  auto b = parse_baseline(nlohmann::json::parse(R"([{"theorem":"f-laws","seed":7,"trials":5}])"));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].seed, 7u);
  auto rep = run_theorem(b[0].theorem, GenConfig{b[0].seed}, b[0].trials);
  EXPECT_EQ(rep.trials, 5u);
  EXPECT_THROW(run_theorem("nope", GenConfig{}, 1), std::invalid_argument);
}

TEST(Reports, DeterministicAcrossRuns) {
  GenConfig cfg;
  cfg.seed = 46;
  EXPECT_EQ(report_to_json(check_precongruence(cfg, 20)), report_to_json(check_precongruence(cfg, 20)));
}
