#include <gtest/gtest.h>

#include "cllr/properties.hpp"
#include "cllr/syntax.hpp"

using namespace cllr;

namespace {

Term a(Term t) { return act("a", std::move(t)); }
Term b(Term t) { return act("b", std::move(t)); }
const Term O = Term::nil();

} // namespace

TEST(Parse, Conjunction) { EXPECT_EQ(parse("a.0 /\\ b.0"), Term::conj(a(O), b(O))); }

TEST(Parse, DivergentRecursion) {
  EXPECT_EQ(parse("<X | X = tau.X>"), Term::rec("X", RecSpec{{"X", tau(Term::var("X"))}}));
}

TEST(Parse, UnguardedRecursionRejected) {
  try {
    parse("<X | X = X [] a.0>");
    FAIL() << "expected GuardednessError";
  } catch (const GuardednessError &e) {
    EXPECT_EQ(e.variable(), "X");
    EXPECT_EQ(e.equation(), "X");
  }
}

TEST(Parse, UnboundSelectedVariable) { EXPECT_THROW(parse("<X | Y = a.Y>"), UnboundRecVar); }

TEST(Parse, DuplicateEquation) { EXPECT_THROW(parse("<X | X = a.X, X = b.X>"), ParseError); }

TEST(Parse, Precedence) {
  // prefix > /\ > \/ > [] > |[..]|
  Term t = parse("a.0 /\\ b.0 \\/ 0 [] bot |[a]| 0");
  Term expected = Term::parallel({"a"}, Term::ext_choice(Term::disj(Term::conj(a(O), b(O)), O), Term::bottom()), O);
  EXPECT_EQ(t, expected);
}

TEST(Parse, LeftAssociative) {
  EXPECT_EQ(parse("a.0 [] b.0 [] 0"), Term::ext_choice(Term::ext_choice(a(O), b(O)), O));
  EXPECT_EQ(parse("a.0 [] (b.0 [] 0)"), Term::ext_choice(a(O), Term::ext_choice(b(O), O)));
}

TEST(Parse, SyncSets) {
  EXPECT_EQ(parse("0 |[]| bot"), Term::parallel({}, O, Term::bottom()));
  EXPECT_EQ(parse("a.0 |[a, b]| a.0"), Term::parallel({"a", "b"}, a(O), a(O)));
  EXPECT_THROW(parse("0 |[tau]| 0"), ParseError);
}

TEST(Parse, MutualRecursion) {
  Term t = parse("<X | X = a.Y, Y = b.X>");
  EXPECT_EQ(t.kind(), Kind::Rec);
  EXPECT_EQ(t.name(), "X");
  EXPECT_EQ(t.spec().size(), 2u);
}

TEST(Parse, ErrorsCarrySpansAndExpectations) {
  try {
    parse("a.[]");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.span().start, 2u);
    EXPECT_LE(e.span().start, e.span().end);
    EXPECT_FALSE(e.expected().empty());
    EXPECT_FALSE(std::string(e.what()).empty());
  }
  for (const char *bad : {"", "(", "a.", "a.0 [] ", "<X | X = a.X", "0 |[a 0", "A.0", "a.0 )", "é.0", "12"})
    EXPECT_THROW(parse(bad), ParseError) << bad;
}

TEST(Parse, ReservedWords) {
  EXPECT_EQ(parse("tau.bot"), tau(Term::bottom()));
  EXPECT_THROW(parse("bot.0"), ParseError);
}

TEST(Parse, ShadowedNamesAreRenamed) {
  // Two distinct specifications binding X are kept apart.
  Term t = parse("<X | X = a.X> [] <X | X = b.X>");
  EXPECT_NE(t.left().name(), t.right().name());
  // Identical specifications keep a shared name.
  Term u = parse("<X | X = a.X> [] <X | X = a.X>");
  EXPECT_EQ(u.left(), u.right());
}

TEST(Parse, BinderDoesNotCaptureFreeName) {
  Term t = parse("X [] <X | X = a.X>");
  EXPECT_EQ(t.left(), Term::var("X"));
  EXPECT_NE(t.right().name(), "X");
}

TEST(Print, Examples) {
  EXPECT_EQ(print(Term::conj(a(O), b(O))), "a.0 /\\ b.0");
  EXPECT_EQ(print(Term::rec("X", RecSpec{{"X", tau(Term::var("X"))}})), "<X | X = tau.X>");
  EXPECT_EQ(print(Term::parallel({}, O, Term::bottom())), "0 |[]| bot");
}

TEST(Print, MinimalParentheses) {
  EXPECT_EQ(print(parse("(a.0 [] b.0) [] 0")), "a.0 [] b.0 [] 0");
  EXPECT_EQ(print(parse("a.0 [] (b.0 [] 0)")), "a.0 [] (b.0 [] 0)");
  EXPECT_EQ(print(parse("a.(b.0 \\/ 0)")), "a.(b.0 \\/ 0)");
  EXPECT_EQ(print(parse("(a.0 |[a]| 0) /\\ 0")), "(a.0 |[a]| 0) /\\ 0");
  EXPECT_EQ(print(parse("<X | X = a.Y, Y = b.X>")), "<X | X = a.Y, Y = b.X>");
}

TEST(RoundTrip, HandWritten) {
  for (const char *s : {"0", "bot", "tau.a.0", "a.0 \\/ b.0 \\/ c.0", "(a.0 \\/ b.0) /\\ c.0",
                        "<X | X = a.X /\\ a.0 \\/ X>", "<Y | Y = a.<Z | Z = b.Y [] c.Z>>",
                        "a.0 |[a]| (b.0 |[]| a.0)", "<X | X = a.Y, Y = tau.X \\/ bot>"}) {
    Term t = parse(s);
    EXPECT_EQ(parse(print(t)), t) << s;
  }
}

TEST(RoundTrip, Generated) {
  for (std::size_t i = 0; i < 1000; ++i) {
    GenConfig cfg;
    cfg.seed = trial_seed(5, i);
    cfg.max_depth = 5;
    Term t = gen_term(cfg);
    ASSERT_EQ(parse(print(t)), t) << print(t);
  }
}

TEST(RoundTrip, GeneratedOpenTerms) {
  for (std::size_t i = 0; i < 300; ++i) {
    GenConfig cfg;
    cfg.seed = trial_seed(6, i);
    Term t = gen_context(cfg, "H");
    ASSERT_EQ(parse(print(t)), t) << print(t);
  }
}

TEST(Totality, RandomTextNeverCrashes) {
  std::mt19937_64 rng(9);
  const std::string alphabet = "ab0X<>|[]()=.,/\\ taubot";
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    int len = static_cast<int>(rng() % 24);
    for (int k = 0; k < len; ++k)
      s += alphabet[rng() % alphabet.size()];
    try {
      Term t = parse(s);
      EXPECT_FALSE(find_unguarded(t).has_value()) << s;
    } catch (const Error &) {
    }
  }
}
