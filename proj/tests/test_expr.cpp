#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace tetra;
using namespace tetra::expr;

namespace {

const RingElem t = RingElem::t();

const LiftTable& lifts() {
  static const LiftTable l = fit_lifts();
  return l;
}

LoopElem u(int i, RingElem a = RingElem(1)) { return LoopElem::basis(i, std::move(a)); }

// Random trees covering every node kind. Numbers stay non-negative integers
// since "-3" reads back as a negation.
Expr random_expr(Sampler& rnd, int depth) {
  static const std::vector<std::string> symbols{"t", "t'", "t''", "u0", "u1", "u2", "v1", "x", "z", "X_03", "A_-2", "G_3", "K1"};
  static const std::vector<Perm4> perms{Perm4::phi(), Perm4::tau1(), Perm4::tau(), Perm4::parse("(0123)"),
                                        Perm4::identity()};
  if (depth == 0 || rnd.integer(0, 4) == 0) {
    if (rnd.integer(0, 2) == 0) return Expr::num(Rat(rnd.integer(0, 40)));
    return Expr::sym(symbols[static_cast<std::size_t>(rnd.integer(0, static_cast<int>(symbols.size()) - 1))]);
  }
  auto sub = [&] { return random_expr(rnd, depth - 1); };
  switch (rnd.integer(0, 9)) {
    case 0: return Expr::node(Kind::Add, {sub(), sub()});
    case 1: return Expr::node(Kind::Sub, {sub(), sub()});
    case 2: return Expr::node(Kind::Mul, {sub(), sub()});
    case 3: return Expr::node(Kind::Div, {sub(), sub()});
    case 4: return Expr::node(Kind::Neg, {sub()});
    case 5: return Expr::node(Kind::Pow, {sub()}, rnd.integer(-3, 5));
    case 6: return Expr::node(Kind::Bracket, {sub(), sub()});
    case 7: return Expr::node(Kind::AdPower, {sub(), sub()}, rnd.integer(0, 4));
    default: return Expr::apply(perms[static_cast<std::size_t>(rnd.integer(0, 4))], sub());
  }
}

// A loop-context expression as text, paired with its value computed on 2x2
// matrices over A.
struct Sample {
  std::string text;
  oracle::M2 value;
};

Sample random_loop_sample(Sampler& rnd, int depth) {
  static const std::vector<std::pair<std::string, RingElem>> scalars{
      {"t", t},
      {"t'", RingElem::t_prime()},
      {"t''", RingElem::t_dprime()},
      {"(t - 1)", t - RingElem(1)},
      {"(3/2)", RingElem(Rat(3, 2))},
      {"t^-2", t.inverse()->pow(2)},
      {"(1 - t)^-1", *(RingElem(1) - t).inverse()},
      {"(t^2 + 1)", t * t + RingElem(1)},
  };
  const auto u_mats = oracle::u_matrices();
  if (depth == 0 || rnd.integer(0, 3) == 0) {
    switch (rnd.integer(0, 5)) {
      case 0: return {"x", oracle::X()};
      case 1: return {"y", oracle::Y()};
      case 2: return {"z", oracle::Z()};
      default: {
        int i = rnd.integer(0, 2);
        return {"u" + std::to_string(i), u_mats[static_cast<std::size_t>(i)]};
      }
    }
  }
  auto sub = [&] { return random_loop_sample(rnd, depth - 1); };
  switch (rnd.integer(0, 5)) {
    case 0: {
      Sample a = sub(), b = sub();
      return {"(" + a.text + " + " + b.text + ")", a.value + b.value};
    }
    case 1: {
      Sample a = sub(), b = sub();
      return {"(" + a.text + " - " + b.text + ")", a.value - b.value};
    }
    case 2: {
      Sample a = sub();
      const auto& s = scalars[static_cast<std::size_t>(rnd.integer(0, static_cast<int>(scalars.size()) - 1))];
      // The last scalar is not a unit.
      if (rnd.integer(0, 1) || s.first == "(t^2 + 1)") return {s.first + "*" + a.text, a.value * s.second};
      return {a.text + "/" + s.first, a.value * *s.second.inverse()};
    }
    case 3: {
      Sample a = sub();
      return {"-" + a.text, a.value * RingElem(-1)};
    }
    case 4: {
      Sample a = sub(), b = sub();
      int n = rnd.integer(0, 2);
      oracle::M2 v = b.value;
      for (int k = 0; k < n; ++k) v = oracle::commutator(a.value, v);
      return {"ad(" + a.text + ")^" + std::to_string(n) + "(" + b.text + ")", v};
    }
    default: {
      Sample a = sub(), b = sub();
      return {"[" + a.text + ", " + b.text + "]", oracle::commutator(a.value, b.value)};
    }
  }
}

std::string parse_error_text(const std::string& s) {
  try {
    parse(s);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST(Parse, Shapes) {
  EXPECT_EQ(parse("[u0, u1]"), Expr::node(Kind::Bracket, {Expr::sym("u0"), Expr::sym("u1")}));
  EXPECT_EQ(parse("(123)(u0)"), Expr::apply(Perm4::phi(), Expr::sym("u0")));
  EXPECT_EQ(parse("tau1(u0)"), Expr::apply(Perm4::tau1(), Expr::sym("u0")));
  EXPECT_EQ(parse("(12)(30)(u2)"), Expr::apply(Perm4::tau1(), Expr::sym("u2")));
  EXPECT_EQ(parse("-t^2"), Expr::node(Kind::Neg, {Expr::node(Kind::Pow, {Expr::sym("t")}, 2)}));
  EXPECT_EQ(parse("1 - 2 - 3"),
            Expr::node(Kind::Sub, {Expr::node(Kind::Sub, {Expr::num(1), Expr::num(2)}), Expr::num(3)}));
  EXPECT_EQ(parse("ad(x)^3(y)"), Expr::node(Kind::AdPower, {Expr::sym("x"), Expr::sym("y")}, 3));
  EXPECT_EQ(parse("A_-1"), Expr::sym("A_-1"));
  EXPECT_EQ(parse("t''"), Expr::sym("t''"));
  EXPECT_EQ(parse("(12)"), Expr::num(12));
  const Expr applied_number = Expr::apply(Perm4::parse("(0123)"), Expr::num(33));
  EXPECT_EQ(render(applied_number), "(0123)((33))");
  EXPECT_EQ(parse(render(applied_number)), applied_number);
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error_text("[u0"), "parse error at position 3: expected ',', found end of input");
  try {
    parse("u0 +");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse("u0 # u1"), ParseError);
  EXPECT_THROW(parse("u0 u1"), ParseError);
  EXPECT_THROW(parse("(11)(u0)"), ParseError);
  EXPECT_THROW(parse("(5)(t)"), ParseError);
  EXPECT_THROW(parse("G_0"), UnknownSymbol);
  EXPECT_THROW(parse("X_22"), UnknownSymbol);
  EXPECT_THROW(parse("u3"), UnknownSymbol);
  EXPECT_THROW(parse("w"), UnknownSymbol);
  EXPECT_THROW(parse("[u0, u1, u2]"), ArityError);
  EXPECT_THROW(parse("tau(u0, u1)"), ArityError);
  EXPECT_THROW(parse("ad(u0, u1)^2(u2)"), ArityError);
}

TEST(Parse, RenderRoundTrip) {
  Sampler rnd(71);
  for (int i = 0; i < 500; ++i) {
    Expr e = random_expr(rnd, 4);
    const std::string s = render(e);
    Expr back;
    ASSERT_NO_THROW(back = parse(s)) << s;
    ASSERT_EQ(back, e) << s;
    ASSERT_EQ(render(parse(s)), s);
  }
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval_text("[u0,u1]"), "u2*(-t)");
  EXPECT_EQ(eval_text("(123)(u0)"), "u1");
  EXPECT_EQ(eval_text("[u1, u2*t]"), "u0*(1 - t)");
  EXPECT_EQ(eval_text("ad(u0*(t-1))^4(u1)"), "u1*(t^2 - 2*t^3 + t^4)");
  EXPECT_EQ(eval_text("t^2 * t^-2"), "1");
  EXPECT_EQ(eval_text("u0 - u0"), "0");
  EXPECT_EQ(eval_loop(parse("X_01")), psi(TetGen(0, 1)));
  EXPECT_EQ(eval_loop(parse("tau(u0)")), u(0, RingElem::t_prime()));
  EXPECT_EQ(eval_loop(parse("v0")), u(0, t - RingElem(1)));
  EXPECT_EQ(eval_text("[G_1, A_0]", Context::Onsager), eval_text("A_1 - A_-1", Context::Onsager));
  EXPECT_EQ(eval_text("[A_1, A_0]", Context::Onsager), eval_text("2*G_1", Context::Onsager));
  EXPECT_EQ(eval_text("[A_0, A_1]", Context::Onsager), eval_text("-2*G_1", Context::Onsager));
  EXPECT_EQ(eval_text("K0 + [X_01, X_23]", Context::Extension),
            (ExtElem::central(1, 0) + ext_bracket(lifts().X(0, 1), lifts().X(2, 3))).to_string());
}

TEST(Eval, ContextErrors) {
  EXPECT_THROW(eval_text("u0*u1"), ContextError);
  EXPECT_THROW(eval_text("u0/u1"), ContextError);
  EXPECT_THROW(eval_text("u0^2"), ContextError);
  EXPECT_THROW(eval_text("u0/(t^2 + 1)"), ContextError);
  EXPECT_THROW(eval_text("A_1"), ContextError);
  EXPECT_THROW(eval_text("K0"), ContextError);
  EXPECT_THROW(eval_text("u0", Context::Onsager), ContextError);
  EXPECT_THROW(eval_text("phi(v0)", Context::Onsager), ContextError);
  EXPECT_THROW(eval_text("v0/t", Context::Onsager), ContextError);
  EXPECT_THROW(eval_text("A_2001", Context::Onsager), ContextError);
  EXPECT_THROW(eval_text("t*(K0 + u1)", Context::Extension), ContextError);
  EXPECT_NO_THROW(eval_text("A_2000", Context::Onsager));
}

TEST(Eval, MatchesMatrixEvaluation) {
  Sampler rnd(72);
  for (int i = 0; i < 200; ++i) {
    Sample s = random_loop_sample(rnd, 3);
    ASSERT_EQ(oracle::matrix(eval_loop(parse(s.text))), s.value) << s.text;
  }
}

TEST(Eval, ContextsAgree) {
  Sampler rnd(73);
  const std::vector<std::string> onsager_exprs{"[v0, v1*t]", "ad(v1)^3(v2*(t^2 - 1))",
                                               "(t - 1)*[v2, v0] + v1"};
  for (const auto& s : onsager_exprs) {
    const Expr e = parse(s);
    EXPECT_EQ(embed(eval_onsager(e)), eval_loop(parse(render(e)))) << s;
  }
  // Scaling a bracket by a non-constant is refused in the extension, so those samples are skipped.
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    Sample s = random_loop_sample(rnd, 3);
    ExtElem x;
    try {
      x = eval_extension(parse(s.text));
    } catch (const ContextError&) {
      continue;
    }
    ASSERT_EQ(x.loop, eval_loop(parse(s.text))) << s.text;
    ++compared;
  }
  EXPECT_GE(compared, 50);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) {
        const std::string name = "X_" + std::to_string(i) + std::to_string(j);
        EXPECT_EQ(eval_extension(parse(name)).loop, eval_loop(parse(name)));
      }
}

TEST(Eval, Records) {
  Rendered r = evaluate(parse("u1*t + u2"), Context::Loop);
  EXPECT_EQ(r.text, "u1*(t) + u2");
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_EQ(r.records[0], (std::pair<std::string, std::string>{"u0", "0"}));
  EXPECT_EQ(r.records[1], (std::pair<std::string, std::string>{"u1", "t"}));
  EXPECT_EQ(r.records[2], (std::pair<std::string, std::string>{"u2", "1"}));
  Rendered o = evaluate(parse("G_1"), Context::Onsager);
  ASSERT_EQ(o.records.size(), 3u);
  EXPECT_EQ(o.records[0], (std::pair<std::string, std::string>{"v0", "4"}));
  Rendered k = evaluate(parse("K1*(-1/2) + u0"), Context::Extension);
  ASSERT_EQ(k.records.size(), 5u);
  EXPECT_EQ(k.records[4], (std::pair<std::string, std::string>{"K1", "-1/2"}));
  Rendered s = evaluate(parse("t/(t - 1)"), Context::Loop);
  ASSERT_EQ(s.records.size(), 1u);
  EXPECT_EQ(s.records[0].second, s.text);
}

TEST(Eval, RingText) {
  EXPECT_EQ(parse_ring("t'"), RingElem::t_prime());
  EXPECT_EQ(parse_ring("1/(1 - t)"), *(RingElem(1) - t).inverse());
  EXPECT_EQ(parse_poly("t^2 + 1"), (t * t + RingElem(1)).num());
  EXPECT_THROW(parse_poly("1/t"), ContextError);
  Sampler rnd(74);
  for (int i = 0; i < 100; ++i) {
    RingElem a = rnd.ring();
    ASSERT_EQ(parse_ring(a.to_string()), a) << a.to_string();
  }
}

TEST(IdealSpecText, RoundTripAndErrors) {
  for (const auto& q : {Poly::constant(1), (t - RingElem(2)).num(), (t * t + RingElem(1)).num()})
    for (const auto& s : enumerate_ideal_specs(q, {Rat(1), Rat(-1), Rat(2, 3)}))
      EXPECT_EQ(parse_ideal_spec(s.to_string()), s) << s.to_string();
  EXPECT_EQ(parse_ideal_spec("J=t-2; typeII eta=2/3").to_string(), "J=-2 + t; typeII eta=2/3");
  EXPECT_THROW(parse_ideal_spec("J=t; typeII eta=0"), Error);
  EXPECT_THROW(parse_ideal_spec("J=t; typeI eps=0,delta=0,eps'=1"), Error);
  EXPECT_THROW(parse_ideal_spec("J=1/t; typeII eta=1"), Error);
  EXPECT_THROW(parse_ideal_spec("J=t typeII eta=1"), Error);
  EXPECT_THROW(parse_ideal_spec("J=t; typeIII"), Error);
  EXPECT_THROW(parse_ideal_spec("J=t; typeI eps=2,eps'=1"), Error);
}
