#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace tetra;

namespace {

const RingElem t = RingElem::t();

LoopElem u(int i, RingElem a = RingElem(1)) { return LoopElem::basis(i, std::move(a)); }
LoopElem x_of(const RingElem& a) { return xyz_to_u(XYZElem{a, RingElem(), RingElem()}); }

const LiftTable& lifts() {
  static const LiftTable l = fit_lifts();
  return l;
}

ExtElem charge(int i, int j) { return lifts().C(i, j).elem(); }

}  // namespace

TEST(Cocycle, Examples) {
  EXPECT_EQ(cocycle(x_of(RingElem(1)), x_of(RingElem(1))).to_string(), "(0, 0)");
  CentralCharge c = cocycle(x_of(*t.inverse()), x_of(t));
  EXPECT_EQ(c.c0, 2);
  EXPECT_EQ(c.c1, 0);
  EXPECT_EQ(c.c_inf(), -2);
  CentralCharge d = cocycle(u(1), u(1, t));
  CentralCharge e = oracle::cocycle(u(1), u(1, t));
  EXPECT_EQ(d.c0, e.c0);
  EXPECT_EQ(d.c1, e.c1);
}

TEST(Cocycle, MatchesMatrixTraceResidue) {
  Sampler rnd(51);
  for (int i = 0; i < 100; ++i) {
    LoopElem x = rnd.loop(3, 2), y = rnd.loop(3, 2);
    CentralCharge a = cocycle(x, y), b = oracle::cocycle(x, y);
    ASSERT_EQ(a.c0, b.c0) << x << " | " << y;
    ASSERT_EQ(a.c1, b.c1) << x << " | " << y;
  }
}

TEST(Cocycle, AntisymmetricAndClosed) {
  Sampler rnd(52);
  for (int i = 0; i < 100; ++i) {
    LoopElem x = rnd.loop(2, 2), y = rnd.loop(2, 2), z = rnd.loop(2, 2);
    CentralCharge a = cocycle(x, y), b = cocycle(y, x);
    ASSERT_EQ(a.c0 + b.c0, 0);
    ASSERT_EQ(a.c1 + b.c1, 0);
    CentralCharge j1 = cocycle(bracket(x, y), z), j2 = cocycle(bracket(y, z), x), j3 = cocycle(bracket(z, x), y);
    ASSERT_EQ(j1.c0 + j2.c0 + j3.c0, 0);
    ASSERT_EQ(j1.c1 + j2.c1 + j3.c1, 0);
  }
}

TEST(ExtBracket, CenterIsCentral) {
  Sampler rnd(53);
  for (int i = 0; i < 20; ++i) {
    ExtElem y{rnd.loop(3, 2), rnd.rational(), rnd.rational()};
    EXPECT_TRUE(ext_bracket(ExtElem::central(1, 0), y).is_zero());
    EXPECT_TRUE(ext_bracket(y, ExtElem::central(0, 1)).is_zero());
  }
}

TEST(ExtBracket, Text) {
  EXPECT_EQ(ExtElem::central(1, 0).to_string(), "K0");
  EXPECT_EQ(ExtElem::central(0, Rat(-1, 2)).to_string(), "K1*(-1/2)");
  EXPECT_EQ((ExtElem{u(1)} + ExtElem::central(2, 1)).to_string(), "u1 + K0*(2) + K1");
  EXPECT_EQ(ExtElem().to_string(), "0");
}

TEST(Lifts, FitSucceedsWithRecordedCharges) {
  const LiftTable& l = lifts();
  EXPECT_EQ(l.C(1).to_string(), "(0, -1)");
  EXPECT_EQ(l.C(2).to_string(), "(1, 0)");
  EXPECT_EQ(l.C(3).to_string(), "(-1, 1)");
  EXPECT_EQ(partition_name(1), "01|23");
  EXPECT_EQ(partition_name(2), "02|13");
  EXPECT_EQ(partition_name(3), "03|12");
  EXPECT_EQ(partition_of(2, 3), 1);
  EXPECT_EQ(partition_of(3, 1), 2);
  for (const auto& [ij, x] : l.lift) EXPECT_EQ(x.loop, psi(TetGen(ij.first, ij.second)));
}

TEST(Lifts, RelationsHoldExactly) {
  const LiftTable& l = lifts();
  const ExtElem zero;
  EXPECT_EQ(charge(0, 1) + charge(0, 2) + charge(0, 3), zero);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) {
        EXPECT_EQ(l.X(i, j) + l.X(j, i), charge(i, j));
      }
  int quads = 0;
  for (int h = 0; h < 4; ++h)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          if (h == i || h == j || h == k || i == j || i == k || j == k) continue;
          ExtElem ab = ext_bracket(l.X(h, i), l.X(j, k));
          EXPECT_EQ(ext_bracket(l.X(h, i), ext_bracket(l.X(h, i), ab)), ab * Rat(4));
          ++quads;
        }
  EXPECT_EQ(quads, 24);
  Report r = verify_extension(l);
  EXPECT_TRUE(r.all_pass()) << r.to_string();
}

TEST(Lifts, YGenerators) {
  auto y = y_generators(lifts());
  EXPECT_TRUE((y.at({1, 2}) + y.at({2, 1})).is_zero());
  EXPECT_EQ(ext_bracket(y.at({0, 1}), y.at({1, 2})), (y.at({0, 1}) + y.at({1, 2})) * Rat(2) - charge(0, 2));
  // (12): the odd permutation flips the sign of the charge.
  EXPECT_EQ(ext_bracket(y.at({0, 2}), y.at({2, 1})), (y.at({0, 2}) + y.at({2, 1})) * Rat(2) + charge(0, 1));
  for (const auto& s : Perm4::all()) {
    const ExtElem& a = y.at({s(0), s(1)});
    const ExtElem& b = y.at({s(1), s(2)});
    EXPECT_EQ(ext_bracket(a, b), (a + b) * Rat(2) - charge(s(0), s(2)) * Rat(s.parity())) << s.to_string();
  }
}

TEST(Lifts, HatU) {
  auto hat = hat_u_generators(lifts());
  for (int i = 0; i < 3; ++i) EXPECT_EQ(hat[static_cast<std::size_t>(i)].loop, u(i));
}

TEST(ExtensionAction, LiftsMoveWithSignedCharges) {
  const LiftTable& l = lifts();
  const Perm4 even = Perm4::phi(), odd = Perm4::tau();
  EXPECT_EQ(s4_ext_apply(even, l.X(0, 1), l), l.X(even(0), even(1)));
  EXPECT_EQ(s4_ext_apply(odd, l.X(0, 1), l), l.X(odd(0), odd(1)) - charge(odd(0), odd(1)));
  for (const auto& s : Perm4::all()) {
    ExtElem sum;
    for (int p = 1; p <= 3; ++p) sum = sum + s4_ext_apply(s, l.C(p).elem(), l);
    EXPECT_TRUE(sum.is_zero()) << s.to_string();
    for (int p = 1; p <= 3; ++p)
      EXPECT_EQ(s4_ext_apply(s, l.C(p).elem(), l), charge(s(0), s(p)) * Rat(s.parity())) << s.to_string();
  }
}

TEST(ExtensionAction, AutomorphismsFormAnAction) {
  const LiftTable& l = lifts();
  Sampler rnd(54);
  const auto all = Perm4::all();
  for (int i = 0; i < 24; ++i) {
    const Perm4& p = all[static_cast<std::size_t>(i)];
    const Perm4& q = all[static_cast<std::size_t>(rnd.integer(0, 23))];
    ExtElem x{rnd.loop(2, 1), rnd.rational(), rnd.rational()}, y{rnd.loop(2, 1), rnd.rational(), rnd.rational()};
    ASSERT_EQ(s4_ext_apply(p, ext_bracket(x, y), l), ext_bracket(s4_ext_apply(p, x, l), s4_ext_apply(p, y, l)))
        << p.to_string();
    ASSERT_EQ(s4_ext_apply(p * q, x, l), s4_ext_apply(p, s4_ext_apply(q, x, l), l)) << p.to_string();
    ASSERT_EQ(s4_ext_apply(p, x, l).loop, apply(p, x.loop));
  }
}

TEST(ExtensionSuite, LibraryChecksPass) {
  for (const auto& rep : run_suites("extension")) EXPECT_TRUE(rep.all_pass()) << rep.to_string();
}
