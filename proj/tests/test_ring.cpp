#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace tetra;
using oracle::at;

namespace {

const RingElem t = RingElem::t();
const RingElem tp = RingElem::t_prime();
const RingElem tpp = RingElem::t_dprime();
const RingElem one(1);

RingElem inv(const RingElem& x) { return *x.inverse(); }

mpz_class binom(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Res_0 of p / (t^a (t-1)^b): coefficient of t^(a-1) in p(t) (t-1)^(-b), with
// (t-1)^(-b) = (-1)^b sum_n C(n+b-1, b-1) t^n.
Rat res0(const RingElem& x) {
  const unsigned a = x.den_t(), b = x.den_t1();
  if (a == 0) return 0;
  Rat r = 0;
  for (unsigned k = 0; k < a; ++k) {
    const unsigned n = a - 1 - k;
    Rat series = b == 0 ? Rat(n == 0 ? 1 : 0) : Rat(binom(n + b - 1, b - 1)) * (b % 2 ? -1 : 1);
    r += x.num().coeff(k) * series;
  }
  return r;
}

// Res_1 via s = t - 1: p(s+1) / (s^b (1+s)^a) with (1+s)^(-a) = sum_n (-1)^n C(n+a-1, a-1) s^n.
Rat res1(const RingElem& x) {
  const unsigned a = x.den_t(), b = x.den_t1();
  if (b == 0) return 0;
  std::vector<Rat> shifted(x.num().coeffs().size(), Rat(0));
  for (std::size_t k = 0; k < x.num().coeffs().size(); ++k)
    for (std::size_t j = 0; j <= k; ++j)
      shifted[j] += x.num().coeffs()[k] * Rat(binom(static_cast<unsigned>(k), static_cast<unsigned>(j)));
  Rat r = 0;
  for (unsigned k = 0; k < b && k < shifted.size(); ++k) {
    const unsigned n = b - 1 - k;
    Rat series = a == 0 ? Rat(n == 0 ? 1 : 0) : Rat(binom(n + a - 1, a - 1)) * (n % 2 ? -1 : 1);
    r += shifted[k] * series;
  }
  return r;
}

// Value of a k-basis expansion at r, computed from the defining functions.
Rat k_basis_value(const KBasisCoords& k, const Rat& r) {
  const Rat vt = r, vtp = 1 - 1 / r, vtpp = -1 / (r - 1);
  auto power = [](Rat b, unsigned n) {
    Rat out = 1;
    while (n--) out *= b;
    return out;
  };
  Rat s = k.c0;
  for (auto& [n, c] : k.t) s += c * power(vt, n);
  for (auto& [n, c] : k.tp) s += c * power(vtp, n);
  for (auto& [n, c] : k.tpp) s += c * power(vtpp, n);
  return s;
}

}  // namespace

TEST(RingArithmetic, AdditionExamples) {
  EXPECT_EQ(t + (-t), RingElem(0));
  EXPECT_EQ(tp + inv(t), one);
  EXPECT_EQ(inv(t) + inv(one - t), inv(t * (one - t)));
}

TEST(RingArithmetic, MultiplicationExamples) {
  EXPECT_EQ(t * tp, t - one);
  EXPECT_EQ(tpp * (t - one), RingElem(-1));
  EXPECT_EQ(t * tp * tpp, RingElem(-1));
}

TEST(RingArithmetic, ValuesAgreeWithPointEvaluation) {
  Sampler rnd(11);
  for (int i = 0; i < 200; ++i) {
    RingElem x = rnd.ring(5, 3), y = rnd.ring(5, 3);
    for (const auto& r : oracle::points()) {
      ASSERT_EQ(at(x + y, r), at(x, r) + at(y, r));
      ASSERT_EQ(at(x * y, r), at(x, r) * at(y, r));
      ASSERT_EQ(at(x - y, r), at(x, r) - at(y, r));
    }
  }
}

TEST(RingArithmetic, UnitsAreMonomialsInTAndTMinusOne) {
  EXPECT_TRUE(t.is_unit());
  EXPECT_TRUE((RingElem(3) * t.pow(-2) * (t - one).pow(5)).is_unit());
  EXPECT_FALSE((t - RingElem(2)).is_unit());
  EXPECT_FALSE(RingElem(0).is_unit());
  EXPECT_EQ(tp * inv(tp), one);
}

TEST(RingArithmetic, CanonicalText) {
  EXPECT_EQ(t.to_string(), "t");
  EXPECT_EQ(tp.to_string(), "(-1 + t) / t");
  EXPECT_EQ(tpp.to_string(), "-1 / (t-1)");
  EXPECT_EQ(inv(t * t * (t - one)).to_string(), "1 / (t^2 * (t-1))");
  EXPECT_EQ((RingElem(Rat(3, 4)) * t * t - RingElem(2) * t + one).to_string(), "1 - 2*t + 3/4*t^2");
}

TEST(RingAutomorphisms, PhiExamples) {
  EXPECT_EQ(phi_a(t), tp);
  EXPECT_EQ(phi_a(tp), tpp);
  EXPECT_EQ(phi_a(tpp), t);
  EXPECT_EQ(phi_a(one), one);
}

TEST(RingAutomorphisms, TauExamples) {
  EXPECT_EQ(tau_a(t), one - t);
  EXPECT_EQ(tau_a(tp) * tp, one);
  EXPECT_EQ(tau_a(RingElem(5)), RingElem(5));
}

TEST(RingAutomorphisms, AgreeWithSubstitutionAtPoints) {
  Sampler rnd(12);
  for (int i = 0; i < 200; ++i) {
    RingElem x = rnd.ring(5, 3);
    for (const auto& r : oracle::points()) {
      ASSERT_EQ(at(phi_a(x), r), at(x, 1 - 1 / r));
      ASSERT_EQ(at(tau_a(x), r), at(x, 1 - r));
    }
  }
}

TEST(RingAutomorphisms, S3Relations) {
  Sampler rnd(13);
  for (int i = 0; i < 100; ++i) {
    RingElem x = rnd.ring(4, 2);
    ASSERT_EQ(phi_a(phi_a(phi_a(x))), x);
    ASSERT_EQ(tau_a(tau_a(x)), x);
    ASSERT_EQ(tau_a(phi_a(x)), phi_a(phi_a(tau_a(x))));
  }
}

TEST(KBasis, Examples) {
  KBasisCoords inv_t = to_k_basis(inv(t));
  EXPECT_EQ(inv_t.c0, 1);
  EXPECT_EQ(inv_t.tp, (std::map<unsigned, Rat>{{1, Rat(-1)}}));
  EXPECT_TRUE(inv_t.t.empty() && inv_t.tpp.empty());

  KBasisCoords pf = to_k_basis(inv(t * (one - t)));
  EXPECT_EQ(pf.c0, 1);
  EXPECT_EQ(pf.tp, (std::map<unsigned, Rat>{{1, Rat(-1)}}));
  EXPECT_EQ(pf.tpp, (std::map<unsigned, Rat>{{1, Rat(1)}}));
  EXPECT_TRUE(pf.t.empty());

  KBasisCoords cube = to_k_basis(t.pow(3));
  EXPECT_EQ(cube.c0, 0);
  EXPECT_EQ(cube.t, (std::map<unsigned, Rat>{{3, Rat(1)}}));
  EXPECT_TRUE(cube.tp.empty() && cube.tpp.empty());
}

TEST(KBasis, FromCoordinatesExamples) {
  KBasisCoords k;
  k.c0 = 1;
  k.tpp[1] = 1;
  EXPECT_EQ(from_k_basis(k), RingElem(Poly{-2, 1}, 0, 1));
  EXPECT_EQ(from_k_basis(KBasisCoords{}), RingElem(0));
  KBasisCoords kt;
  kt.t[1] = 1;
  EXPECT_EQ(from_k_basis(kt), t);
}

TEST(KBasis, RoundTripAndPointValues) {
  Sampler rnd(14);
  for (int i = 0; i < 300; ++i) {
    RingElem x(rnd.poly(12), static_cast<unsigned>(rnd.integer(0, 6)), static_cast<unsigned>(rnd.integer(0, 6)));
    KBasisCoords k = to_k_basis(x);
    ASSERT_EQ(from_k_basis(k), x) << x;
    for (const auto& r : oracle::points()) ASSERT_EQ(k_basis_value(k, r), at(x, r)) << x;
  }
}

TEST(TripleSplit, Examples) {
  auto s1 = triple_split(one);
  EXPECT_EQ(s1.in_t, RingElem(0));
  EXPECT_EQ(s1.in_tp, RingElem(0));
  EXPECT_EQ(s1.in_tpp, one);
  auto st = triple_split(t);
  EXPECT_EQ(st.in_t, t - one);
  EXPECT_EQ(st.in_tp, RingElem(0));
  EXPECT_EQ(st.in_tpp, one);
  auto sp = triple_split(tp);
  EXPECT_EQ(sp.in_t, RingElem(0));
  EXPECT_EQ(sp.in_tp, tp);
  EXPECT_EQ(sp.in_tpp, RingElem(0));
}

// (t-1)k[t]: polynomials vanishing at 1.
// t'k[t']:  p / t^a with deg p <= a and p(1) = 0 (the value at t = 1 is t' = 0).
// k[t'']:   p / (t-1)^b with deg p <= b (finite at infinity, no pole at 0).
TEST(TripleSplit, PartsLieInTheirSubspaces) {
  Sampler rnd(15);
  for (int i = 0; i < 300; ++i) {
    RingElem x = rnd.ring(8, 4);
    auto s = triple_split(x);
    ASSERT_EQ(s.in_t + s.in_tp + s.in_tpp, x);
    ASSERT_TRUE(s.in_t.is_polynomial() && s.in_t.num().eval(1) == 0) << s.in_t;
    ASSERT_TRUE(s.in_tp.den_t1() == 0 && s.in_tp.num().eval(1) == 0 &&
                s.in_tp.num().degree() <= static_cast<int>(s.in_tp.den_t()))
        << s.in_tp;
    ASSERT_TRUE(s.in_tpp.den_t() == 0 && s.in_tpp.num().degree() <= static_cast<int>(s.in_tpp.den_t1()))
        << s.in_tpp;
  }
}

TEST(RingIdeals, NormalizeExamples) {
  RingElem x = RingElem(3) * t * t * (t - one) * (t - RingElem(2));
  EXPECT_EQ(ideal_normalize(x).gen(), Poly::linear(2));
  EXPECT_TRUE(ideal_normalize(inv(t)).is_whole());
  EXPECT_TRUE(ideal_normalize(RingElem(0)).is_zero());
}

TEST(RingIdeals, GcdAndMembershipExamples) {
  auto i2 = RingIdeal::generated_by(t - RingElem(2));
  auto i3 = RingIdeal::generated_by(t - RingElem(3));
  EXPECT_TRUE(ideal_gcd(i2, i3).is_whole());
  EXPECT_TRUE(ideal_member(t * (t - RingElem(2)), i2));
  EXPECT_FALSE(ideal_member(t - RingElem(3), i2));
}

TEST(RingIdeals, MembershipMatchesVanishingAtRoot) {
  Sampler rnd(16);
  auto i2 = RingIdeal::generated_by(t - RingElem(2));
  for (int i = 0; i < 100; ++i) {
    RingElem x = rnd.ring(4, 2);
    ASSERT_EQ(ideal_member(x, i2), at(x, 2) == 0) << x;
  }
}

TEST(Residues, Examples) {
  EXPECT_EQ(residue_at(inv(t), Puncture::Zero), 1);
  EXPECT_EQ(residue_at(tpp, Puncture::One), -1);
  EXPECT_EQ(residue_at(t.pow(3), Puncture::Zero), 0);
}

TEST(Residues, AgreeWithSeriesExpansion) {
  Sampler rnd(17);
  for (int i = 0; i < 300; ++i) {
    RingElem x = rnd.ring(6, 4);
    ASSERT_EQ(residue_at(x, Puncture::Zero), res0(x)) << x;
    ASSERT_EQ(residue_at(x, Puncture::One), res1(x)) << x;
  }
}

TEST(Residues, SumToZeroAndVanishOnDerivatives) {
  Sampler rnd(18);
  for (int i = 0; i < 200; ++i) {
    RingElem x = rnd.ring(6, 4);
    ASSERT_EQ(residue_at(x, Puncture::Zero) + residue_at(x, Puncture::One) + residue_at(x, Puncture::Infinity), 0);
    RingElem d = x.derivative();
    for (auto p : {Puncture::Zero, Puncture::One, Puncture::Infinity}) ASSERT_EQ(residue_at(d, p), 0) << x;
  }
}
