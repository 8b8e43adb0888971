#pragma once

// Exact arithmetic in A = Q[t, 1/t, 1/(1-t)], the coordinate ring of the
// projective line with the three points 0, 1 and infinity removed.

#include "tetra/poly.hpp"
#include "tetra/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace tetra {

/// Element of A in reduced form num / (t^a (t-1)^b).
///
/// Invariants: a zero numerator forces a = b = 0; if a > 0 then t does not
/// divide num, and if b > 0 then (t-1) does not divide num. Two elements are
/// equal exactly when their reduced forms coincide.
class RingElem {
 public:
  RingElem() = default;
  RingElem(long c) : num_(Poly::constant(c)) {}  // NOLINT: scalars embed
  RingElem(const Rat& c) : num_(Poly::constant(c)) {}  // NOLINT
  explicit RingElem(Poly num, unsigned a = 0, unsigned b = 0)
      : num_(std::move(num)), a_(a), b_(b) {
    normalize();
  }

  static RingElem t() { return RingElem(Poly::t()); }
  /// t' = 1 - 1/t = (t-1)/t
  static RingElem t_prime() { return RingElem(Poly::linear(1), 1, 0); }
  /// t'' = 1/(1-t) = -1/(t-1)
  static RingElem t_dprime() { return RingElem(Poly::constant(-1), 0, 1); }

  /// c * t^i * (t-1)^j for arbitrary integer exponents.
  static RingElem unit_monomial(const Rat& c, int i, int j) {
    Poly num = Poly::constant(c);
    if (i > 0) num = num * Poly::t().pow(static_cast<unsigned>(i));
    if (j > 0) num = num * Poly::linear(1).pow(static_cast<unsigned>(j));
    return RingElem(std::move(num), i < 0 ? static_cast<unsigned>(-i) : 0u,
                    j < 0 ? static_cast<unsigned>(-j) : 0u);
  }

  const Poly& num() const { return num_; }
  unsigned den_t() const { return a_; }
  unsigned den_t1() const { return b_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return a_ == 0 && b_ == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  Rat constant_value() const { return num_.coeff(0); }

  /// Units of A are exactly c t^i (t-1)^j with c != 0.
  std::optional<RingElem> inverse() const {
    if (is_zero()) return std::nullopt;
    auto [i, rest] = num_.strip_root(0);
    auto [j, core] = rest.strip_root(1);
    if (!core.is_constant()) return std::nullopt;
    return unit_monomial(1 / core.coeff(0), static_cast<int>(a_) - static_cast<int>(i),
                         static_cast<int>(b_) - static_cast<int>(j));
  }

  bool is_unit() const { return inverse().has_value(); }

  /// Integer power; negative exponents require a unit.
  RingElem pow(int n) const {
    RingElem base = *this;
    if (n < 0) {
      auto inv = inverse();
      if (!inv) throw Error("negative power of a non-unit in A");
      base = *inv;
      n = -n;
    }
    RingElem r(1);
    for (int i = 0; i < n; ++i) r = r * base;
    return r;
  }

  RingElem derivative() const {
    // (p / (t^a (t-1)^b))' = (p' t (t-1) - p (a (t-1) + b t)) / (t^{a+1} (t-1)^{b+1})
    Poly tt1 = Poly{0, -1, 1};
    Poly weight = Poly{Rat(-static_cast<long>(a_)), Rat(static_cast<long>(a_ + b_))};
    return RingElem(num_.derivative() * tt1 - num_ * weight, a_ + 1, b_ + 1);
  }

  friend RingElem operator+(const RingElem& x, const RingElem& y) {
    unsigned a = std::max(x.a_, y.a_), b = std::max(x.b_, y.b_);
    return RingElem(x.lift(a, b) + y.lift(a, b), a, b);
  }
  friend RingElem operator-(const RingElem& x, const RingElem& y) {
    unsigned a = std::max(x.a_, y.a_), b = std::max(x.b_, y.b_);
    return RingElem(x.lift(a, b) - y.lift(a, b), a, b);
  }
  friend RingElem operator-(const RingElem& x) {
    RingElem r = x;
    r.num_ = -r.num_;
    return r;
  }
  friend RingElem operator*(const RingElem& x, const RingElem& y) {
    return RingElem(x.num_ * y.num_, x.a_ + y.a_, x.b_ + y.b_);
  }
  RingElem& operator+=(const RingElem& y) { return *this = *this + y; }
  RingElem& operator-=(const RingElem& y) { return *this = *this - y; }
  RingElem& operator*=(const RingElem& y) { return *this = *this * y; }

  friend bool operator==(const RingElem& x, const RingElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.num_ == y.num_;
  }
  friend bool operator!=(const RingElem& x, const RingElem& y) { return !(x == y); }

  /// Canonical text: numerator in ascending powers of t, then
  /// " / (t^a * (t-1)^b)" when a denominator is present.
  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    std::string n = num_.to_string();
    if (std::count_if(num_.coeffs().begin(), num_.coeffs().end(),
                      [](const Rat& c) { return c != 0; }) > 1)
      n = "(" + n + ")";
    std::string d;
    if (a_ > 0) d += a_ == 1 ? "t" : "t^" + std::to_string(a_);
    if (b_ > 0) {
      if (!d.empty()) d += " * ";
      d += b_ == 1 ? "(t-1)" : "(t-1)^" + std::to_string(b_);
    }
    if (a_ > 0 && b_ > 0) d = "(" + d + ")";
    return n + " / " + d;
  }

 private:
  Poly lift(unsigned a, unsigned b) const {
    Poly p = num_;
    if (a > a_) p = p * Poly::t().pow(a - a_);
    if (b > b_) p = p * Poly::linear(1).pow(b - b_);
    return p;
  }

  void normalize() {
    if (num_.is_zero()) {
      a_ = b_ = 0;
      return;
    }
    while (a_ > 0 && num_.coeff(0) == 0) {
      num_ = num_.divide_linear(0);
      --a_;
    }
    while (b_ > 0 && num_.eval(1) == 0) {
      num_ = num_.divide_linear(1);
      --b_;
    }
  }

  Poly num_;
  unsigned a_ = 0;
  unsigned b_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const RingElem& x) { return os << x.to_string(); }

/// A k-algebra endomorphism of A, determined by the image of t. The image T
/// must be such that T and T - 1 are units of A.
class RingAut {
 public:
  explicit RingAut(RingElem image_of_t) : image_(std::move(image_of_t)) {
    auto ti = image_.inverse();
    auto t1i = (image_ - RingElem(1)).inverse();
    if (!ti || !t1i)
      throw Error("image of t must keep t and t-1 invertible: " + image_.to_string());
    t_inv_ = *ti;
    t1_inv_ = *t1i;
  }

  static RingAut identity() { return RingAut(RingElem::t()); }

  const RingElem& image_of_t() const { return image_; }

  RingElem operator()(const RingElem& x) const {
    const auto& c = x.num().coeffs();
    RingElem r;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * image_ + RingElem(*it);
    for (unsigned i = 0; i < x.den_t(); ++i) r = r * t_inv_;
    for (unsigned i = 0; i < x.den_t1(); ++i) r = r * t1_inv_;
    return r;
  }

  /// (f * g)(x) = f(g(x))
  friend RingAut operator*(const RingAut& f, const RingAut& g) { return RingAut(f(g.image_)); }
  friend bool operator==(const RingAut& f, const RingAut& g) { return f.image_ == g.image_; }

 private:
  RingElem image_;
  RingElem t_inv_;
  RingElem t1_inv_;
};

/// Order-3 automorphism t -> t'.
inline const RingAut& phi_a_map() {
  static const RingAut f(RingElem::t_prime());
  return f;
}
/// Order-2 automorphism t -> 1 - t.
inline const RingAut& tau_a_map() {
  static const RingAut f(RingElem(1) - RingElem::t());
  return f;
}
inline RingElem phi_a(const RingElem& x) { return phi_a_map()(x); }
inline RingElem tau_a(const RingElem& x) { return tau_a_map()(x); }

// ---------------------------------------------------------------------------
// Partial fractions, the k-basis {1} u {t^n, t'^n, t''^n}, residues.

/// x = poly + sum_n at0[n-1] t^{-n} + sum_n at1[n-1] (t-1)^{-n}
struct PartialFractions {
  Poly poly;
  std::vector<Rat> at0;
  std::vector<Rat> at1;
};

inline PartialFractions partial_fractions(const RingElem& x) {
  PartialFractions pf;
  const unsigned a = x.den_t(), b = x.den_t1();
  if (a > 0) {
    // Laurent expansion at 0: num * (t-1)^{-b} = num * (-1)^b sum C(b+k-1,k) t^k
    std::vector<Rat> s(a);
    for (unsigned k = 0; k < a; ++k) {
      Rat acc = 0;
      for (unsigned i = 0; i <= k; ++i) {
        Rat series = b == 0 ? Rat(k - i == 0 ? 1 : 0) : binomial(b + (k - i) - 1, k - i);
        acc += x.num().coeff(i) * series;
      }
      s[k] = (b % 2 == 1) ? Rat(-acc) : acc;
    }
    pf.at0.resize(a);
    for (unsigned n = 1; n <= a; ++n) pf.at0[n - 1] = s[a - n];
  }
  if (b > 0) {
    // Expansion at 1 in s = t-1: num(1+s) * (1+s)^{-a}
    Poly shifted = x.num().shift(1);
    std::vector<Rat> r(b);
    for (unsigned k = 0; k < b; ++k) {
      Rat acc = 0;
      for (unsigned i = 0; i <= k; ++i) {
        unsigned m = k - i;
        Rat series = a == 0 ? Rat(m == 0 ? 1 : 0) : binomial(a + m - 1, m);
        if (m % 2 == 1) series = -series;
        acc += shifted.coeff(i) * series;
      }
      r[k] = acc;
    }
    pf.at1.resize(b);
    for (unsigned n = 1; n <= b; ++n) pf.at1[n - 1] = r[b - n];
  }
  RingElem rest = x;
  for (unsigned n = 1; n <= a; ++n) rest -= RingElem::unit_monomial(pf.at0[n - 1], -static_cast<int>(n), 0);
  for (unsigned n = 1; n <= b; ++n) rest -= RingElem::unit_monomial(pf.at1[n - 1], 0, -static_cast<int>(n));
  if (!rest.is_polynomial()) throw Error("internal: partial fraction remainder is not polynomial");
  pf.poly = rest.num();
  return pf;
}

/// Coordinates in the k-basis {1} u {t^n, t'^n, t''^n : n >= 1}; sparse.
struct KBasisCoords {
  Rat c0 = 0;
  std::map<unsigned, Rat> t;
  std::map<unsigned, Rat> tp;
  std::map<unsigned, Rat> tpp;

  friend bool operator==(const KBasisCoords&, const KBasisCoords&) = default;

  std::string to_string() const {
    std::string s;
    auto add = [&](const std::string& basis, const Rat& c) {
      if (!s.empty()) s += ", ";
      s += basis + ": " + tetra::to_string(c);
    };
    if (c0 != 0) add("1", c0);
    for (auto& [n, c] : t) add("t^" + std::to_string(n), c);
    for (auto& [n, c] : tp) add("t'^" + std::to_string(n), c);
    for (auto& [n, c] : tpp) add("t''^" + std::to_string(n), c);
    return s.empty() ? "0" : s;
  }
};

namespace detail {
inline void accumulate(std::map<unsigned, Rat>& m, unsigned n, const Rat& c) {
  if (c == 0) return;
  auto& slot = m[n];
  slot += c;
  if (slot == 0) m.erase(n);
}
}  // namespace detail

inline KBasisCoords to_k_basis(const RingElem& x) {
  KBasisCoords k;
  PartialFractions pf = partial_fractions(x);
  k.c0 = pf.poly.coeff(0);
  for (int n = 1; n <= pf.poly.degree(); ++n) detail::accumulate(k.t, n, pf.poly.coeff(n));
  // (t-1)^{-n} = (-1)^n t''^n
  for (unsigned n = 1; n <= pf.at1.size(); ++n)
    detail::accumulate(k.tpp, n, n % 2 == 1 ? Rat(-pf.at1[n - 1]) : pf.at1[n - 1]);
  // t^{-n} = (1 - t')^n = sum_k C(n,k) (-1)^k t'^k
  for (unsigned n = 1; n <= pf.at0.size(); ++n) {
    const Rat& d = pf.at0[n - 1];
    if (d == 0) continue;
    k.c0 += d;
    for (unsigned j = 1; j <= n; ++j) {
      Rat c = d * binomial(n, j);
      detail::accumulate(k.tp, j, j % 2 == 1 ? Rat(-c) : c);
    }
  }
  return k;
}

inline RingElem from_k_basis(const KBasisCoords& k) {
  RingElem r(k.c0);
  for (auto& [n, c] : k.t) r += RingElem(c) * RingElem::t().pow(static_cast<int>(n));
  for (auto& [n, c] : k.tp) r += RingElem(c) * RingElem::t_prime().pow(static_cast<int>(n));
  for (auto& [n, c] : k.tpp) r += RingElem(c) * RingElem::t_dprime().pow(static_cast<int>(n));
  return r;
}

/// Decomposition A = (t-1)k[t] + t'k[t'] + k[t''].
struct TripleSplit {
  RingElem in_t;    ///< in (t-1) k[t]
  RingElem in_tp;   ///< in t' k[t']
  RingElem in_tpp;  ///< in k[t'']
};

inline TripleSplit triple_split(const RingElem& x) {
  KBasisCoords k = to_k_basis(x);
  TripleSplit s;
  Rat constant = k.c0;
  for (auto& [n, c] : k.t) {
    s.in_t += RingElem(c) * (RingElem::t().pow(static_cast<int>(n)) - RingElem(1));
    constant += c;
  }
  for (auto& [n, c] : k.tp) s.in_tp += RingElem(c) * RingElem::t_prime().pow(static_cast<int>(n));
  s.in_tpp = RingElem(constant);
  for (auto& [n, c] : k.tpp) s.in_tpp += RingElem(c) * RingElem::t_dprime().pow(static_cast<int>(n));
  return s;
}

enum class Puncture { Zero, One, Infinity };

/// Coefficient of (t - p)^{-1} in the local expansion at p. The residue at
/// infinity is fixed by the residue theorem.
inline Rat residue_at(const RingElem& x, Puncture p) {
  PartialFractions pf = partial_fractions(x);
  Rat r0 = pf.at0.empty() ? Rat(0) : pf.at0[0];
  Rat r1 = pf.at1.empty() ? Rat(0) : pf.at1[0];
  switch (p) {
    case Puncture::Zero: return r0;
    case Puncture::One: return r1;
    case Puncture::Infinity: return -r0 - r1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Ideals of A. A is a principal ideal domain whose units are c t^i (t-1)^j,
// so every ideal has a unique monic generator coprime to t(t-1).

class RingIdeal {
 public:
  /// The zero ideal.
  RingIdeal() = default;

  static RingIdeal generated_by(const RingElem& x) {
    RingIdeal I;
    if (x.is_zero()) return I;
    Poly p = x.num().strip_root(0).second.strip_root(1).second;
    I.gen_ = p.monic();
    return I;
  }
  static RingIdeal whole() { return generated_by(RingElem(1)); }

  const Poly& gen() const { return gen_; }
  bool is_zero() const { return gen_.is_zero(); }
  bool is_whole() const { return gen_.degree() == 0; }

  bool contains(const RingElem& x) const {
    if (x.is_zero()) return true;
    if (is_zero()) return false;
    return generated_by(x).gen_.divisible_by(gen_);
  }
  /// Inclusion of ideals: *this ⊆ other.
  bool subset_of(const RingIdeal& other) const {
    if (is_zero()) return true;
    return other.contains(RingElem(gen_));
  }

  friend bool operator==(const RingIdeal&, const RingIdeal&) = default;

  std::string to_string() const { return "(" + gen_.to_string() + ")"; }

 private:
  Poly gen_;
};

inline RingIdeal ideal_normalize(const RingElem& x) { return RingIdeal::generated_by(x); }

/// Sum of ideals (the gcd of the generators).
inline RingIdeal ideal_gcd(const RingIdeal& i, const RingIdeal& j) {
  return RingIdeal::generated_by(RingElem(gcd(i.gen(), j.gen())));
}

inline bool ideal_member(const RingElem& x, const RingIdeal& i) { return i.contains(x); }

}  // namespace tetra
