#pragma once

// The Onsager algebra O, realized inside g as Psi(Omega) = v0 k[t] + v1 k[t] + v2 k[t]
// with v0 = u0 (t-1), v1 = u1, v2 = u2 t and
//   [v0,v1] = -v2 (t-1),  [v1,v2] = -v0,  [v2,v0] = v1 t.

#include "tetra/linalg.hpp"
#include "tetra/loop.hpp"
#include "tetra/report.hpp"

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace tetra {

struct OnsagerElem {
  std::array<Poly, 3> p{};

  OnsagerElem() = default;
  OnsagerElem(Poly p0, Poly p1, Poly p2) : p{std::move(p0), std::move(p1), std::move(p2)} {}

  static OnsagerElem basis(int i, Poly q = Poly::constant(1)) {
    OnsagerElem x;
    x.p[static_cast<std::size_t>(i)] = std::move(q);
    return x;
  }

  bool is_zero() const { return p[0].is_zero() && p[1].is_zero() && p[2].is_zero(); }

  friend OnsagerElem operator+(const OnsagerElem& x, const OnsagerElem& y) {
    return {x.p[0] + y.p[0], x.p[1] + y.p[1], x.p[2] + y.p[2]};
  }
  friend OnsagerElem operator-(const OnsagerElem& x, const OnsagerElem& y) {
    return {x.p[0] - y.p[0], x.p[1] - y.p[1], x.p[2] - y.p[2]};
  }
  friend OnsagerElem operator-(const OnsagerElem& x) { return {-x.p[0], -x.p[1], -x.p[2]}; }
  friend OnsagerElem operator*(const OnsagerElem& x, const Poly& f) { return {x.p[0] * f, x.p[1] * f, x.p[2] * f}; }
  friend OnsagerElem operator*(const OnsagerElem& x, const Rat& c) { return x * Poly::constant(c); }
  friend bool operator==(const OnsagerElem&, const OnsagerElem&) = default;

  std::string to_string() const {
    return LoopElem::render_terms({"v0", "v1", "v2"}, {RingElem(p[0]), RingElem(p[1]), RingElem(p[2])});
  }
};

inline OnsagerElem obracket(const OnsagerElem& x, const OnsagerElem& y) {
  const auto& a = x.p;
  const auto& b = y.p;
  const Poly t = Poly::t(), tm1 = Poly::linear(1);
  return {-(a[1] * b[2] - a[2] * b[1]), (a[2] * b[0] - a[0] * b[2]) * t, -(a[0] * b[1] - a[1] * b[0]) * tm1};
}

inline OnsagerElem oad_power(const OnsagerElem& x, int n, OnsagerElem y) {
  for (int i = 0; i < n; ++i) y = obracket(x, y);
  return y;
}

inline LoopElem embed(const OnsagerElem& x) {
  return {RingElem(x.p[0] * Poly::linear(1)), RingElem(x.p[1]), RingElem(x.p[2] * Poly::t())};
}

/// Inverse of embed on Psi(Omega); nullopt when x is not in Psi(Omega).
inline std::optional<OnsagerElem> try_restrict(const LoopElem& x) {
  for (const auto& c : x.c)
    if (!c.is_polynomial()) return std::nullopt;
  const Poly& a0 = x.c[0].num();
  const Poly& a2 = x.c[2].num();
  if (a0.eval(1) != 0 || a2.coeff(0) != 0) return std::nullopt;
  return OnsagerElem(a0.divide_linear(1), x.c[1].num(), a2.divide_linear(0));
}

class NotInOmega : public Error {
 public:
  explicit NotInOmega(const LoopElem& x) : Error(x.to_string() + " is not in the Onsager subalgebra") {}
};

inline OnsagerElem restrict(const LoopElem& x) {
  auto r = try_restrict(x);
  if (!r) throw NotInOmega(x);
  return *r;
}

// ---------------------------------------------------------------------------
// Classical basis {A_m : m in Z} u {G_l : l >= 1}.

struct ClassicalElem {
  std::map<long, Rat> a;  ///< coefficients of A_m
  std::map<long, Rat> g;  ///< coefficients of G_l, l >= 1

  static ClassicalElem A(long m, Rat c = 1) {
    ClassicalElem e;
    e.a[m] = std::move(c);
    return e;
  }
  static ClassicalElem G(long l, Rat c = 1) {
    if (l < 1) throw Error("G_l needs l >= 1");
    ClassicalElem e;
    e.g[l] = std::move(c);
    return e;
  }
  friend ClassicalElem operator+(ClassicalElem x, const ClassicalElem& y) {
    for (auto& [k, c] : y.a) x.a[k] += c;
    for (auto& [k, c] : y.g) x.g[k] += c;
    return x;
  }
  friend ClassicalElem operator*(ClassicalElem x, const Rat& s) {
    for (auto& [k, c] : x.a) c *= s;
    for (auto& [k, c] : x.g) c *= s;
    return x;
  }
  friend ClassicalElem operator-(const ClassicalElem& x, const ClassicalElem& y) { return x + y * Rat(-1); }
};

/// Memoized images of A_m and G_l in the v-basis:
/// A_0 -> 2(v1 - v2), A_1 -> 2(v1 + v2), G_1 -> 4 v0,
/// A_{m+1} = A_{m-1} + [G_1, A_m], G_l = 1/2 [A_l, A_0].
class ClassicalImages {
 public:
  ClassicalImages() {
    const Poly two = Poly::constant(2);
    a_[0] = OnsagerElem(Poly(), two, -two);
    a_[1] = OnsagerElem(Poly(), two, two);
    g1_ = OnsagerElem::basis(0, Poly::constant(4));
  }

  const OnsagerElem& A(long m) {
    if (auto it = a_.find(m); it != a_.end()) return it->second;
    OnsagerElem v;
    if (m > 1) {
      v = A(m - 2) + obracket(g1_, A(m - 1));
    } else {
      v = A(m + 2) - obracket(g1_, A(m + 1));
    }
    return a_[m] = v;
  }

  const OnsagerElem& G(long l) {
    if (l < 1) throw Error("G_l needs l >= 1");
    if (auto it = g_.find(l); it != g_.end()) return it->second;
    return g_[l] = obracket(A(l), A(0)) * Rat(1, 2);
  }

  OnsagerElem map(const ClassicalElem& x) {
    OnsagerElem r;
    for (auto& [m, c] : x.a) r = r + A(m) * c;
    for (auto& [l, c] : x.g) r = r + G(l) * c;
    return r;
  }

 private:
  std::map<long, OnsagerElem> a_;
  std::map<long, OnsagerElem> g_;
  OnsagerElem g1_;
};

inline OnsagerElem classical_to_v(const ClassicalElem& x) {
  ClassicalImages images;
  return images.map(x);
}

/// [A_l,A_m] = 2 G_{l-m} (l > m), [G_l,A_m] = A_{m+l} - A_{m-l}, [G_l,G_m] = 0
/// for indices bounded by maxIndex in absolute value.
inline Report verify_classical_relations(long max_index) {
  if (max_index < 2) throw Error("maxIndex must be at least 2");
  Report r("onsager");
  ClassicalImages im;
  auto check = [&](const std::string& name, const std::string& idx, const OnsagerElem& lhs, const OnsagerElem& rhs) {
    OnsagerElem d = lhs - rhs;
    r.add(name, idx, d.is_zero(), d.to_string());
  };
  for (long l = -max_index; l <= max_index; ++l)
    for (long m = -max_index; m < l; ++m)
      check("AA", std::to_string(l) + "," + std::to_string(m), obracket(im.A(l), im.A(m)), im.G(l - m) * Rat(2));
  for (long l = 1; l <= max_index; ++l)
    for (long m = -max_index; m <= max_index; ++m)
      check("GA", std::to_string(l) + "," + std::to_string(m), obracket(im.G(l), im.A(m)), im.A(m + l) - im.A(m - l));
  for (long l = 1; l <= max_index; ++l)
    for (long m = 1; m <= max_index; ++m)
      check("GG", std::to_string(l) + "," + std::to_string(m), obracket(im.G(l), im.G(m)), OnsagerElem());
  return r;
}

// ---------------------------------------------------------------------------
// Centroid.

/// Right multiplication by f commutes with ad on the sampled pairs.
template <class Sampler>
Report centroid_check(const Poly& f, Sampler&& sample, int samples = 8) {
  Report r("centroid");
  for (int s = 0; s < samples; ++s) {
    OnsagerElem x = sample(), y = sample();
    OnsagerElem d = obracket(x, y * f) - obracket(x, y) * f;
    r.add("right_mult", f.to_string() + " #" + std::to_string(s), d.is_zero(), d.to_string());
  }
  return r;
}

/// The k[t]-linear map v_i -> v_i p_i. It lies in the centroid only when all
/// p_i agree; a failing generator pair [v_i, v_j] is reported as a witness.
inline Report diagonal_centroid_check(const std::array<Poly, 3>& p) {
  Report r("centroid");
  auto f = [&](const OnsagerElem& x) { return OnsagerElem(x.p[0] * p[0], x.p[1] * p[1], x.p[2] * p[2]); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      OnsagerElem vi = OnsagerElem::basis(i), vj = OnsagerElem::basis(j);
      OnsagerElem d = f(obracket(vi, vj)) - obracket(vi, f(vj));
      r.add("diagonal", "[v" + std::to_string(i) + ",v" + std::to_string(j) + "]", d.is_zero(), d.to_string());
    }
  return r;
}

// ---------------------------------------------------------------------------
// Ideals. Every ideal I sits between O J t(t-1) and O J, where J = J_I = (q).
// Cosets of O J t(t-1) inside O J have coordinates in the basis
// (w0 t, w1 t, w2 t, w0 (t-1), w1 (t-1), w2 (t-1)), w_i = v_i q.

using QuotientCoords = std::array<Rat, 6>;

/// k[t]-generator of J_I: gcd of all coordinates of the ideal generated by
/// gens, found by bracketing with v0, v1, v2 until the gcd is unchanged for a
/// full round.
inline Poly extract_J(std::span<const OnsagerElem> gens) {
  Poly g;
  std::vector<OnsagerElem> frontier;
  for (const auto& x : gens) {
    if (x.is_zero()) continue;
    frontier.push_back(x);
    for (const auto& c : x.p) g = gcd(g, c);
  }
  for (int round = 0; round < 16 && !frontier.empty(); ++round) {
    Poly before = g;
    std::vector<OnsagerElem> next;
    for (const auto& x : frontier)
      for (int j = 0; j < 3; ++j) {
        OnsagerElem y = obracket(OnsagerElem::basis(j), x);
        if (y.is_zero()) continue;
        for (const auto& c : y.p) g = gcd(g, c);
        // Only the gcd matters, so keep each bracket up to the current gcd.
        next.push_back(std::move(y));
      }
    frontier = std::move(next);
    if (g == before) break;
    if (g.degree() == 0) break;
  }
  return g;
}

struct TypeIFlags {
  bool eps = false, delta = false, gamma = false;
  bool eps2 = false, delta2 = false, gamma2 = false;  ///< the primed flags
  friend bool operator==(const TypeIFlags&, const TypeIFlags&) = default;
};
struct TypeIIParam {
  Rat eta;
  friend bool operator==(const TypeIIParam&, const TypeIIParam&) = default;
};

/// An ideal O J t(t-1) + S of O with J = (q).
///
/// Type I:  S = k eps (w0t + w1t) + k delta (w0t - w1t) + k eps delta gamma w2t
///            + k eps' (w0(t-1) + w2(t-1)) + k delta' (w0(t-1) - w2(t-1))
///            + k eps' delta' gamma' w1(t-1), with eps + delta != 0 != eps' + delta'.
/// Type II: S = <w0t, w1t, w0(t-1), w2(t-1), w2t + eta w1(t-1)>, eta != 0.
///
/// gamma (resp. gamma') only matters when eps = delta = 1 (resp. primed) and
/// is cleared otherwise, so equal ideals have equal specs.
class OnsagerIdealSpec {
 public:
  static OnsagerIdealSpec type_i(Poly q, TypeIFlags f) {
    if (!(f.eps || f.delta) || !(f.eps2 || f.delta2))
      throw Error("type I ideal needs eps + delta != 0 and eps' + delta' != 0");
    f.gamma = f.gamma && f.eps && f.delta;
    f.gamma2 = f.gamma2 && f.eps2 && f.delta2;
    return OnsagerIdealSpec(std::move(q), f);
  }
  static OnsagerIdealSpec type_ii(Poly q, Rat eta) {
    if (eta == 0) throw Error("type II ideal needs eta != 0");
    return OnsagerIdealSpec(std::move(q), TypeIIParam{std::move(eta)});
  }

  const Poly& q() const { return q_; }
  bool is_type_i() const { return std::holds_alternative<TypeIFlags>(kind_); }
  const TypeIFlags& flags() const { return std::get<TypeIFlags>(kind_); }
  const Rat& eta() const { return std::get<TypeIIParam>(kind_).eta; }

  /// Spanning vectors of S in quotient coordinates.
  std::vector<linalg::Vec> span() const {
    auto vec = [](std::initializer_list<int> v) {
      linalg::Vec r;
      for (int x : v) r.emplace_back(x);
      return r;
    };
    std::vector<linalg::Vec> s;
    if (is_type_i()) {
      const auto& f = flags();
      if (f.eps) s.push_back(vec({1, 1, 0, 0, 0, 0}));
      if (f.delta) s.push_back(vec({1, -1, 0, 0, 0, 0}));
      if (f.eps && f.delta && f.gamma) s.push_back(vec({0, 0, 1, 0, 0, 0}));
      if (f.eps2) s.push_back(vec({0, 0, 0, 1, 0, 1}));
      if (f.delta2) s.push_back(vec({0, 0, 0, 1, 0, -1}));
      if (f.eps2 && f.delta2 && f.gamma2) s.push_back(vec({0, 0, 0, 0, 1, 0}));
    } else {
      s.push_back(vec({1, 0, 0, 0, 0, 0}));
      s.push_back(vec({0, 1, 0, 0, 0, 0}));
      s.push_back(vec({0, 0, 0, 1, 0, 0}));
      s.push_back(vec({0, 0, 0, 0, 0, 1}));
      linalg::Vec last = vec({0, 0, 1, 0, 0, 0});
      last[4] = eta();
      s.push_back(last);
    }
    return s;
  }

  friend bool operator==(const OnsagerIdealSpec&, const OnsagerIdealSpec&) = default;

  /// "J=<poly>; typeI eps=..,delta=..,gamma=..,eps'=..,delta'=..,gamma'=.." or
  /// "J=<poly>; typeII eta=<rat>".
  std::string to_string() const {
    std::string s = "J=" + q_.to_string() + "; ";
    if (is_type_i()) {
      const auto& f = flags();
      auto b = [](bool v) { return v ? "1" : "0"; };
      s += std::string("typeI eps=") + b(f.eps) + ",delta=" + b(f.delta) + ",gamma=" + b(f.gamma) +
           ",eps'=" + b(f.eps2) + ",delta'=" + b(f.delta2) + ",gamma'=" + b(f.gamma2);
    } else {
      s += "typeII eta=" + tetra::to_string(eta());
    }
    return s;
  }

 private:
  OnsagerIdealSpec(Poly q, std::variant<TypeIFlags, TypeIIParam> k) : q_(std::move(q)), kind_(std::move(k)) {
    if (q_.is_zero()) throw Error("J must be a nonzero ideal");
    q_ = q_.monic();
  }

  Poly q_;
  std::variant<TypeIFlags, TypeIIParam> kind_;
};

/// Coset of x modulo O J t(t-1), or nullopt when x is not in O J.
inline std::optional<QuotientCoords> quotient_coords(const OnsagerElem& x, const Poly& q) {
  QuotientCoords out;
  const Poly tt1{0, -1, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    auto [r, rem] = Poly::divmod(x.p[i], q);
    if (!rem.is_zero()) return std::nullopt;
    Poly low = Poly::divmod(r, tt1).second;  // c0 + c1 t = alpha t + beta (t-1)
    Rat beta = -low.coeff(0);
    Rat alpha = low.coeff(1) + low.coeff(0);
    out[i] = alpha;
    out[i + 3] = beta;
  }
  return out;
}

/// Representative in O J of a coset given by quotient coordinates.
inline OnsagerElem quotient_rep(const linalg::Vec& v, const Poly& q) {
  OnsagerElem x;
  const Poly t = Poly::t(), tm1 = Poly::linear(1);
  for (std::size_t i = 0; i < 3; ++i) x.p[i] = (t * v[i] + tm1 * v[i + 3]) * q;
  return x;
}

inline bool ideal_member_O(const OnsagerElem& x, const OnsagerIdealSpec& spec) {
  auto coords = quotient_coords(x, spec.q());
  if (!coords) return false;
  return linalg::in_span(spec.span(), linalg::Vec(coords->begin(), coords->end()));
}

/// Bracket closure against the generators v0, v1, v2, for the spanning
/// vectors of S and for v_i q t(t-1) t^k with k <= degree_bound.
inline bool is_ideal(const OnsagerIdealSpec& spec, int degree_bound = 4) {
  std::vector<OnsagerElem> span;
  for (const auto& v : spec.span()) span.push_back(quotient_rep(v, spec.q()));
  const Poly tt1q = Poly{0, -1, 1} * spec.q();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k <= degree_bound; ++k)
      span.push_back(OnsagerElem::basis(i, tt1q * Poly::monomial(1, static_cast<std::size_t>(k))));
  for (const auto& s : span) {
    if (!ideal_member_O(s, spec)) return false;
    for (int j = 0; j < 3; ++j)
      if (!ideal_member_O(obracket(s, OnsagerElem::basis(j)), spec)) return false;
  }
  return true;
}

namespace detail {
/// Matrix (columns = images of the 6 basis cosets) of ad(a) on O J / O J t(t-1).
inline linalg::Mat quotient_action(const OnsagerElem& a, const Poly& q) {
  linalg::Mat m = linalg::zeros(6, 6);
  for (std::size_t k = 0; k < 6; ++k) {
    linalg::Vec e(6, Rat(0));
    e[k] = 1;
    auto img = quotient_coords(obracket(a, quotient_rep(e, q)), q);
    if (!img) throw Error("internal: bracket left O J");
    for (std::size_t i = 0; i < 6; ++i) m[i][k] = (*img)[i];
  }
  return m;
}
}  // namespace detail

inline const std::array<std::string, 6>& quotient_basis_names() {
  static const std::array<std::string, 6> n{"w0t", "w1t", "w2t", "w0(t-1)", "w1(t-1)", "w2(t-1)"};
  return n;
}

inline std::string quotient_vec_to_string(const linalg::Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < 6; ++i) {
    if (v[i] == 0) continue;
    Rat mag = abs(v[i]);
    if (s.empty())
      s += v[i] < 0 ? "-" : "";
    else
      s += v[i] < 0 ? " - " : " + ";
    if (mag != 1) s += tetra::to_string(mag) + "*";
    s += quotient_basis_names()[i];
  }
  return s.empty() ? "0" : s;
}

struct ClosedResult {
  bool closed = false;
  std::optional<linalg::Vec> witness;  ///< coset in Z(I) \ I when not closed
  std::vector<linalg::Vec> center;     ///< basis of Z(I) / O J t(t-1)
};

/// Z(I) = {x : [x, O] ⊆ I}; closed iff Z(I) = I. Since v0, v1, v2 generate O
/// and O J t(t-1) ⊆ I ⊆ Z(I) ⊆ O J, it suffices to solve [e, v_j] ∈ S for e in
/// the 6-dimensional quotient.
inline ClosedResult is_closed(const OnsagerIdealSpec& spec) {
  const auto S = spec.span();
  // Linear forms vanishing on S.
  const auto annihilator = linalg::nullspace(linalg::Mat(S.begin(), S.end()), 6);
  linalg::Mat system;
  for (int j = 0; j < 3; ++j) {
    // [e, v_j] = -ad(v_j) e
    linalg::Mat act = detail::quotient_action(OnsagerElem::basis(j), spec.q());
    for (const auto& n : annihilator) system.push_back(linalg::apply(linalg::transpose(act), n));
  }
  ClosedResult res;
  res.center = system.empty() ? linalg::identity(6) : linalg::nullspace(system, 6);
  for (std::size_t k = 0; k < 6 && !res.witness; ++k) {
    linalg::Vec e(6, Rat(0));
    e[k] = 1;
    if (linalg::in_span(res.center, e) && !linalg::in_span(S, e)) res.witness = e;
  }
  if (!res.witness)
    for (const auto& z : res.center)
      if (!linalg::in_span(S, z)) {
        res.witness = z;
        break;
      }
  res.closed = !res.witness.has_value();
  return res;
}

struct Eigenspace {
  Rat value;
  std::vector<linalg::Vec> basis;
};

struct EigenTable {
  std::vector<Eigenspace> v2t;   ///< action of the coset of v2 t
  std::vector<Eigenspace> v1t1;  ///< action of the coset of v1 (t-1)
  bool splits = true;            ///< characteristic polynomials split over Q
};

namespace detail {
inline std::vector<Eigenspace> eigen_decompose(const linalg::Mat& m, bool& splits) {
  Poly cp = linalg::charpoly(m);
  std::vector<Eigenspace> out;
  int total = 0;
  for (const auto& lam : linalg::rational_roots(cp)) {
    linalg::Mat shifted = m;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i][i] -= lam;
    Eigenspace e{lam, linalg::nullspace(shifted, m.size())};
    for (auto& v : e.basis) {
      auto lead = std::find_if(v.begin(), v.end(), [](const Rat& x) { return x != 0; });
      Rat scale = 1 / *lead;
      for (auto& x : v) x *= scale;
    }
    total += static_cast<int>(e.basis.size());
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const Eigenspace& a, const Eigenspace& b) { return a.value < b.value; });
  if (total != static_cast<int>(m.size())) splits = false;
  return out;
}
}  // namespace detail

inline EigenTable eigen_table(const Poly& q) {
  if (q.is_zero()) throw Error("eigen_table needs q != 0");
  EigenTable tab;
  tab.v2t = detail::eigen_decompose(detail::quotient_action(OnsagerElem::basis(2, Poly::t()), q), tab.splits);
  tab.v1t1 = detail::eigen_decompose(detail::quotient_action(OnsagerElem::basis(1, Poly::linear(1)), q), tab.splits);
  return tab;
}

/// All distinct ideals with J = (q) of type I (16 of them) followed by type II
/// ideals for the given sample of eta values.
inline std::vector<OnsagerIdealSpec> enumerate_ideal_specs(const Poly& q, const std::vector<Rat>& etas) {
  std::vector<OnsagerIdealSpec> out;
  // (eps, delta, gamma) choices up to the gamma normalization.
  const std::array<std::array<bool, 3>, 4> side{{{true, false, false}, {false, true, false},
                                                 {true, true, false}, {true, true, true}}};
  for (const auto& u : side)
    for (const auto& p : side)
      out.push_back(OnsagerIdealSpec::type_i(q, {u[0], u[1], u[2], p[0], p[1], p[2]}));
  for (const auto& eta : etas) out.push_back(OnsagerIdealSpec::type_ii(q, eta));
  return out;
}

}  // namespace tetra
