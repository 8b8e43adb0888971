#pragma once

// The three-point loop algebra g = sl2 ⊗ A, stored in the A-basis {u0, u1, u2}
// with [u0,u1] = -u2 t, [u1,u2] = -u0 t', [u2,u0] = -u1 t''.

#include "tetra/report.hpp"
#include "tetra/ring.hpp"

#include <array>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace tetra {

/// Element u0*c[0] + u1*c[1] + u2*c[2] of g; scalars act on the right.
struct LoopElem {
  std::array<RingElem, 3> c{};

  LoopElem() = default;
  LoopElem(RingElem a0, RingElem a1, RingElem a2) : c{std::move(a0), std::move(a1), std::move(a2)} {}

  /// u_i * a
  static LoopElem basis(int i, RingElem a = RingElem(1)) {
    LoopElem x;
    x.c[static_cast<std::size_t>(i)] = std::move(a);
    return x;
  }

  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

  friend LoopElem operator+(const LoopElem& x, const LoopElem& y) {
    return {x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2]};
  }
  friend LoopElem operator-(const LoopElem& x, const LoopElem& y) {
    return {x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2]};
  }
  friend LoopElem operator-(const LoopElem& x) { return {-x.c[0], -x.c[1], -x.c[2]}; }
  friend LoopElem operator*(const LoopElem& x, const RingElem& a) {
    return {x.c[0] * a, x.c[1] * a, x.c[2] * a};
  }
  friend LoopElem operator*(const RingElem& a, const LoopElem& x) { return x * a; }
  LoopElem& operator+=(const LoopElem& y) { return *this = *this + y; }
  LoopElem& operator-=(const LoopElem& y) { return *this = *this - y; }

  friend bool operator==(const LoopElem&, const LoopElem&) = default;

  /// "u0*(<ring>) + u1*(<ring>) + u2*(<ring>)", zero terms omitted.
  std::string to_string() const { return render_terms({"u0", "u1", "u2"}, c); }

  static std::string render_terms(const std::array<std::string, 3>& names, const std::array<RingElem, 3>& coeffs) {
    std::string s;
    for (std::size_t i = 0; i < 3; ++i) {
      if (coeffs[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += names[i];
      if (coeffs[i] != RingElem(1)) s += "*(" + coeffs[i].to_string() + ")";
    }
    return s.empty() ? "0" : s;
  }
};

inline std::ostream& operator<<(std::ostream& os, const LoopElem& x) { return os << x.to_string(); }

inline LoopElem bracket(const LoopElem& x, const LoopElem& y) {
  const auto& a = x.c;
  const auto& b = y.c;
  return {(a[1] * b[2] - a[2] * b[1]) * -RingElem::t_prime(),
          (a[2] * b[0] - a[0] * b[2]) * -RingElem::t_dprime(),
          (a[0] * b[1] - a[1] * b[0]) * -RingElem::t()};
}

/// (ad x)^n (y)
inline LoopElem ad_power(const LoopElem& x, int n, LoopElem y) {
  for (int i = 0; i < n; ++i) y = bracket(x, y);
  return y;
}

/// Element x⊗c[0] + y⊗c[1] + z⊗c[2] in the sl2 basis
/// x = ((-1,2),(0,1)), y = ((-1,0),(-2,1)), z = ((1,0),(0,-1)).
struct XYZElem {
  std::array<RingElem, 3> c{};

  XYZElem() = default;
  XYZElem(RingElem x, RingElem y, RingElem z) : c{std::move(x), std::move(y), std::move(z)} {}

  friend XYZElem operator+(const XYZElem& p, const XYZElem& q) {
    return {p.c[0] + q.c[0], p.c[1] + q.c[1], p.c[2] + q.c[2]};
  }
  friend XYZElem operator-(const XYZElem& p) { return {-p.c[0], -p.c[1], -p.c[2]}; }
  friend XYZElem operator*(const XYZElem& p, const RingElem& a) { return {p.c[0] * a, p.c[1] * a, p.c[2] * a}; }
  friend bool operator==(const XYZElem&, const XYZElem&) = default;

  std::string to_string() const { return LoopElem::render_terms({"x", "y", "z"}, c); }
};

/// [x,y] = 2(x+y), [y,z] = 2(y+z), [z,x] = 2(z+x), extended A-bilinearly.
inline XYZElem xyz_bracket(const XYZElem& p, const XYZElem& q) {
  const auto& a = p.c;
  const auto& b = q.c;
  RingElem xy = RingElem(2) * (a[0] * b[1] - a[1] * b[0]);
  RingElem yz = RingElem(2) * (a[1] * b[2] - a[2] * b[1]);
  RingElem zx = RingElem(2) * (a[2] * b[0] - a[0] * b[2]);
  return {xy + zx, xy + yz, yz + zx};
}

inline XYZElem u_to_xyz(const LoopElem& u) {
  const RingElem quarter(Rat(1, 4));
  const RingElem one(1);
  const RingElem& t = RingElem::t();
  const RingElem tp = RingElem::t_prime();
  const RingElem tpp = RingElem::t_dprime();
  const auto& a = u.c;
  // 4u0 = z + x t'' + y (t''-1); 4u1 = x + y t + z (t-1); 4u2 = y + z t' + x (t'-1)
  return {quarter * (a[0] * tpp + a[1] + a[2] * (tp - one)),
          quarter * (a[0] * (tpp - one) + a[1] * t + a[2]),
          quarter * (a[0] + a[1] * (t - one) + a[2] * tp)};
}

inline LoopElem xyz_to_u(const XYZElem& p) {
  const RingElem two(2);
  const auto& a = p.c;
  // x⊗1 = 2(u1 - u2 t), y⊗1 = 2(u2 - u0 t'), z⊗1 = 2(u0 - u1 t'')
  return {two * (a[2] - a[1] * RingElem::t_prime()), two * (a[0] - a[2] * RingElem::t_dprime()),
          two * (a[1] - a[0] * RingElem::t())};
}

/// Generator X_ij of the Tetrahedron algebra, i != j in {0,1,2,3}. Stored as
/// the ordered pair (lo, hi) with a sign, using X_ji = -X_ij.
class TetGen {
 public:
  TetGen(int i, int j) : from_(i), to_(j) {
    if (i < 0 || i > 3 || j < 0 || j > 3 || i == j)
      throw Error("X_ij needs distinct indices in {0,1,2,3}");
  }
  int from() const { return from_; }
  int to() const { return to_; }
  int lo() const { return std::min(from_, to_); }
  int hi() const { return std::max(from_, to_); }
  int sign() const { return from_ < to_ ? 1 : -1; }

  std::string to_string() const { return "X_" + std::to_string(from_) + std::to_string(to_); }

  friend bool operator==(const TetGen&, const TetGen&) = default;

 private:
  int from_;
  int to_;
};

/// All 12 ordered generators.
inline std::vector<TetGen> all_tet_gens() {
  std::vector<TetGen> g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) g.emplace_back(i, j);
  return g;
}

namespace detail {
inline XYZElem psi_xyz_sorted(int lo, int hi) {
  const RingElem one(1), t = RingElem::t(), tp = RingElem::t_prime(), tpp = RingElem::t_dprime();
  switch (lo * 4 + hi) {
    case 1: return {tp - one, RingElem(), tp};    // X01 = z⊗t' + x⊗(t'-1)
    case 2: return {tpp, tpp - one, RingElem()};  // X02 = x⊗t'' + y⊗(t''-1)
    case 3: return {RingElem(), t, t - one};      // X03 = y⊗t + z⊗(t-1)
    case 6: return {one, RingElem(), RingElem()}; // X12 = x⊗1
    case 7: return {RingElem(), RingElem(), -one};// X13 = -X31 = -z⊗1
    case 11: return {RingElem(), one, RingElem()};// X23 = y⊗1
  }
  throw Error("internal: bad generator");
}
}  // namespace detail

/// Image of X_ij in g in xyz form.
inline XYZElem psi_xyz(const TetGen& g) {
  XYZElem r = detail::psi_xyz_sorted(g.lo(), g.hi());
  return g.sign() > 0 ? r : -r;
}

/// Image of X_ij in g in the u-basis.
inline LoopElem psi(const TetGen& g) { return xyz_to_u(psi_xyz(g)); }

// ---------------------------------------------------------------------------
// Gradings and decompositions.

/// Components in g_0 = u0 A, g_1 = u1 A, g_2 = u2 A.
inline std::array<LoopElem, 3> grade_split(const LoopElem& x) {
  return {LoopElem::basis(0, x.c[0]), LoopElem::basis(1, x.c[1]), LoopElem::basis(2, x.c[2])};
}

/// Components in Psi(Omega), Psi(Omega'), Psi(Omega''), where
///   Psi(Omega)   = u0 (t-1)k[t]   + u1 k[t]        + u2 t k[t]
///   Psi(Omega')  = u0 t'k[t']     + u1 (t'-1)k[t'] + u2 k[t']
///   Psi(Omega'') = u0 k[t'']      + u1 t''k[t'']   + u2 (t''-1)k[t''].
inline std::array<LoopElem, 3> omega_split(const LoopElem& x) {
  std::array<LoopElem, 3> out;
  // u0: A = (t-1)k[t] + t'k[t'] + k[t''] directly.
  {
    TripleSplit s = triple_split(x.c[0]);
    out[0].c[0] = s.in_t;
    out[1].c[0] = s.in_tp;
    out[2].c[0] = s.in_tpp;
  }
  // u1: A = k[t] + (t'-1)k[t'] + t''k[t''] is phi_A of the u0 splitting.
  {
    TripleSplit s = triple_split(phi_a(phi_a(x.c[1])));
    out[1].c[1] = phi_a(s.in_t);
    out[2].c[1] = phi_a(s.in_tp);
    out[0].c[1] = phi_a(s.in_tpp);
  }
  // u2: A = t k[t] + k[t'] + (t''-1)k[t''] is phi_A^2 of the u0 splitting.
  {
    TripleSplit s = triple_split(phi_a(x.c[2]));
    out[2].c[2] = phi_a(phi_a(s.in_t));
    out[0].c[2] = phi_a(phi_a(s.in_tp));
    out[1].c[2] = phi_a(phi_a(s.in_tpp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ideals: every ideal of g is u0 I + u1 I + u2 I for an ideal I of A.

struct GIdeal {
  RingIdeal I;

  bool contains(const LoopElem& x) const {
    return I.contains(x.c[0]) && I.contains(x.c[1]) && I.contains(x.c[2]);
  }
  friend bool operator==(const GIdeal&, const GIdeal&) = default;
  std::string to_string() const { return "I=" + I.to_string(); }
};

inline GIdeal ideal_generated(std::span<const LoopElem> gens) {
  RingIdeal acc;
  for (const auto& g : gens)
    for (const auto& a : g.c) acc = ideal_gcd(acc, ideal_normalize(a));
  return {acc};
}

inline bool ideal_member_g(const LoopElem& x, const GIdeal& a) { return a.contains(x); }

// ---------------------------------------------------------------------------
// Relation checks.

namespace detail {
inline std::string idx(std::initializer_list<int> is) {
  std::string s;
  for (int i : is) {
    if (!s.empty()) s += ",";
    s += std::to_string(i);
  }
  return s;
}
inline void check_eq(Report& r, const std::string& name, const std::string& indices, const LoopElem& lhs,
                     const LoopElem& rhs) {
  LoopElem diff = lhs - rhs;
  r.add(name, indices, diff.is_zero(), diff.to_string());
}
}  // namespace detail

/// Tetrahedron relations on the Psi images:
///   X_ij + X_ji = 0;  [X_ij, X_jk] = 2(X_ij + X_jk);
///   [X_hi,[X_hi,[X_hi,X_jk]]] = 4[X_hi,X_jk].
inline Report verify_tet_relations() {
  Report r("tet");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      detail::check_eq(r, "antisym", detail::idx({i, j}), psi({i, j}) + psi({j, i}), LoopElem());
    }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        if (i == j || j == k || i == k) continue;
        LoopElem a = psi({i, j}), b = psi({j, k});
        detail::check_eq(r, "triangle", detail::idx({i, j, k}), bracket(a, b), (a + b) * RingElem(2));
      }
  for (int h = 0; h < 4; ++h)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          if (h == i || h == j || h == k || i == j || i == k || j == k) continue;
          LoopElem a = psi({h, i}), b = psi({j, k});
          LoopElem ab = bracket(a, b);
          detail::check_eq(r, "dolan_grady", detail::idx({h, i, j, k}), ad_power(a, 2, ab), ab * RingElem(4));
        }
  return r;
}

/// Relations of the three-generator presentation with z_i := u_i, together
/// with their derived consequences.
inline Report verify_z_relations() {
  Report r("z");
  auto z = [](int i) { return LoopElem::basis(((i % 3) + 3) % 3); };
  auto br = [](const LoopElem& a, const LoopElem& b) { return bracket(a, b); };
  for (int i = 0; i < 3; ++i) {
    const auto is = detail::idx({i});
    detail::check_eq(r, "cyclic_triple", is, br(br(z(i), z(i + 1)), z(i + 2)), LoopElem());
    detail::check_eq(r, "ad_square", is, br(z(i), br(z(i), z(i + 1))), z(i + 1) + br(z(i + 2), z(i)));
    LoopElem c = br(z(i + 1), z(i));
    detail::check_eq(r, "quartic", is, br(ad_power(z(i + 1), 2, c), c), LoopElem());
    detail::check_eq(r, "bracket_of_brackets", is, br(br(z(i - 1), z(i)), br(z(i), z(i + 1))), z(i));
    LoopElem lhs = ad_power(br(z(i), z(i + 1)), 3, z(i + 1));
    LoopElem rhs = ad_power(z(i + 1), 2, z(i)) - ad_power(z(i + 1), 4, z(i));
    detail::check_eq(r, "ad_cubed", is, lhs, rhs);
    for (int j = 0; j < 3; ++j)
      detail::check_eq(r, "ad2_commute", detail::idx({i, j}), br(ad_power(z(i), 2, z(j)), z(j)), LoopElem());
  }
  return r;
}

/// Images of X_ij under the isomorphism onto the z-presentation, with
/// z_i := u_i substituted; each must equal Psi(X_ij).
inline std::vector<std::pair<TetGen, LoopElem>> phi_map_images() {
  auto z = [](int i) { return LoopElem::basis(i); };
  const RingElem two(2);
  auto plus = [&](int a, int b, int c) { return (z(a) + bracket(z(b), z(c))) * two; };
  auto minus = [&](int a, int b, int c) { return (z(a) - bracket(z(b), z(c))) * two; };
  return {{TetGen(0, 1), minus(2, 1, 2)}, {TetGen(2, 3), plus(2, 1, 2)},
          {TetGen(0, 2), minus(0, 2, 0)}, {TetGen(3, 1), plus(0, 2, 0)},
          {TetGen(0, 3), minus(1, 0, 1)}, {TetGen(1, 2), plus(1, 0, 1)}};
}

inline Report verify_phi_map() {
  Report r("phi");
  auto images = phi_map_images();
  for (const auto& [g, img] : images)
    detail::check_eq(r, "image", g.to_string(), img, psi(g));
  // Paired sums give 4 u_i.
  const RingElem four(4);
  detail::check_eq(r, "pair_sum", "X_01+X_23", images[0].second + images[1].second, LoopElem::basis(2) * four);
  detail::check_eq(r, "pair_sum", "X_02+X_31", images[2].second + images[3].second, LoopElem::basis(0) * four);
  detail::check_eq(r, "pair_sum", "X_03+X_12", images[4].second + images[5].second, LoopElem::basis(1) * four);
  return r;
}

}  // namespace tetra
