#pragma once

// Oracles that do not go through the library's own conversions: evaluation
// of ring elements at rational points, and a 2x2 matrix model of g built
// directly from the matrices of x, y, z.

#include "tetra/tetra.hpp"

#include <array>

namespace oracle {

using tetra::Poly;
using tetra::Rat;
using tetra::RingElem;

inline Rat eval_poly(const Poly& p, const Rat& r) {
  Rat acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * r + *it;
  return acc;
}

/// x(r) for r not in {0, 1}.
inline Rat at(const RingElem& x, const Rat& r) {
  Rat d = 1;
  for (unsigned i = 0; i < x.den_t(); ++i) d *= r;
  for (unsigned i = 0; i < x.den_t1(); ++i) d *= r - 1;
  return eval_poly(x.num(), r) / d;
}

/// Points avoiding 0 and 1 used for evaluation checks.
inline const std::array<Rat, 5>& points() {
  static const std::array<Rat, 5> p{Rat(2), Rat(-1), Rat(1, 3), Rat(5, 2), Rat(-7, 4)};
  return p;
}

/// Equality of ring elements checked only through values at sample points.
inline bool same_values(const RingElem& a, const RingElem& b) {
  for (const auto& r : points())
    if (at(a, r) != at(b, r)) return false;
  return true;
}

// 2x2 matrices over A.
struct M2 {
  std::array<std::array<RingElem, 2>, 2> e{};
  std::array<RingElem, 2>& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
  const std::array<RingElem, 2>& operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
  friend bool operator==(const M2&, const M2&) = default;
};

inline M2 scalar_matrix(int a, int b, int c, int d) {
  return {{{{RingElem(a), RingElem(b)}, {RingElem(c), RingElem(d)}}}};
}

inline M2 operator+(const M2& a, const M2& b) {
  M2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}
inline M2 operator-(const M2& a, const M2& b) {
  M2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}
inline M2 operator*(const M2& a, const M2& b) {
  M2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}
inline M2 operator*(const M2& a, const RingElem& s) {
  M2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] * s;
  return r;
}
inline M2 commutator(const M2& a, const M2& b) { return a * b - b * a; }
inline RingElem trace(const M2& a) { return a[0][0] + a[1][1]; }
inline M2 derivative(const M2& a) {
  M2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][j].derivative();
  return r;
}

inline const M2& X() {
  static const M2 m = scalar_matrix(-1, 2, 0, 1);
  return m;
}
inline const M2& Y() {
  static const M2 m = scalar_matrix(-1, 0, -2, 1);
  return m;
}
inline const M2& Z() {
  static const M2 m = scalar_matrix(1, 0, 0, -1);
  return m;
}

/// u0 = 1/4 (z + x t'' + y (t''-1)), u1 = 1/4 (x + y t + z (t-1)), u2 = 1/4 (y + z t' + x (t'-1)).
inline std::array<M2, 3> u_matrices() {
  const RingElem one(1), t = RingElem::t(), tp = RingElem::t_prime(), tpp = RingElem::t_dprime();
  const RingElem q(Rat(1, 4));
  return {(Z() + X() * tpp + Y() * (tpp - one)) * q, (X() + Y() * t + Z() * (t - one)) * q,
          (Y() + Z() * tp + X() * (tp - one)) * q};
}

/// Matrices of the tetrahedron generators, straight from their xyz formulas.
inline M2 tet_matrix(int i, int j) {
  const RingElem one(1), t = RingElem::t(), tp = RingElem::t_prime(), tpp = RingElem::t_dprime();
  if (i > j) return tet_matrix(j, i) * RingElem(-1);
  switch (i * 4 + j) {
    case 1: return Z() * tp + X() * (tp - one);
    case 2: return X() * tpp + Y() * (tpp - one);
    case 3: return Y() * t + Z() * (t - one);
    case 6: return X();
    case 7: return Z() * RingElem(-1);
    default: return Y();
  }
}

inline M2 matrix(const tetra::LoopElem& x) {
  static const auto u = u_matrices();
  return u[0] * x.c[0] + u[1] * x.c[1] + u[2] * x.c[2];
}

/// Residue-pairing cocycle straight from the matrix model: Res tr(M_x dM_y/dt).
inline tetra::CentralCharge cocycle(const tetra::LoopElem& x, const tetra::LoopElem& y) {
  RingElem f = trace(matrix(x) * derivative(matrix(y)));
  return {tetra::residue_at(f, tetra::Puncture::Zero), tetra::residue_at(f, tetra::Puncture::One)};
}

}  // namespace oracle
