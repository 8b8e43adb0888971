#pragma once

// A two-dimensional central extension of g by the residue cocycle
//   psi(s ⊗ a, s' ⊗ b) = T(s, s') (Res_0(a db), Res_1(a db)),
// with T the trace form of the defining 2x2 representation, together with
// lifts X~_ij of the tetrahedron generators and the signed S4 action.

#include "tetra/linalg.hpp"
#include "tetra/loop.hpp"
#include "tetra/report.hpp"
#include "tetra/s4.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace tetra {

struct ExtElem {
  LoopElem loop;
  Rat c0 = 0, c1 = 0;  ///< coordinates along K0, K1

  static ExtElem central(Rat a, Rat b) { return {LoopElem(), std::move(a), std::move(b)}; }

  bool is_zero() const { return loop.is_zero() && c0 == 0 && c1 == 0; }
  bool is_central() const { return loop.is_zero(); }

  friend ExtElem operator+(const ExtElem& x, const ExtElem& y) { return {x.loop + y.loop, x.c0 + y.c0, x.c1 + y.c1}; }
  friend ExtElem operator-(const ExtElem& x, const ExtElem& y) { return {x.loop - y.loop, x.c0 - y.c0, x.c1 - y.c1}; }
  friend ExtElem operator-(const ExtElem& x) { return {-x.loop, -x.c0, -x.c1}; }
  friend ExtElem operator*(const ExtElem& x, const Rat& s) { return {x.loop * RingElem(s), x.c0 * s, x.c1 * s}; }
  friend bool operator==(const ExtElem&, const ExtElem&) = default;

  /// "<loop> + K0*(c0) + K1*(c1)", zero parts omitted.
  std::string to_string() const {
    std::string s = loop.is_zero() ? std::string() : loop.to_string();
    auto term = [&](const char* name, const Rat& c) {
      if (c == 0) return;
      if (!s.empty()) s += " + ";
      s += name;
      if (c != 1) s += "*(" + tetra::to_string(c) + ")";
    };
    term("K0", c0);
    term("K1", c1);
    return s.empty() ? "0" : s;
  }
};

/// Central charge (c0, c1); the value at infinity is -c0 - c1.
struct CentralCharge {
  Rat c0 = 0, c1 = 0;
  Rat c_inf() const { return -c0 - c1; }
  ExtElem elem() const { return ExtElem::central(c0, c1); }
  friend bool operator==(const CentralCharge&, const CentralCharge&) = default;
  std::string to_string() const { return "(" + tetra::to_string(c0) + ", " + tetra::to_string(c1) + ")"; }
};

/// Trace form on sl2 in the basis x, y, z: 2 on the diagonal, -2 elsewhere.
inline Rat trace_form(int a, int b) { return a == b ? Rat(2) : Rat(-2); }

inline CentralCharge cocycle(const LoopElem& x, const LoopElem& y) {
  XYZElem a = u_to_xyz(x), b = u_to_xyz(y);
  CentralCharge r;
  for (int i = 0; i < 3; ++i) {
    if (a.c[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      if (b.c[static_cast<std::size_t>(j)].is_zero()) continue;
      RingElem f = a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)].derivative();
      Rat w = trace_form(i, j);
      r.c0 += w * residue_at(f, Puncture::Zero);
      r.c1 += w * residue_at(f, Puncture::One);
    }
  }
  return r;
}

inline ExtElem ext_bracket(const ExtElem& x, const ExtElem& y) {
  CentralCharge c = cocycle(x.loop, y.loop);
  return {bracket(x.loop, y.loop), c.c0, c.c1};
}

// ---------------------------------------------------------------------------
// Partitions of {0,1,2,3} into two pairs, indexed by the partner of 0 (1, 2, 3).

inline int partition_of(int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 3 || j > 3) throw Error("partition_of needs two distinct points");
  if (i == 0) return j;
  if (j == 0) return i;
  return 6 - i - j;
}

inline std::string partition_name(int p) {
  std::array<int, 2> rest{};
  std::size_t n = 0;
  for (int k = 1; k < 4; ++k)
    if (k != p) rest[n++] = k;
  return "0" + std::to_string(p) + "|" + std::to_string(rest[0]) + std::to_string(rest[1]);
}

struct LiftTable {
  std::map<std::pair<int, int>, ExtElem> lift;  ///< X~_ij
  std::array<CentralCharge, 3> charge;          ///< C_p for p = 1, 2, 3

  const ExtElem& X(int i, int j) const { return lift.at({i, j}); }
  const CentralCharge& C(int p) const { return charge[static_cast<std::size_t>(p - 1)]; }
  const CentralCharge& C(int i, int j) const { return C(partition_of(i, j)); }

  std::string to_string() const {
    std::string s;
    for (const auto& [ij, e] : lift)
      s += "X_" + std::to_string(ij.first) + std::to_string(ij.second) + "\t" + e.to_string() + "\n";
    for (int p = 1; p <= 3; ++p) s += "C_" + partition_name(p) + "\t" + C(p).to_string() + "\n";
    return s;
  }
};

namespace detail {
inline const std::vector<std::pair<int, int>>& ordered_pairs() {
  static const std::vector<std::pair<int, int>> v = [] {
    std::vector<std::pair<int, int>> r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) r.emplace_back(i, j);
    return r;
  }();
  return v;
}

inline std::size_t pair_index(int i, int j) {
  const auto& ps = ordered_pairs();
  return static_cast<std::size_t>(std::find(ps.begin(), ps.end(), std::make_pair(i, j)) - ps.begin());
}

/// Permutation sending 0, 1, 2 to i, j, k is even.
inline bool even_triple(int i, int j, int k) {
  std::array<int, 4> img{i, j, k, 6 - i - j - k};
  return Perm4(img).parity() > 0;
}

/// Smallest-support solution of m c = rhs; subsets of equal size are tried
/// in lexicographic order of their sorted unknown indices.
inline std::optional<linalg::Vec> min_support_solve(const linalg::Mat& m, const linalg::Vec& rhs, std::size_t n) {
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      linalg::Mat sub(m.size(), linalg::Vec(k));
      for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < k; ++c) sub[r][c] = m[r][pick[c]];
      if (auto x = linalg::solve(sub, rhs, k)) {
        linalg::Vec full(n, Rat(0));
        for (std::size_t c = 0; c < k; ++c) full[pick[c]] = (*x)[c];
        return full;
      }
      // next combination
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}
}  // namespace detail

/// Central parts c_ij of X~_ij = (Psi(X_ij), c_ij) such that
///   [X~_ij, X~_jk] = 2(X~_ij + X~_jk) for even (i,j,k),
///   C_ij = X~_ij + X~_ji depends only on the partition {ij | kl},
///   C_01 + C_02 + C_03 = 0.
/// Each central coordinate is solved separately for minimal support.
inline LiftTable fit_lifts() {
  const auto& pairs = detail::ordered_pairs();
  const std::size_t n = pairs.size();
  linalg::Mat m;
  std::array<linalg::Vec, 2> rhs;
  auto row = [&]() -> linalg::Vec& {
    m.push_back(linalg::Vec(n, Rat(0)));
    return m.back();
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        if (i == j || j == k || i == k || !detail::even_triple(i, j, k)) continue;
        auto& r = row();
        r[detail::pair_index(i, j)] += 2;
        r[detail::pair_index(j, k)] += 2;
        CentralCharge c = cocycle(psi({i, j}), psi({j, k}));
        rhs[0].push_back(c.c0);
        rhs[1].push_back(c.c1);
      }
  auto sym = [&](linalg::Vec& r, int i, int j, int s) {
    r[detail::pair_index(i, j)] += s;
    r[detail::pair_index(j, i)] += s;
  };
  // C_01 = C_23, C_02 = C_13, C_03 = C_12
  for (auto [a, b] : std::array<std::pair<std::pair<int, int>, std::pair<int, int>>, 3>{
           {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}}}) {
    auto& r = row();
    sym(r, a.first, a.second, 1);
    sym(r, b.first, b.second, -1);
    rhs[0].push_back(0);
    rhs[1].push_back(0);
  }
  {
    auto& r = row();
    sym(r, 0, 1, 1);
    sym(r, 0, 2, 1);
    sym(r, 0, 3, 1);
    rhs[0].push_back(0);
    rhs[1].push_back(0);
  }
  auto s0 = detail::min_support_solve(m, rhs[0], n);
  auto s1 = detail::min_support_solve(m, rhs[1], n);
  if (!s0 || !s1) throw Error("InfeasibleSystem: no central corrections satisfy the lift relations");
  LiftTable l;
  for (std::size_t k = 0; k < n; ++k) {
    auto [i, j] = pairs[k];
    l.lift[{i, j}] = ExtElem{psi({i, j}), (*s0)[k], (*s1)[k]};
  }
  for (int p = 1; p <= 3; ++p) {
    ExtElem c = l.X(0, p) + l.X(p, 0);
    l.charge[static_cast<std::size_t>(p - 1)] = {c.c0, c.c1};
  }
  return l;
}

/// Y_ij = X~_ij - 1/2 C_ij.
inline std::map<std::pair<int, int>, ExtElem> y_generators(const LiftTable& l) {
  std::map<std::pair<int, int>, ExtElem> y;
  for (const auto& [ij, x] : l.lift) y[ij] = x - l.C(ij.first, ij.second).elem() * Rat(1, 2);
  return y;
}

/// u^_0 = 1/4 (Y_02 + Y_31), u^_1 = 1/4 (Y_03 + Y_12), u^_2 = 1/4 (Y_01 + Y_23).
inline std::array<ExtElem, 3> hat_u_generators(const LiftTable& l) {
  auto y = y_generators(l);
  const Rat q(1, 4);
  return {(y.at({0, 2}) + y.at({3, 1})) * q, (y.at({0, 3}) + y.at({1, 2})) * q, (y.at({0, 1}) + y.at({2, 3})) * q};
}

// ---------------------------------------------------------------------------
// S4 on the extension.

namespace detail {
/// Central part of the canonical lift sum_i [u_{i+1}, u_{i+2} b_i] of g,
/// using u0 a = [u1, -u2 a/t'], u1 a = [u2, -u0 a/t''], u2 a = [u0, -u1 a/t].
inline std::vector<std::pair<LoopElem, LoopElem>> canonical_factors(const LoopElem& g) {
  const std::array<RingElem, 3> orbit{RingElem::t_prime(), RingElem::t_dprime(), RingElem::t()};
  std::vector<std::pair<LoopElem, LoopElem>> out;
  for (int i = 0; i < 3; ++i) {
    const auto& a = g.c[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    RingElem b = -(a * *orbit[static_cast<std::size_t>(i)].inverse());
    out.emplace_back(LoopElem::basis((i + 1) % 3), LoopElem::basis((i + 2) % 3, b));
  }
  return out;
}

inline CentralCharge canonical_center(const LoopElem& g) {
  CentralCharge c;
  for (const auto& [h, k] : canonical_factors(g)) {
    CentralCharge d = cocycle(h, k);
    c.c0 += d.c0;
    c.c1 += d.c1;
  }
  return c;
}
}  // namespace detail

/// Matrix of p on the center (k^2 chart), from p(C_q) = sgn(p) C_{p(q)}.
inline linalg::Mat central_action(const Perm4& p, const LiftTable& l) {
  // columns: C_1, C_2 and their images
  linalg::Mat b{{l.C(1).c0, l.C(2).c0}, {l.C(1).c1, l.C(2).c1}};
  Rat det = b[0][0] * b[1][1] - b[0][1] * b[1][0];
  if (det == 0) throw Error("fitted charges do not span the center");
  linalg::Mat binv{{b[1][1] / det, -b[0][1] / det}, {-b[1][0] / det, b[0][0] / det}};
  const Rat sgn(p.parity());
  linalg::Mat img = linalg::zeros(2, 2);
  for (int q = 1; q <= 2; ++q) {
    const CentralCharge& c = l.C(partition_of(p(0), p(q)));
    img[0][static_cast<std::size_t>(q - 1)] = sgn * c.c0;
    img[1][static_cast<std::size_t>(q - 1)] = sgn * c.c1;
  }
  return linalg::multiply(img, binv);
}

inline ExtElem s4_ext_apply(const Perm4& p, const ExtElem& x, const LiftTable& l) {
  ExtElem out;
  out.loop = apply(p, x.loop);
  for (const auto& [h, k] : detail::canonical_factors(x.loop)) {
    CentralCharge d = cocycle(apply(p, h), apply(p, k));
    out.c0 += d.c0;
    out.c1 += d.c1;
  }
  CentralCharge base = detail::canonical_center(x.loop);
  linalg::Vec rest = linalg::apply(central_action(p, l), {x.c0 - base.c0, x.c1 - base.c1});
  out.c0 += rest[0];
  out.c1 += rest[1];
  return out;
}

// ---------------------------------------------------------------------------

namespace detail {
inline void check_ext(Report& r, const std::string& name, const std::string& idx, const ExtElem& lhs,
                      const ExtElem& rhs) {
  ExtElem d = lhs - rhs;
  r.add(name, idx, d.is_zero(), d.to_string());
}
}  // namespace detail

/// Presentation relations with the fitted lifts: (iii) X~_ij + X~_ji = C_ij,
/// sum rule, (iv) on even triples, (v) on distinct quadruples, the Y-form
/// relations for all 24 permutations, and the S4 images of the lifts.
inline Report verify_extension(const LiftTable& l) {
  Report r("extension");
  const ExtElem zero;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) detail::check_ext(r, "iii", detail::idx({i, j}), l.X(i, j) + l.X(j, i), l.C(i, j).elem());
  detail::check_ext(r, "sum_rule", "C_01+C_02+C_03", l.C(1).elem() + l.C(2).elem() + l.C(3).elem(), zero);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        if (i == j || j == k || i == k || !detail::even_triple(i, j, k)) continue;
        detail::check_ext(r, "iv", detail::idx({i, j, k}), ext_bracket(l.X(i, j), l.X(j, k)),
                          (l.X(i, j) + l.X(j, k)) * Rat(2));
      }
  for (int h = 0; h < 4; ++h)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          if (h == i || h == j || h == k || i == j || i == k || j == k) continue;
          const ExtElem& a = l.X(h, i);
          ExtElem ab = ext_bracket(a, l.X(j, k));
          detail::check_ext(r, "v", detail::idx({h, i, j, k}), ext_bracket(a, ext_bracket(a, ab)), ab * Rat(4));
        }
  auto y = y_generators(l);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) detail::check_ext(r, "iii'", detail::idx({i, j}), y.at({i, j}) + y.at({j, i}), zero);
  for (const auto& s : Perm4::all()) {
    const ExtElem& a = y.at({s(0), s(1)});
    const ExtElem& b = y.at({s(1), s(2)});
    ExtElem rhs = (a + b) * Rat(2) - l.C(s(0), s(2)).elem() * Rat(s.parity());
    detail::check_ext(r, "YYC", s.to_string(), ext_bracket(a, b), rhs);
  }
  for (const auto& s : Perm4::all())
    for (const auto& [ij, x] : l.lift) {
      auto [i, j] = ij;
      ExtElem expect = l.X(s(i), s(j));
      if (s.parity() < 0) expect = expect - l.C(s(i), s(j)).elem();
      detail::check_ext(r, "s4_lift", s.to_string() + " " + detail::idx({i, j}), s4_ext_apply(s, x, l), expect);
    }
  auto hat = hat_u_generators(l);
  for (int i = 0; i < 3; ++i)
    detail::check_ext(r, "hat_u_projection", "u" + std::to_string(i), ExtElem{hat[static_cast<std::size_t>(i)].loop},
                      ExtElem{LoopElem::basis(i)});
  return r;
}

/// Cocycle antisymmetry and 2-cocycle identity, Jacobi in the extension, and
/// S4 bracket preservation on sampled elements.
template <class Sampler>
Report verify_cocycle(const LiftTable& l, Sampler&& sample, int samples = 8) {
  Report r("extension");
  for (int s = 0; s < samples; ++s) {
    LoopElem x = sample(), y = sample(), z = sample();
    std::string tag = "#" + std::to_string(s);
    CentralCharge a = cocycle(x, y), b = cocycle(y, x);
    r.add("antisymmetry", tag, a.c0 + b.c0 == 0 && a.c1 + b.c1 == 0);
    CentralCharge j1 = cocycle(bracket(x, y), z), j2 = cocycle(bracket(y, z), x), j3 = cocycle(bracket(z, x), y);
    Rat e0 = j1.c0 + j2.c0 + j3.c0, e1 = j1.c1 + j2.c1 + j3.c1;
    r.add("cocycle_identity", tag, e0 == 0 && e1 == 0, "(" + tetra::to_string(e0) + ", " + tetra::to_string(e1) + ")");
    ExtElem ex{x, Rat(s), Rat(1)}, ey{y, Rat(-1), Rat(s)}, ez{z, Rat(2), Rat(0)};
    detail::check_ext(r, "jacobi", tag,
                      ext_bracket(ex, ext_bracket(ey, ez)) + ext_bracket(ey, ext_bracket(ez, ex)) +
                          ext_bracket(ez, ext_bracket(ex, ey)),
                      ExtElem());
    const auto all = Perm4::all();
    const Perm4& p = all[static_cast<std::size_t>(s) % all.size()];
    detail::check_ext(r, "s4_bracket", p.to_string() + " " + tag, s4_ext_apply(p, ext_bracket(ex, ey), l),
                      ext_bracket(s4_ext_apply(p, ex, l), s4_ext_apply(p, ey, l)));
  }
  return r;
}

}  // namespace tetra
