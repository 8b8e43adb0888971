#pragma once

// S4 acting on g by automorphisms. Klein's group is generated by
// tau1 = (12)(30) and tau2 = (23)(10), which act A-linearly; S3 = Stab(0) is
// generated by phi = (123) and tau = (12), which act semilinearly.

#include "tetra/loop.hpp"
#include "tetra/report.hpp"

#include <array>
#include <cctype>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace tetra {

/// A permutation of {0,1,2,3}, stored by images.
class Perm4 {
 public:
  Perm4() : img_{0, 1, 2, 3} {}
  explicit Perm4(std::array<int, 4> images) : img_(images) {
    std::array<bool, 4> seen{};
    for (int v : img_) {
      if (v < 0 || v > 3 || seen[static_cast<std::size_t>(v)]) throw Error("not a permutation of {0,1,2,3}");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Perm4 identity() { return Perm4(); }
  static Perm4 tau1() { return Perm4({3, 2, 1, 0}); }
  static Perm4 tau2() { return Perm4({1, 0, 3, 2}); }
  static Perm4 phi() { return Perm4({0, 2, 3, 1}); }
  static Perm4 tau() { return Perm4({0, 2, 1, 3}); }

  /// All 24 permutations in lexicographic order of images.
  static std::vector<Perm4> all() {
    std::vector<Perm4> out;
    std::array<int, 4> a{0, 1, 2, 3};
    do out.emplace_back(a);
    while (std::next_permutation(a.begin(), a.end()));
    return out;
  }

  /// Parse cycle notation such as "(12)(30)", "(123)" or "id". Cycles are
  /// composed right to left.
  static Perm4 parse(std::string_view s) {
    Perm4 p;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    if (s.substr(i) == "id" || s.substr(i, 2) == "id") {
      i += 2;
      skip();
      if (i != s.size()) throw Error("bad permutation: " + std::string(s));
      return p;
    }
    std::vector<std::vector<int>> cycles;
    while (i < s.size()) {
      if (s[i] != '(') throw Error("bad permutation: " + std::string(s));
      ++i;
      std::vector<int> cyc;
      while (i < s.size() && s[i] != ')') {
        if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
        if (s[i] < '0' || s[i] > '3') throw Error("bad permutation: " + std::string(s));
        cyc.push_back(s[i] - '0');
        ++i;
      }
      if (i == s.size()) throw Error("bad permutation: " + std::string(s));
      ++i;
      std::array<bool, 4> seen{};
      for (int v : cyc) {
        if (seen[static_cast<std::size_t>(v)]) throw Error("repeated point in cycle: " + std::string(s));
        seen[static_cast<std::size_t>(v)] = true;
      }
      cycles.push_back(std::move(cyc));
      skip();
    }
    if (cycles.empty()) throw Error("bad permutation: " + std::string(s));
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      std::array<int, 4> img{0, 1, 2, 3};
      for (std::size_t k = 0; k < it->size(); ++k)
        img[static_cast<std::size_t>((*it)[k])] = (*it)[(k + 1) % it->size()];
      p = Perm4(img) * p;
    }
    return p;
  }

  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::array<int, 4>& images() const { return img_; }

  /// (p * q)(i) = p(q(i))
  friend Perm4 operator*(const Perm4& p, const Perm4& q) {
    std::array<int, 4> r{};
    for (int i = 0; i < 4; ++i) r[static_cast<std::size_t>(i)] = p(q(i));
    return Perm4(r);
  }

  Perm4 inverse() const {
    std::array<int, 4> r{};
    for (int i = 0; i < 4; ++i) r[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
    return Perm4(r);
  }

  /// Signature (+1 even, -1 odd).
  int parity() const {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (img_[static_cast<std::size_t>(i)] > img_[static_cast<std::size_t>(j)]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
  }

  friend bool operator==(const Perm4&, const Perm4&) = default;

  /// Disjoint-cycle form, each cycle led by its smallest point.
  std::string to_string() const {
    std::string s;
    std::array<bool, 4> done{};
    for (int i = 0; i < 4; ++i) {
      if (done[static_cast<std::size_t>(i)] || img_[static_cast<std::size_t>(i)] == i) continue;
      s += "(";
      for (int j = i; !done[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
        done[static_cast<std::size_t>(j)] = true;
        s += static_cast<char>('0' + j);
      }
      s += ")";
    }
    return s.empty() ? "id" : s;
  }

 private:
  std::array<int, 4> img_;
};

enum class Gen { Tau1, Tau2, Phi, Tau };

inline Perm4 gen_perm(Gen g) {
  switch (g) {
    case Gen::Tau1: return Perm4::tau1();
    case Gen::Tau2: return Perm4::tau2();
    case Gen::Phi: return Perm4::phi();
    case Gen::Tau: return Perm4::tau();
  }
  return {};
}

inline const char* gen_name(Gen g) {
  switch (g) {
    case Gen::Tau1: return "tau1";
    case Gen::Tau2: return "tau2";
    case Gen::Phi: return "phi";
    case Gen::Tau: return "tau";
  }
  return "?";
}

/// Word g1 g2 ... gn, read as the composite g1 ∘ g2 ∘ ... ∘ gn.
struct GenWord {
  std::vector<Gen> word;

  Perm4 evaluate() const {
    Perm4 p;
    for (Gen g : word) p = p * gen_perm(g);
    return p;
  }
  std::string to_string() const {
    std::string s;
    for (Gen g : word) {
      if (!s.empty()) s += " ";
      s += gen_name(g);
    }
    return s.empty() ? "id" : s;
  }
  friend bool operator==(const GenWord&, const GenWord&) = default;
};

/// p = k * s with k in Klein's group (word over tau1, tau2) and s = phi^a tau^b.
inline GenWord decompose(const Perm4& p) {
  const std::array<Perm4, 4> klein{Perm4::identity(), Perm4::tau1(), Perm4::tau2(), Perm4::tau1() * Perm4::tau2()};
  const std::array<std::vector<Gen>, 4> klein_words{std::vector<Gen>{}, {Gen::Tau1}, {Gen::Tau2},
                                                    {Gen::Tau1, Gen::Tau2}};
  GenWord w;
  std::size_t ki = 0;
  while (klein[ki](0) != p(0)) ++ki;
  w.word = klein_words[ki];
  Perm4 s = klein[ki].inverse() * p;  // fixes 0
  int b = s.parity() < 0 ? 1 : 0;
  Perm4 rot = b ? s * Perm4::tau() : s;
  int a = 0;
  for (Perm4 q; !(q == rot); q = q * Perm4::phi()) ++a;
  for (int i = 0; i < a; ++i) w.word.push_back(Gen::Phi);
  if (b) w.word.push_back(Gen::Tau);
  return w;
}

// ---------------------------------------------------------------------------
// Generator actions on g.

namespace detail {
/// A-linear map given by the images of x⊗1, y⊗1, z⊗1.
inline LoopElem linear_on_xyz(const LoopElem& v, const std::array<XYZElem, 3>& img) {
  XYZElem p = u_to_xyz(v);
  XYZElem r = img[0] * p.c[0] + img[1] * p.c[1] + img[2] * p.c[2];
  return xyz_to_u(r);
}
}  // namespace detail

inline LoopElem apply_gen(Gen g, const LoopElem& v) {
  const RingElem one(1), t = RingElem::t(), tp = RingElem::t_prime(), tpp = RingElem::t_dprime();
  const RingElem zero;
  switch (g) {
    case Gen::Tau1: {
      // x -> -x, y -> -(z⊗t' + x⊗(t'-1)), z -> x⊗t'' + y⊗(t''-1)
      static const std::array<XYZElem, 3> img{XYZElem{-one, zero, zero}, XYZElem{one - tp, zero, -tp},
                                              XYZElem{tpp, tpp - one, zero}};
      return detail::linear_on_xyz(v, img);
    }
    case Gen::Tau2: {
      // x -> y⊗t + z⊗(t-1), y -> -y, z -> -(x⊗t'' + y⊗(t''-1))
      static const std::array<XYZElem, 3> img{XYZElem{zero, t, t - one}, XYZElem{zero, -one, zero},
                                              XYZElem{-tpp, one - tpp, zero}};
      return detail::linear_on_xyz(v, img);
    }
    case Gen::Phi:
      // phi(u_i a) = u_{i+1} phi_A(a)
      return {phi_a(v.c[2]), phi_a(v.c[0]), phi_a(v.c[1])};
    case Gen::Tau: {
      // tau_s ⊗ tau_A with tau_s: x -> -x, y -> -z, z -> -y
      XYZElem p = u_to_xyz(v);
      return xyz_to_u(XYZElem{-tau_a(p.c[0]), -tau_a(p.c[2]), -tau_a(p.c[1])});
    }
  }
  return v;
}

inline LoopElem apply(const GenWord& w, LoopElem v) {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) v = apply_gen(*it, v);
  return v;
}

/// Action of p on g, through its Klein x S3 generator word.
inline LoopElem apply(const Perm4& p, const LoopElem& v) { return apply(decompose(p), v); }

/// Psi(X_{p(i)p(j)}) = p(Psi(X_ij)) for all 12 generators.
inline Report verify_equivariance(const Perm4& p) {
  Report r("s4");
  for (const auto& g : all_tet_gens()) {
    LoopElem lhs = apply(p, psi(g));
    LoopElem rhs = psi(TetGen(p(g.from()), p(g.to())));
    detail::check_eq(r, "equivariance", p.to_string() + " " + g.to_string(), lhs, rhs);
  }
  return r;
}

/// Bracket preservation on sampled pairs, plus the generator relations
/// phi tau1 = tau2 phi, phi tau2 = tau1 tau2 phi, tau tau1 = tau1 tau,
/// tau tau2 = tau1 tau2 tau as maps on {u0, u1, u2}.
template <class Sampler>
Report verify_automorphism(const Perm4& p, Sampler&& sample, int samples = 8) {
  Report r("s4");
  for (int s = 0; s < samples; ++s) {
    LoopElem x = sample(), y = sample();
    detail::check_eq(r, "bracket_preserved", p.to_string() + " #" + std::to_string(s), apply(p, bracket(x, y)),
                     bracket(apply(p, x), apply(p, y)));
  }
  using W = std::vector<Gen>;
  const std::array<std::pair<W, W>, 4> rels{
      std::pair<W, W>{{Gen::Phi, Gen::Tau1}, {Gen::Tau2, Gen::Phi}},
      {{Gen::Phi, Gen::Tau2}, {Gen::Tau1, Gen::Tau2, Gen::Phi}},
      {{Gen::Tau, Gen::Tau1}, {Gen::Tau1, Gen::Tau}},
      {{Gen::Tau, Gen::Tau2}, {Gen::Tau1, Gen::Tau2, Gen::Tau}}};
  for (const auto& [lhs, rhs] : rels) {
    GenWord l{lhs}, rw{rhs};
    for (int i = 0; i < 3; ++i)
      detail::check_eq(r, "generator_relation", l.to_string() + " = " + rw.to_string() + " on u" + std::to_string(i),
                       apply(l, LoopElem::basis(i)), apply(rw, LoopElem::basis(i)));
  }
  return r;
}

}  // namespace tetra
