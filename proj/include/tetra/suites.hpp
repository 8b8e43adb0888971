#pragma once

// Named verification suites, shared by the command-line tool and the test
// binaries.

#include "tetra/central_extension.hpp"
#include "tetra/loop.hpp"
#include "tetra/nlrta.hpp"
#include "tetra/onsager.hpp"
#include "tetra/random.hpp"
#include "tetra/s4.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tetra {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n{"tet", "z", "phi", "s4", "onsager", "nlrta", "extension"};
  return n;
}

namespace detail {

inline Report s4_suite(Sampler& rnd) {
  Report r("s4");
  for (const auto& p : Perm4::all()) {
    r.merge(verify_equivariance(p));
    r.merge(verify_automorphism(p, [&] { return rnd.loop(2, 1); }, 2));
  }
  // Group action: (pq)(x) = p(q(x)).
  const auto all = Perm4::all();
  for (int s = 0; s < 24; ++s) {
    const Perm4& p = all[static_cast<std::size_t>(rnd.integer(0, 23))];
    const Perm4& q = all[static_cast<std::size_t>(rnd.integer(0, 23))];
    LoopElem x = rnd.loop(2, 1);
    check_eq(r, "group_action", p.to_string() + " * " + q.to_string(), apply(p * q, x), apply(p, apply(q, x)));
  }
  // Klein grading: u_i A is the (s_1, s_2) eigenspace of (tau1, tau2); no trivial component.
  const std::array<std::array<int, 2>, 3> signs{{{1, -1}, {-1, 1}, {-1, -1}}};
  for (int s = 0; s < 12; ++s) {
    LoopElem x = rnd.loop(3, 2);
    auto parts = grade_split(x);
    for (int i = 0; i < 3; ++i) {
      const auto& g = parts[static_cast<std::size_t>(i)];
      const auto& sg = signs[static_cast<std::size_t>(i)];
      const std::string tag = "g" + std::to_string(i) + " #" + std::to_string(s);
      check_eq(r, "grading_tau1", tag, apply_gen(Gen::Tau1, g), g * RingElem(sg[0]));
      check_eq(r, "grading_tau2", tag, apply_gen(Gen::Tau2, g), g * RingElem(sg[1]));
    }
    LoopElem trivial = x + apply_gen(Gen::Tau1, x) + apply_gen(Gen::Tau2, x) +
                       apply_gen(Gen::Tau1, apply_gen(Gen::Tau2, x));
    check_eq(r, "grading_trivial_part", "#" + std::to_string(s), trivial, LoopElem());
  }
  return r;
}

inline Report census_check(const Poly& q) {
  Report r("onsager");
  const std::string jq = "J=" + q.to_string();
  const std::vector<Rat> etas{Rat(1), Rat(-1), Rat(2, 3)};
  int closed = 0;
  linalg::Vec w2t(6, Rat(0));
  w2t[2] = 1;
  for (const auto& spec : enumerate_ideal_specs(q, etas)) {
    r.add("is_ideal", spec.to_string(), is_ideal(spec));
    auto c = is_closed(spec);
    closed += c.closed ? 1 : 0;
    if (!spec.is_type_i())
      r.add("type_ii_witness", spec.to_string(), !c.closed && c.witness && *c.witness == w2t,
            c.witness ? quotient_vec_to_string(*c.witness) : "none");
  }
  r.add("closed_count", jq, closed == 9, std::to_string(closed));

  auto v = [](std::initializer_list<int> xs) {
    linalg::Vec out;
    for (int x : xs) out.emplace_back(x);
    return out;
  };
  auto table_matches = [&](const std::vector<Eigenspace>& got,
                           const std::vector<std::pair<int, std::vector<linalg::Vec>>>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
      if (got[i].value != want[i].first || !linalg::same_span(got[i].basis, want[i].second)) return false;
    return true;
  };
  EigenTable tab = eigen_table(q);
  r.add("eigen_v2t", jq,
        tab.splits && table_matches(tab.v2t, {{-1, {v({1, -1, 0, 0, 0, 0})}},
                                              {0, {v({0, 0, 1, 0, 0, 0}), v({0, 0, 0, 1, 0, 0}),
                                                   v({0, 0, 0, 0, 1, 0}), v({0, 0, 0, 0, 0, 1})}},
                                              {1, {v({1, 1, 0, 0, 0, 0})}}}));
  r.add("eigen_v1t1", jq,
        tab.splits && table_matches(tab.v1t1, {{-1, {v({0, 0, 0, 1, 0, -1})}},
                                               {0, {v({1, 0, 0, 0, 0, 0}), v({0, 1, 0, 0, 0, 0}),
                                                    v({0, 0, 1, 0, 0, 0}), v({0, 0, 0, 0, 1, 0})}},
                                               {1, {v({0, 0, 0, 1, 0, 1})}}}));
  return r;
}

inline Report onsager_suite(Sampler& rnd) {
  Report r("onsager");
  r.merge(verify_classical_relations(8));
  for (int s = 0; s < 24; ++s) {
    OnsagerElem x = rnd.onsager(3), y = rnd.onsager(3);
    check_eq(r, "embed_bracket", "#" + std::to_string(s), embed(obracket(x, y)), bracket(embed(x), embed(y)));
  }
  // With G_1 = 4 v0 and A_0 + A_1 = 4 v1: (ad G_1)^{2m}(A_0 + A_1) = 4 16^m v1 (t(t-1))^m.
  // In g, with w = (t(t-1))^m:
  //   (ad u0(t-1))^{2m}(u1) = u1 w,          (ad u0(t-1))^{2m}(u2 t) = u2 t w,
  //   (ad u0(t-1))^{2m+1}(u1) = -u2 t(t-1) w, (ad u0(t-1))^{2m+1}(u2 t) = -u1 t w.
  ClassicalImages im;
  const Poly tt1{0, -1, 1};
  const Poly t = Poly::t();
  const LoopElem g = LoopElem::basis(0, RingElem(Poly::linear(1)));
  const LoopElem u1 = LoopElem::basis(1), u2t = LoopElem::basis(2, RingElem::t());
  for (int m = 0; m <= 5; ++m) {
    const std::string tag = "m=" + std::to_string(m);
    const Poly w = tt1.pow(static_cast<unsigned>(m));
    check_eq(r, "ad_even_onsager", tag, embed(oad_power(im.G(1), 2 * m, im.A(0) + im.A(1))),
             embed(OnsagerElem::basis(1, w * (4 * rat_pow(16, static_cast<unsigned>(m))))));
    check_eq(r, "ad_even_u1", tag, ad_power(g, 2 * m, u1), LoopElem::basis(1, RingElem(w)));
    check_eq(r, "ad_even_u2t", tag, ad_power(g, 2 * m, u2t), LoopElem::basis(2, RingElem(t * w)));
    check_eq(r, "ad_odd_u1", tag, ad_power(g, 2 * m + 1, u1), LoopElem::basis(2, RingElem(-(t * Poly::linear(1) * w))));
    check_eq(r, "ad_odd_u2t", tag, ad_power(g, 2 * m + 1, u2t), LoopElem::basis(1, RingElem(-(t * w))));
  }
  for (const Poly& f : {Poly::t(), Poly{-1, 0, 1}, Poly{2, -3, 0, 1}})
    r.merge(centroid_check(f, [&] { return rnd.onsager(3); }, 4));
  r.merge(diagonal_centroid_check({Poly::t(), Poly::t(), Poly::t()}));
  Report off = diagonal_centroid_check({Poly::constant(1), Poly::t(), Poly::constant(1)});
  r.add("diagonal_not_centroid", "(1, t, 1)", !off.all_pass());
  for (const Poly& q : {Poly::constant(1), Poly::linear(2), Poly{1, 0, 1}}) r.merge(census_check(q));
  return r;
}

inline Report nlrta_suite(Sampler& rnd) {
  Report r("nlrta");
  auto sample = [&] { return rnd.ring(4, 2); };
  r.merge(verify_nlrta(TripleAlgebra::standard(), sample, 16));
  r.merge(verify_nlrta_embedding(sample, 16));
  bool rejected = false;
  try {
    make_triple_algebra(phi_a_map(), tau_a_map(), RingElem::t_prime());
  } catch (const InvalidS&) {
    rejected = true;
  }
  r.add("reject_s", "t'", rejected);
  return r;
}

inline Report extension_suite(Sampler& rnd) {
  Report r("extension");
  const LiftTable l = fit_lifts();
  r.merge(verify_extension(l));
  r.merge(verify_cocycle(l, [&] { return rnd.loop(2, 2); }, 12));
  return r;
}

}  // namespace detail

/// Reports of the named suite ("all" runs every suite). Throws on an unknown name.
inline std::vector<Report> run_suites(std::string_view name, std::uint64_t seed = 20240601) {
  std::vector<Report> out;
  Sampler rnd(seed);
  auto want = [&](const char* n) { return name == "all" || name == n; };
  bool known = name == "all";
  for (const auto& n : suite_names()) known = known || name == n;
  if (!known) throw Error("unknown suite '" + std::string(name) + "'");
  if (want("tet")) out.push_back(verify_tet_relations());
  if (want("z")) out.push_back(verify_z_relations());
  if (want("phi")) out.push_back(verify_phi_map());
  if (want("s4")) out.push_back(detail::s4_suite(rnd));
  if (want("onsager")) out.push_back(detail::onsager_suite(rnd));
  if (want("nlrta")) out.push_back(detail::nlrta_suite(rnd));
  if (want("extension")) out.push_back(detail::extension_suite(rnd));
  return out;
}

}  // namespace tetra
