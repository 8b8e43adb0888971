#pragma once

// Triple algebra on a commutative algebra with an S3 action (phi of order 3,
// tau of order 2, tau phi = phi^2 tau) and an element s with
// s phi(s) phi^2(s) = 1 = s tau(s):
//   a . b = tau phi(a) * tau phi^2(b),   conj(a) = s tau(a).
// On A with phi_A, tau_A and s = -t' this is the structure carried by the
// u0-component of g.

#include "tetra/loop.hpp"
#include "tetra/report.hpp"
#include "tetra/ring.hpp"
#include "tetra/s4.hpp"

#include <string>

namespace tetra {

class InvalidSAction : public Error {
 public:
  using Error::Error;
};
class InvalidS : public Error {
 public:
  using Error::Error;
};

class TripleAlgebra {
 public:
  TripleAlgebra(RingAut phi, RingAut tau, RingElem s) : phi_(std::move(phi)), tau_(std::move(tau)), s_(std::move(s)) {
    const RingAut id = RingAut::identity();
    const RingAut phi2 = phi_ * phi_;
    if (!(phi2 * phi_ == id)) throw InvalidSAction("phi^3 != id");
    if (!(tau_ * tau_ == id)) throw InvalidSAction("tau^2 != id");
    if (!(tau_ * phi_ == phi2 * tau_)) throw InvalidSAction("tau phi != phi^2 tau");
    if (s_ * phi_(s_) * phi2(s_) != RingElem(1)) throw InvalidS("s phi(s) phi^2(s) != 1 for s = " + s_.to_string());
    if (s_ * tau_(s_) != RingElem(1)) throw InvalidS("s tau(s) != 1 for s = " + s_.to_string());
    tp_ = tau_ * phi_;
    tp2_ = tau_ * phi2;
  }

  /// phi_A, tau_A, s = -t'.
  static TripleAlgebra standard() { return TripleAlgebra(phi_a_map(), tau_a_map(), -RingElem::t_prime()); }

  RingElem product(const RingElem& a, const RingElem& b) const { return tp_(a) * tp2_(b); }
  RingElem conj(const RingElem& a) const { return s_ * tau_(a); }

  const RingAut& phi() const { return phi_; }
  const RingAut& tau() const { return tau_; }
  const RingElem& s() const { return s_; }

  /// delta_1(a,b)(c) = conj(b).(a.c) - conj(a).(b.c)
  RingElem delta1(const RingElem& a, const RingElem& b, const RingElem& c) const {
    return product(conj(b), product(a, c)) - product(conj(a), product(b, c));
  }
  /// delta_2(a,b)(c) = (c.a).conj(b) - (c.b).conj(a)
  RingElem delta2(const RingElem& a, const RingElem& b, const RingElem& c) const {
    return product(product(c, a), conj(b)) - product(product(c, b), conj(a));
  }

 private:
  RingAut phi_, tau_;
  RingElem s_;
  RingAut tp_ = RingAut::identity(), tp2_ = RingAut::identity();
};

inline TripleAlgebra make_triple_algebra(RingAut phi, RingAut tau, RingElem s) {
  return TripleAlgebra(std::move(phi), std::move(tau), std::move(s));
}

namespace detail {
inline void check_ring(Report& r, const std::string& name, const std::string& idx, const RingElem& lhs,
                       const RingElem& rhs) {
  RingElem d = lhs - rhs;
  r.add(name, idx, d.is_zero(), d.to_string());
}
}  // namespace detail

/// Involution, anti-homomorphism, delta_1 = delta_2 = 0 and
/// conj(b).(a.c) = tau phi(s) phi^2(ab) c on sampled triples.
template <class Sampler>
Report verify_nlrta(const TripleAlgebra& ta, Sampler&& sample, int samples = 8) {
  Report r("nlrta");
  const RingAut phi2 = ta.phi() * ta.phi();
  const RingElem tps = ta.tau()(ta.phi()(ta.s()));
  r.add("unit_s_phi", ta.s().to_string(), ta.s() * ta.phi()(ta.s()) * phi2(ta.s()) == RingElem(1));
  r.add("unit_s_tau", ta.s().to_string(), ta.s() * ta.tau()(ta.s()) == RingElem(1));
  for (int i = 0; i < samples; ++i) {
    RingElem a = sample(), b = sample(), c = sample();
    const std::string tag = "#" + std::to_string(i);
    detail::check_ring(r, "involution", tag, ta.conj(ta.conj(a)), a);
    detail::check_ring(r, "anti_hom", tag, ta.conj(ta.product(a, b)), ta.product(ta.conj(b), ta.conj(a)));
    detail::check_ring(r, "delta1", tag, ta.delta1(a, b, c), RingElem());
    detail::check_ring(r, "delta2", tag, ta.delta2(a, b, c), RingElem());
    detail::check_ring(r, "symmetric_form", tag, ta.product(ta.conj(b), ta.product(a, c)), tps * phi2(a * b) * c);
  }
  return r;
}

/// The standard structure read inside g, with iota_i(a) = u_i phi_A^i(a):
/// iota_0(conj a) = -tau(iota_0(a)) and iota_0(conj(a.b)) = [iota_1(a), iota_2(b)].
template <class Sampler>
Report verify_nlrta_embedding(Sampler&& sample, int samples = 8) {
  Report r("nlrta");
  const TripleAlgebra ta = TripleAlgebra::standard();
  auto iota = [](int i, const RingElem& a) {
    RingElem b = a;
    for (int k = 0; k < i; ++k) b = phi_a(b);
    return LoopElem::basis(i, b);
  };
  for (int i = 0; i < samples; ++i) {
    RingElem a = sample(), b = sample();
    const std::string tag = "#" + std::to_string(i);
    detail::check_eq(r, "iota_conj", tag, iota(0, ta.conj(a)), -apply_gen(Gen::Tau, iota(0, a)));
    detail::check_eq(r, "iota_product", tag, iota(0, ta.conj(ta.product(a, b))), bracket(iota(1, a), iota(2, b)));
  }
  return r;
}

}  // namespace tetra
