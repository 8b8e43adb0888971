#pragma once

#include "tetra/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tetra {

/// Dense univariate polynomial over Q in the indeterminate t.
/// Coefficients are stored lowest degree first; the leading coefficient is
/// never zero (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }
  static Poly monomial(const Rat& c, std::size_t k) {
    std::vector<Rat> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly t() { return monomial(1, 1); }
  /// (t - r)
  static Poly linear(const Rat& r) { return Poly{-r, Rat(1)}; }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const Rat& lead() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }

  Rat eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Poly derivative() const {
    std::vector<Rat> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rat(k));
    return Poly(std::move(d));
  }

  /// p(t + s)
  Poly shift(const Rat& s) const {
    // Horner in the shifted variable.
    Poly r;
    Poly lin{s, Rat(1)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this / lead();
  }

  /// Multiplicity of the root r, and the cofactor with that root removed.
  std::pair<unsigned, Poly> strip_root(const Rat& r) const {
    unsigned m = 0;
    Poly p = *this;
    if (p.is_zero()) return {0, p};
    while (p.eval(r) == 0) {
      p = p.divide_linear(r);
      ++m;
    }
    return {m, p};
  }

  /// Exact quotient by (t - r); the remainder is discarded.
  Poly divide_linear(const Rat& r) const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> q(c_.size() - 1);
    Rat carry = 0;
    for (std::size_t k = c_.size(); k-- > 1;) {
      carry = c_[k] + carry * r;
      q[k - 1] = carry;
    }
    return Poly(std::move(q));
  }

  Poly pow(unsigned n) const {
    Poly r = constant(1);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const Rat& s) {
    if (s == 0) return Poly();
    for (auto& x : a.c_) x *= s;
    return a;
  }
  friend Poly operator*(const Rat& s, Poly a) { return std::move(a) * s; }
  friend Poly operator/(Poly a, const Rat& s) {
    if (s == 0) throw Error("polynomial division by zero scalar");
    for (auto& x : a.c_) x /= s;
    return a;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rat> r = a.c_;
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> q(a.c_.size() - b.c_.size() + 1);
    const Rat inv = 1 / b.lead();
    for (std::size_t k = q.size(); k-- > 0;) {
      Rat f = r[k + b.c_.size() - 1] * inv;
      q[k] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= f * b.c_[j];
    }
    r.resize(b.c_.size() - 1);
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  bool divisible_by(const Poly& b) const {
    if (b.is_zero()) return is_zero();
    return divmod(*this, b).second.is_zero();
  }

  /// Human-readable form in ascending degree, e.g. "1 - 2*t + 3/4*t^2".
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      const Rat& c = c_[k];
      if (c == 0) continue;
      Rat mag = abs(c);
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      first = false;
      if (k == 0) {
        s += tetra::to_string(mag);
        continue;
      }
      if (mag != 1) s += tetra::to_string(mag) + "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    auto r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace tetra
