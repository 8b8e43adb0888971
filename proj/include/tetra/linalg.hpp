#pragma once

// Small dense linear algebra over Q. Sizes here never exceed a few dozen.

#include "tetra/poly.hpp"
#include "tetra/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace tetra::linalg {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major

inline Mat zeros(std::size_t rows, std::size_t cols) { return Mat(rows, Vec(cols, Rat(0))); }

inline Mat identity(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat r = zeros(m[0].size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
  return r;
}

inline Mat multiply(const Mat& a, const Mat& b) {
  Mat r = zeros(a.size(), b.empty() ? 0 : b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < b[k].size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Vec apply(const Mat& a, const Vec& v) {
  Vec r(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(Mat& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rat inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Mat m) {
  if (m.empty()) return 0;
  return rref(m, m[0].size()).size();
}

/// Basis of {x : m x = 0}, with `cols` unknowns.
inline std::vector<Vec> nullspace(Mat m, std::size_t cols) {
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of m x = rhs, or nullopt when inconsistent.
inline std::optional<Vec> solve(const Mat& m, const Vec& rhs, std::size_t cols) {
  Mat aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  auto pivots = rref(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec x(cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

/// Whether v lies in the span of the given vectors.
inline bool in_span(const std::vector<Vec>& span, const Vec& v) {
  if (std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; })) return true;
  if (span.empty()) return false;
  Mat m(span.begin(), span.end());
  std::size_t r0 = rank(m);
  m.push_back(v);
  return rank(m) == r0;
}

/// Equality of the spans of two families of vectors.
inline bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  for (auto& v : a)
    if (!in_span(b, v)) return false;
  for (auto& v : b)
    if (!in_span(a, v)) return false;
  return true;
}

/// Characteristic polynomial det(x I - m) via Faddeev-LeVerrier.
inline Poly charpoly(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  Mat mk = zeros(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
    Mat next = multiply(m, mk);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    mk = std::move(next);
    Mat am = multiply(m, mk);
    Rat tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / Rat(static_cast<long>(k));
  }
  return Poly(std::move(c));
}

namespace detail {
inline std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> d;
  for (mpz_class i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
  }
  return d;
}
}  // namespace detail

/// Distinct rational roots of p, ascending. p must be nonzero.
inline std::vector<Rat> rational_roots(const Poly& p) {
  std::vector<Rat> roots;
  auto [m0, rest] = p.strip_root(0);
  if (m0 > 0) roots.push_back(0);
  if (rest.degree() >= 1) {
    // Clear denominators to get an integer polynomial.
    mpz_class l = 1;
    for (auto& c : rest.coeffs()) l = lcm(l, mpz_class(c.get_den()));
    mpz_class lead = mpz_class(rest.lead() * l);
    mpz_class tail = mpz_class(rest.coeff(0) * l);
    for (auto& num : detail::divisors(tail))
      for (auto& den : detail::divisors(lead))
        for (int sign : {1, -1}) {
          Rat cand(mpz_class(sign * num), den);
          cand.canonicalize();
          if (rest.eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace tetra::linalg
