#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tetra {

/// Ground field: arbitrary-precision rationals, always kept reduced.
using Rat = mpq_class;

/// Base class for every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Rat binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rat(r);
}

inline Rat rat_pow(const Rat& base, unsigned n) {
  Rat r = 1;
  for (unsigned i = 0; i < n; ++i) r *= base;
  return r;
}

}  // namespace tetra
