#pragma once

// Seeded samplers for property checks.

#include "tetra/loop.hpp"
#include "tetra/onsager.hpp"
#include "tetra/ring.hpp"

#include <cstdint>
#include <random>

namespace tetra {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 20240601) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Small integers, and now and then a fraction.
  Rat rational(int bound = 5) {
    Rat r(integer(-bound, bound));
    if (integer(0, 3) == 0) r /= integer(1, bound);
    return r;
  }

  Poly poly(int max_degree, int bound = 5) {
    std::vector<Rat> c;
    const int d = integer(0, max_degree);
    for (int i = 0; i <= d; ++i) c.push_back(rational(bound));
    return Poly(std::move(c));
  }

  /// p / (t^a (t-1)^b) with deg p <= max_degree and a, b <= max_exp.
  RingElem ring(int max_degree = 4, int max_exp = 2) {
    return RingElem(poly(max_degree), static_cast<unsigned>(integer(0, max_exp)),
                    static_cast<unsigned>(integer(0, max_exp)));
  }

  LoopElem loop(int max_degree = 3, int max_exp = 2) {
    return {ring(max_degree, max_exp), ring(max_degree, max_exp), ring(max_degree, max_exp)};
  }

  OnsagerElem onsager(int max_degree = 4) { return {poly(max_degree), poly(max_degree), poly(max_degree)}; }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace tetra
