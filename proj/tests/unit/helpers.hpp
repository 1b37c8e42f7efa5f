#pragma once

#include <initializer_list>
#include <random>

#include "rext/ratpoly/polynomial.hpp"

namespace testing {

inline rext::Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<rext::Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return rext::Polynomial(std::move(c));
}

inline rext::Rational q(long n, long d = 1) { return rext::Rational(n, d); }

/// Polynomials with small random rational coefficients, deterministic per seed.
class PolyGen {
 public:
  explicit PolyGen(unsigned seed) : rng_(seed) {}

  rext::Polynomial next(int max_degree = 5) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<rext::Rational> c(static_cast<std::size_t>(deg(rng_)) + 1);
    for (auto& v : c) v = rext::Rational(num(rng_), den(rng_));
    return rext::Polynomial(std::move(c));
  }

  rext::Rational rational() {
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 7);
    return rext::Rational(num(rng_), den(rng_));
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace testing
