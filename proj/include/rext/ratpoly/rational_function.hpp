#pragma once

#include "rext/ratpoly/polynomial.hpp"

namespace rext {

/// Quotient of two polynomials kept in canonical form: no common factor,
/// denominator with coprime integer coefficients and positive leading
/// coefficient. Two equal functions therefore compare equal member-wise.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(Rational(1))) {}
  /// Throws ZeroDenominator when den is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);
  // NOLINTNEXTLINE(google-explicit-constructor)
  RationalFunction(Polynomial p) : RationalFunction(std::move(p), Polynomial::constant(Rational(1))) {}

  static RationalFunction constant(const Rational& c) { return RationalFunction(Polynomial::constant(c)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction derivative() const;
  /// For even f(z), the function g with f(z) = g(t) under z^2 = c t.
  RationalFunction even_to_square_variable(const Rational& c) const;
  /// f(c z^2).
  RationalFunction compose_scaled_square(const Rational& c) const;
  /// +1 even, -1 odd, nullopt mixed.
  std::optional<int> parity() const;

  /// Throws PoleEvaluation at a zero of the denominator.
  Rational operator()(const Rational& z) const;
  double evaluate(double z) const;

  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Canonical reduced form of num/den.
inline RationalFunction ratfun_reduce(const Polynomial& num, const Polynomial& den) {
  return RationalFunction(num, den);
}

}  // namespace rext
