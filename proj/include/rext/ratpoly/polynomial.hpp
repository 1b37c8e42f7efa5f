#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "rext/ratpoly/rational.hpp"

namespace rext {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficient k multiplies z^k. The highest stored coefficient is nonzero,
/// so the zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  /// The identity polynomial z.
  static Polynomial identity();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of z^k; zero outside the stored range.
  const Rational& coefficient(int k) const;
  const Rational& leading() const;
  /// Lowest power with a nonzero coefficient (the z-adic valuation); 0 for zero.
  int valuation() const;

  Polynomial derivative() const;
  /// p(c z^2) as a polynomial in z.
  Polynomial compose_scaled_square(const Rational& c) const;
  /// p(-z^2); builds L(-z^2) from L(s).
  Polynomial compose_neg_square() const { return compose_scaled_square(Rational(-1)); }
  /// For even p(z), the polynomial q with p(z) = q(t) under z^2 = c t.
  Polynomial even_to_square_variable(const Rational& c) const;
  /// p(z) / z^k; the low coefficients must vanish.
  Polynomial divide_by_power(int k) const;
  Polynomial multiply_by_power(int k) const;

  Polynomial monic() const;
  /// Scaled to coprime integer coefficients with a positive leading one.
  Polynomial primitive() const;
  /// +1 even, -1 odd, nullopt mixed; the zero polynomial reports even.
  std::optional<int> parity() const;

  Rational operator()(const Rational& z) const;
  double evaluate(double z) const;
  std::vector<double> to_doubles() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder with deg(remainder) < deg(divisor).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Number of distinct real roots in the open interval (lo, hi); an empty
/// bound means infinity. Exact, by Sturm sequences.
int count_real_roots(const Polynomial& p, std::optional<Rational> lo, std::optional<Rational> hi);

/// Horner evaluation of a dense coefficient vector.
inline double horner(const std::vector<double>& coeffs, double z) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace rext
