#pragma once

#include <optional>
#include <vector>

#include "rext/ratpoly/rational_function.hpp"

namespace rext {

/// f(x) = amplitude * z^power * num(z)/den(z) * exp(gauss_sign * z^2 / 2),
/// with z = scale * x.
///
/// The power is an exact rational so that half-integer prefactors such as
/// r^(3/2) stay structural. After normalization num and den carry no factor
/// of z (those move into the power) and num/den is a canonical
/// RationalFunction. The zero function has num = 0 and power = 0.
class ExpPolyFunction {
 public:
  ExpPolyFunction() = default;
  ExpPolyFunction(Rational power, RationalFunction part, int gauss_sign, double scale, double amplitude = 1.0);

  /// exp(gauss_sign z^2/2) alone.
  static ExpPolyFunction gaussian(int gauss_sign, double scale);

  const Rational& power() const { return power_; }
  const Polynomial& num() const { return part_.num(); }
  const Polynomial& den() const { return part_.den(); }
  const RationalFunction& rational_part() const { return part_; }
  int gauss_sign() const { return gauss_sign_; }
  double scale() const { return scale_; }
  double amplitude() const { return amplitude_; }
  bool is_zero() const { return part_.is_zero(); }

  /// d/dx, i.e. scale * d/dz, in exact arithmetic.
  ExpPolyFunction derivative() const;
  /// 1/f; flips the Gaussian sign and negates the power.
  ExpPolyFunction reciprocal() const;
  ExpPolyFunction with_amplitude(double amplitude) const;

  /// Throws PoleEvaluation when the denominator (or a negative power of z)
  /// is singular at z = scale*x, DomainError for a fractional power at x < 0.
  double operator()(double x) const;
  /// z^power * num/den at an exact point, without Gaussian or amplitude;
  /// the power must be an integer.
  Rational exact_prefactor(const Rational& z) const;
  /// +1 even, -1 odd, nullopt when mixed or when the power is fractional.
  std::optional<int> parity() const;

  ExpPolyFunction operator-() const { return with_amplitude(-amplitude_); }
  /// Multiplies by a rational function of z.
  friend ExpPolyFunction operator*(const ExpPolyFunction& f, const RationalFunction& r);
  friend ExpPolyFunction operator*(const RationalFunction& r, const ExpPolyFunction& f) { return f * r; }
  friend ExpPolyFunction operator*(const ExpPolyFunction& f, double c) { return f.with_amplitude(f.amplitude_ * c); }
  /// Both terms must share Gaussian sign and scale, and their powers must
  /// differ by an integer.
  friend ExpPolyFunction operator+(const ExpPolyFunction& a, const ExpPolyFunction& b);
  friend ExpPolyFunction operator-(const ExpPolyFunction& a, const ExpPolyFunction& b) { return a + (-b); }

 private:
  void normalize();

  Rational power_{0};
  RationalFunction part_;
  int gauss_sign_ = -1;
  double scale_ = 1.0;
  double amplitude_ = 1.0;
  double power_d_ = 0.0;
  std::vector<double> num_d_;
  std::vector<double> den_d_;
};

ExpPolyFunction exppoly_derivative(const ExpPolyFunction& f);
double exppoly_eval(const ExpPolyFunction& f, double x);

}  // namespace rext
