#pragma once

#include <string>

#include "rext/domain.hpp"
#include "rext/models/frequency.hpp"
#include "rext/ratpoly/rational_function.hpp"

namespace rext {

/// Additive pieces of an even potential written in t = omega x^2:
///   V = omega * [ polynomial(t) + inverse(1/t) + correction(t) ]
/// The polynomial part carries the oscillator term (its t coefficient c gives
/// c omega^2 x^2) and the constant (a multiple of omega). The inverse part
/// holds powers of 1/t, so its first coefficient b is the b/x^2 barrier.
/// The correction is a proper fraction whose denominator does not vanish at 0.
struct PotentialTerms {
  Polynomial polynomial;
  Polynomial inverse;  // coefficient k multiplies t^-(k+1)
  RationalFunction correction;

  Rational quadratic() const { return polynomial.coefficient(1); }
  Rational constant() const { return polynomial.coefficient(0); }
  Rational inverse_square() const { return inverse.coefficient(0); }
};

/// One-axis potential V(x) = omega * U(z) with z = sqrt(omega/2) x and U an
/// exact rational function. Every potential of the catalog has this form.
class PotentialForm {
 public:
  PotentialForm() = default;
  PotentialForm(Domain domain, Frequency omega, RationalFunction u);

  Domain domain() const { return domain_; }
  const Frequency& omega() const { return omega_; }
  /// U(z), the potential in units of omega.
  const RationalFunction& in_z() const { return u_; }
  /// The same function in t = omega x^2 = 2 z^2; U must be even.
  RationalFunction in_t() const;
  PotentialTerms terms() const;

  /// V + c omega.
  PotentialForm shifted(const Rational& c) const;
  double operator()(double x) const;

  /// Readable form such as "1/4*w^2*x^2 + 4*w/(w*x^2 + 3) - 24*w/(w*x^2 + 3)^2 + 2/x^2 - w".
  std::string render(const std::string& var = "x", const std::string& freq = "w") const;

  friend bool operator==(const PotentialForm& a, const PotentialForm& b) {
    return a.domain_ == b.domain_ && a.omega_ == b.omega_ && a.u_ == b.u_;
  }

 private:
  Domain domain_ = Domain::full;
  Frequency omega_;
  RationalFunction u_;
};

/// Split F(t) into the additive pieces described by PotentialTerms.
PotentialTerms decompose_in_t(const RationalFunction& f);

}  // namespace rext
