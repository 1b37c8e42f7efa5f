#include "rext/ratpoly/rational_function.hpp"

#include <cmath>
#include <limits>

#include "rext/errors.hpp"

namespace rext {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial::constant(Rational(1));
    return;
  }
  Polynomial g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  Polynomial canonical = den.primitive();
  // canonical = den * k with k = canonical.leading() / den.leading()
  Rational k = canonical.leading() / den.leading();
  num_ = num * k;
  den_ = std::move(canonical);
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::even_to_square_variable(const Rational& c) const {
  Polynomial n = num_;
  Polynomial d = den_;
  if (n.parity() == -1 && d.parity() == -1) {
    n = n.divide_by_power(1);
    d = d.divide_by_power(1);
  }
  return RationalFunction(n.even_to_square_variable(c), d.even_to_square_variable(c));
}

RationalFunction RationalFunction::compose_scaled_square(const Rational& c) const {
  return RationalFunction(num_.compose_scaled_square(c), den_.compose_scaled_square(c));
}

std::optional<int> RationalFunction::parity() const {
  auto pn = num_.parity();
  auto pd = den_.parity();
  if (!pn || !pd) return std::nullopt;
  return *pn * *pd;
}

Rational RationalFunction::operator()(const Rational& z) const {
  Rational d = den_(z);
  if (d == 0) throw PoleEvaluation("denominator vanishes at z = " + to_compact_string(z));
  return num_(z) / d;
}

double RationalFunction::evaluate(double z) const {
  double d = den_.evaluate(z);
  if (d == 0.0) throw PoleEvaluation("denominator vanishes at z = " + std::to_string(z));
  return num_.evaluate(z) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw ZeroDenominator("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace rext
