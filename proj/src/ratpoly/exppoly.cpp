#include "rext/ratpoly/exppoly.hpp"

#include <cmath>
#include <stdexcept>

#include "rext/errors.hpp"

namespace rext {

ExpPolyFunction::ExpPolyFunction(Rational power, RationalFunction part, int gauss_sign, double scale, double amplitude)
    : power_(std::move(power)), part_(std::move(part)), gauss_sign_(gauss_sign), scale_(scale), amplitude_(amplitude) {
  if (gauss_sign != 1 && gauss_sign != -1) throw std::invalid_argument("gauss_sign must be +1 or -1");
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
  normalize();
}

ExpPolyFunction ExpPolyFunction::gaussian(int gauss_sign, double scale) {
  return ExpPolyFunction(Rational(0), RationalFunction::constant(Rational(1)), gauss_sign, scale);
}

void ExpPolyFunction::normalize() {
  if (part_.is_zero() || amplitude_ == 0.0) {
    power_ = 0;
    part_ = RationalFunction();
    amplitude_ = 1.0;
  } else {
    int vn = part_.num().valuation();
    int vd = part_.den().valuation();
    if (vn > 0 || vd > 0) {
      power_ += vn - vd;
      part_ = RationalFunction(part_.num().divide_by_power(vn), part_.den().divide_by_power(vd));
    }
  }
  power_d_ = to_double(power_);
  num_d_ = part_.num().to_doubles();
  den_d_ = part_.den().to_doubles();
}

ExpPolyFunction ExpPolyFunction::derivative() const {
  if (is_zero()) return *this;
  // d/dz [z^p N/D e^{s z^2/2}] = z^(p-1) e^{s z^2/2} [p N D + z (N'D - N D') + s z^2 N D] / D^2
  const Polynomial& n = part_.num();
  const Polynomial& d = part_.den();
  const Polynomial z = Polynomial::identity();
  Polynomial top = power_ * (n * d) + z * (n.derivative() * d - n * d.derivative()) +
                   Rational(gauss_sign_) * (z * z * n * d);
  return ExpPolyFunction(power_ - 1, RationalFunction(top, d * d), gauss_sign_, scale_, amplitude_ * scale_);
}

ExpPolyFunction ExpPolyFunction::reciprocal() const {
  if (is_zero()) throw ZeroDenominator("reciprocal of the zero function");
  return ExpPolyFunction(-power_, RationalFunction(part_.den(), part_.num()), -gauss_sign_, scale_, 1.0 / amplitude_);
}

ExpPolyFunction ExpPolyFunction::with_amplitude(double amplitude) const {
  ExpPolyFunction out = *this;
  out.amplitude_ = amplitude;
  out.normalize();
  return out;
}

double ExpPolyFunction::operator()(double x) const {
  if (is_zero()) return 0.0;
  const double z = scale_ * x;
  const double d = horner(den_d_, z);
  if (d == 0.0) throw PoleEvaluation("denominator vanishes at x = " + std::to_string(x));
  double prefactor = 1.0;
  if (power_d_ != 0.0) {
    if (z < 0.0 && power_d_ != std::floor(power_d_)) throw DomainError("fractional power of z at x < 0");
    if (z == 0.0 && power_d_ < 0.0) throw PoleEvaluation("negative power of z at x = 0");
    prefactor = std::pow(z, power_d_);
  }
  return amplitude_ * prefactor * horner(num_d_, z) / d * std::exp(gauss_sign_ * 0.5 * z * z);
}

Rational ExpPolyFunction::exact_prefactor(const Rational& z) const {
  if (!is_integer(power_)) throw DomainError("exact evaluation needs an integer power");
  Rational value = part_(z);
  const long p = boost::multiprecision::numerator(power_).convert_to<long>();
  if (p < 0 && z == 0) throw PoleEvaluation("negative power of z at z = 0");
  Rational zp(1);
  for (long k = 0; k < std::labs(p); ++k) zp *= z;
  return p >= 0 ? value * zp : value / zp;
}

std::optional<int> ExpPolyFunction::parity() const {
  if (is_zero()) return 1;
  if (!is_integer(power_)) return std::nullopt;
  auto pr = part_.parity();
  if (!pr) return std::nullopt;
  const long p = boost::multiprecision::numerator(power_).convert_to<long>();
  return (p % 2 == 0) ? *pr : -*pr;
}

ExpPolyFunction operator*(const ExpPolyFunction& f, const RationalFunction& r) {
  return ExpPolyFunction(f.power_, f.part_ * r, f.gauss_sign_, f.scale_, f.amplitude_);
}

ExpPolyFunction operator+(const ExpPolyFunction& a, const ExpPolyFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.gauss_sign_ != b.gauss_sign_ || a.scale_ != b.scale_) {
    throw std::invalid_argument("adding functions with different Gaussian factors");
  }
  Rational shift = b.power_ - a.power_;
  if (!is_integer(shift)) throw std::invalid_argument("adding functions whose powers differ by a fraction");
  const ExpPolyFunction& low = shift >= 0 ? a : b;
  const ExpPolyFunction& high = shift >= 0 ? b : a;
  const int k = static_cast<int>(boost::multiprecision::numerator(shift >= 0 ? shift : Rational(-shift)).convert_to<long>());
  // exact ratio of the two amplitudes, folded into the high-power term
  Rational ratio = Rational(high.amplitude_) / Rational(low.amplitude_);
  RationalFunction lifted = high.part_ * RationalFunction(Polynomial::monomial(ratio, k));
  return ExpPolyFunction(low.power_, low.part_ + lifted, a.gauss_sign_, a.scale_, low.amplitude_);
}

ExpPolyFunction exppoly_derivative(const ExpPolyFunction& f) { return f.derivative(); }

double exppoly_eval(const ExpPolyFunction& f, double x) { return f(x); }

}  // namespace rext
