#include "rext/models/catalog.hpp"

#include "rext/errors.hpp"
#include "rext/orthopoly/families.hpp"

namespace rext {

namespace {

const Rational kHalf(1, 2);

// Polynomial part of the seed in z.
Polynomial seed_polynomial(const AxisModel& axis) {
  if (axis.domain == Domain::full) return pseudo_hermite(axis.m);
  return laguerre(axis.m, axis.alpha).compose_neg_square();
}

RationalFunction log_second_derivative(const Polynomial& p) {
  Polynomial d1 = p.derivative();
  return RationalFunction(d1.derivative() * p - d1 * d1, p * p);
}

RationalFunction z_squared_over(const Rational& c) { return RationalFunction(Polynomial::monomial(c, 2)); }

// c / z^2
RationalFunction inverse_z_squared(const Rational& c) {
  return RationalFunction(Polynomial::constant(c), Polynomial::monomial(Rational(1), 2));
}

}  // namespace

AxisModel AxisModel::full(int m, Frequency omega) {
  AxisModel axis{Domain::full, std::move(omega), m, Rational(0)};
  axis.validate();
  return axis;
}

AxisModel AxisModel::half(int m, Rational alpha, Frequency omega) {
  AxisModel axis{Domain::half, std::move(omega), m, std::move(alpha)};
  axis.validate();
  return axis;
}

AxisModel AxisModel::radial(int m, int gamma, Frequency omega) {
  AxisModel axis{Domain::radial, std::move(omega), m, Rational(gamma < 0 ? -gamma : gamma)};
  axis.validate();
  return axis;
}

void AxisModel::validate() const {
  if (m < 0) throw InvalidSpec("m must be nonnegative");
  switch (domain) {
    case Domain::full:
      if (m % 2 != 0) throw OddMOnFullLine("m = " + std::to_string(m) + " gives a seed with a real zero");
      if (alpha != 0) throw InvalidAlpha("alpha is not used on the full line");
      break;
    case Domain::half:
      if (alpha != kHalf && alpha != -kHalf) {
        throw InvalidAlpha("half-line alpha must be -1/2 or 1/2, got " + to_compact_string(alpha));
      }
      break;
    case Domain::radial:
      if (!is_integer(alpha) || alpha < 0) {
        throw InvalidAlpha("radial alpha must be |gamma|, got " + to_compact_string(alpha));
      }
      break;
  }
}

Rational factorization_coefficient(const AxisModel& axis) {
  if (axis.domain == Domain::full) return -(Rational(axis.m) + kHalf);
  return -(Rational(2 * axis.m + 1) + axis.alpha);
}

PotentialForm starting_potential(const AxisModel& axis) {
  axis.validate();
  RationalFunction u = z_squared_over(kHalf);
  if (axis.domain != Domain::full) u = u + inverse_z_squared((axis.alpha * axis.alpha - Rational(1, 4)) / 2);
  return PotentialForm(axis.domain, axis.omega, u);
}

PotentialForm extended_potential(const AxisModel& axis) {
  axis.validate();
  // ln phi = p ln z + z^2/2 + ln P; its second z-derivative is -p/z^2 + 1 + (ln P)''
  // and V- = V+ - omega (ln phi)''_z
  RationalFunction second = RationalFunction::constant(Rational(1)) + log_second_derivative(seed_polynomial(axis));
  if (axis.domain != Domain::full) second = second + inverse_z_squared(-(axis.alpha + kHalf));
  return PotentialForm(axis.domain, axis.omega, starting_potential(axis).in_z() - second);
}

PotentialForm hamiltonian_potential(const AxisModel& axis) {
  return extended_potential(axis).shifted(-factorization_coefficient(axis));
}

Eigenstate extended_state(const AxisModel& axis, int k) {
  axis.validate();
  if (k < 0) throw InvalidSpec("state index must be nonnegative");
  const double s = axis.omega.scale();
  Eigenstate state;
  state.quantum_numbers = {k};
  state.energy = extended_energy(axis, k);
  state.domains = {axis.domain};
  if (axis.domain == Domain::full) {
    RationalFunction part(exceptional_hermite(k, axis.m), pseudo_hermite(axis.m));
    state.factors = {ExpPolyFunction(Rational(0), part, -1, s)};
  } else {
    Polynomial top = exceptional_laguerre(k, axis.m, axis.alpha).compose_scaled_square(Rational(1));
    RationalFunction part(top, seed_polynomial(axis));
    state.factors = {ExpPolyFunction(axis.alpha + Rational(3, 2), part, -1, s)};
  }
  return state;
}

Energy extended_energy(const AxisModel& axis, int k) {
  if (axis.domain == Domain::full) return Energy::single(k == 0 ? Rational(0) : Rational(k + axis.m), axis.omega);
  return Energy::single(2 * (Rational(k + axis.m + 1) + axis.alpha), axis.omega);
}

Eigenstate starting_state(const AxisModel& axis, int n) {
  axis.validate();
  if (n < 0) throw InvalidSpec("state index must be nonnegative");
  const double s = axis.omega.scale();
  Eigenstate state;
  state.quantum_numbers = {n};
  state.energy = starting_energy(axis, n);
  state.domains = {axis.domain};
  if (axis.domain == Domain::full) {
    state.factors = {ExpPolyFunction(Rational(0), RationalFunction(hermite(n)), -1, s)};
  } else {
    Polynomial p = laguerre(n, axis.alpha).compose_scaled_square(Rational(1));
    state.factors = {ExpPolyFunction(axis.alpha + kHalf, RationalFunction(p), -1, s)};
  }
  return state;
}

Energy starting_energy(const AxisModel& axis, int n) {
  // oscillator level minus epsilon
  Rational level = axis.domain == Domain::full ? Rational(n) + kHalf : Rational(2 * n + 1) + axis.alpha;
  return Energy::single(level - factorization_coefficient(axis), axis.omega);
}

PotentialForm full_line_potential(int m, const Frequency& omega) { return extended_potential(AxisModel::full(m, omega)); }

Eigenstate full_line_state(int k, int m, const Frequency& omega) { return extended_state(AxisModel::full(m, omega), k); }

Energy full_line_energy(int k, int m, const Frequency& omega) { return extended_energy(AxisModel::full(m, omega), k); }

PotentialForm half_line_potential(int m, const Rational& alpha, const Frequency& omega) {
  return extended_potential(AxisModel::half(m, alpha, omega));
}

Eigenstate half_line_state(int n, int m, const Rational& alpha, const Frequency& omega) {
  return extended_state(AxisModel::half(m, alpha, omega), n);
}

Energy half_line_energy(int n, int m, const Rational& alpha, const Frequency& omega) {
  return extended_energy(AxisModel::half(m, alpha, omega), n);
}

}  // namespace rext
