#pragma once

#include "rext/models/eigenstate.hpp"
#include "rext/models/potential.hpp"

namespace rext {

/// One axis of a rationally extended oscillator.
///
/// full: V+ = omega^2 x^2/4 on the whole line, m even.
/// half: the same on x > 0 with a wall at 0; alpha = -1/2 or +1/2 picks the
///       solution branch (psi ~ x or x^2 near the wall).
/// radial: the cylindrical radial problem with barrier (alpha^2 - 1/4)/r^2,
///       alpha = |gamma| a nonnegative integer.
struct AxisModel {
  Domain domain = Domain::full;
  Frequency omega;
  int m = 0;
  Rational alpha{0};

  static AxisModel full(int m, Frequency omega = Frequency());
  static AxisModel half(int m, Rational alpha, Frequency omega = Frequency());
  static AxisModel radial(int m, int gamma, Frequency omega = Frequency());

  /// Throws OddMOnFullLine, InvalidAlpha or InvalidSpec.
  void validate() const;
  /// The extended partner has one extra level (energy 0) below the original spectrum.
  bool has_extra_state() const { return domain == Domain::full; }
};

/// Coefficient e of the factorization energy epsilon = e omega.
Rational factorization_coefficient(const AxisModel& axis);

/// Starting oscillator V+ (including the radial barrier).
PotentialForm starting_potential(const AxisModel& axis);
/// Rational extension V- from its closed form
///   V- = V+ - 2 d^2/dx^2 ln(phi), phi the seed.
PotentialForm extended_potential(const AxisModel& axis);
/// V- - epsilon, the potential whose eigenvalues are the listed energies.
PotentialForm hamiltonian_potential(const AxisModel& axis);

/// Eigenstate of V- with spectral index k (k = 0 is the ground state);
/// unnormalized, amplitude 1.
Eigenstate extended_state(const AxisModel& axis, int k);
Energy extended_energy(const AxisModel& axis, int k);

/// Eigenstate n of the starting oscillator and its energy E+ measured from epsilon.
Eigenstate starting_state(const AxisModel& axis, int n);
Energy starting_energy(const AxisModel& axis, int n);

PotentialForm full_line_potential(int m, const Frequency& omega);
Eigenstate full_line_state(int k, int m, const Frequency& omega);
Energy full_line_energy(int k, int m, const Frequency& omega);
PotentialForm half_line_potential(int m, const Rational& alpha, const Frequency& omega);
Eigenstate half_line_state(int n, int m, const Rational& alpha, const Frequency& omega);
Energy half_line_energy(int n, int m, const Rational& alpha, const Frequency& omega);

}  // namespace rext
