#include "rext/errors.hpp"
#include "rext/models/model.hpp"
#include "rext/orthopoly/families.hpp"

namespace rext {

namespace {

// L_n^(a)(-z^2), zero for n < 0.
Polynomial laguerre_neg_square(int n, const Rational& a) {
  if (n < 0) return {};
  return laguerre(n, a).compose_neg_square();
}

std::string describe_difference(const RationalFunction& diff, Domain domain, const std::string& var,
                                const std::string& freq) {
  if (diff.is_zero()) return "agrees exactly";
  return "printed minus constructed = " + PotentialForm(domain, Frequency(), diff).render(var, freq);
}

}  // namespace

PrintedFormComparison compare_printed_cylindrical(int gamma, int m1, int m2) {
  ModelND model = cylindrical_model(gamma, m1, m2, Frequency(), Frequency());
  std::vector<PotentialForm> built = axis_potentials(model);
  const Rational g(gamma < 0 ? -gamma : gamma);
  const Polynomial z = Polynomial::identity();
  const Polynomial z2 = z * z;

  // radial, in units of omega with z^2 = omega r^2 / 2
  Polynomial l0 = laguerre_neg_square(m1, g);
  Polynomial l1 = laguerre_neg_square(m1 - 1, g + 1);
  Polynomial l2 = laguerre_neg_square(m1 - 2, g + 2);
  RationalFunction radial = RationalFunction(Polynomial::monomial(Rational(1, 2), 2));
  radial = radial + RationalFunction(Polynomial::constant((g * g - Rational(1, 4) + 2 * g + 1) / 2), z2);
  radial = radial - RationalFunction::constant(Rational(2 * m1 + 1));
  radial = radial + RationalFunction(Rational(4) * (z2 * l1 * l1), l0 * l0);
  radial = radial + RationalFunction((Polynomial{2 * g, Rational(0), Rational(2)} * l1 - Rational(2) * (z2 * l2)), l0);

  // axial, in units of omega_z with the printed 1/2 omega_z^2 z^2
  Polynomial h = pseudo_hermite(m2);
  Polynomial h1 = h.derivative();
  RationalFunction axial = RationalFunction(Polynomial::monomial(Rational(1), 2)) -
                           RationalFunction(h1.derivative() * h - h1 * h1, h * h) -
                           RationalFunction::constant(Rational(1));

  PrintedFormComparison out;
  out.radial_difference = radial - built[0].in_z();
  out.axial_difference = axial - built[1].in_z();
  out.radial_note = describe_difference(out.radial_difference, Domain::radial, "r", "w");
  out.axial_note = describe_difference(out.axial_difference, Domain::full, "z", "wz");
  return out;
}

}  // namespace rext
