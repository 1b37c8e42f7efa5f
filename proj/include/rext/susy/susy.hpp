#pragma once

#include <optional>
#include <vector>

#include "rext/models/catalog.hpp"

namespace rext {

/// Non-normalizable formal solution phi of the starting oscillator at the
/// factorization energy, growing like exp(+z^2/2).
struct SeedFunction {
  ExpPolyFunction shape;
  AxisModel axis;
};

/// epsilon = value * omega.
struct FactorizationEnergy {
  Rational value;
  Frequency omega;
};

/// W(x) = scale * w(z) with w = d/dz ln phi.
struct Superpotential {
  RationalFunction w;
  Frequency omega;
  Domain domain = Domain::full;

  double scale() const { return omega.scale(); }
  double operator()(double x) const { return scale() * w.evaluate(scale() * x); }
};

struct PartnerPair {
  PotentialForm v_plus;
  PotentialForm v_minus;
  FactorizationEnergy epsilon;
};

enum class SeedClass { ExtraBoundState, StrictlyIsospectral };

/// full: phi = exp(z^2/2) pseudo_hermite(m)(z).
/// half, radial: phi = z^(alpha+1/2) exp(z^2/2) L_m^(alpha)(-z^2).
/// Throws InvalidAlpha for an alpha the domain does not admit.
SeedFunction build_seed(Domain domain, int m, std::optional<Rational> alpha, const Frequency& omega);
SeedFunction build_seed(const AxisModel& axis);

FactorizationEnergy factorization_energy(const SeedFunction& seed);

/// Throws SeedHasInteriorZero when phi vanishes inside the domain.
Superpotential superpotential(const SeedFunction& seed);

/// V-/+ = W^2 -/+ W' + epsilon, exactly.
PartnerPair partner_pair(const Superpotential& w, const FactorizationEnergy& epsilon);

/// (d/dx + W) f.
ExpPolyFunction apply_A(const Superpotential& w, const ExpPolyFunction& f);
/// (-d/dx + W) f.
ExpPolyFunction apply_A_dagger(const Superpotential& w, const ExpPolyFunction& f);

/// ExtraBoundState iff 1/phi is an admissible bound state: Gaussian decay, no
/// interior pole, and on the half line it must vanish at the wall.
SeedClass classify_seed(const SeedFunction& seed);

/// A^dagger psi+ / sqrt(E+); the spectral index moves up by one when the seed
/// adds an extra ground state. Throws NonPositiveEnergy when E+ <= 0.
Eigenstate map_state(const Superpotential& w, const Eigenstate& psi_plus, const Energy& e_plus,
                     SeedClass seed_class);

/// Largest relative size of the brackets (W_j d_k - W_k d_j) prod(phi) over
/// the points, for one seed per axis (2 or 3 axes). Each bracket is measured
/// against |W_j d_k prod phi| + |W_k d_j prod phi|.
double q_vanishing_check(const std::vector<SeedFunction>& seeds, const std::vector<std::vector<double>>& points);

/// Per-component maxima, ordered (0,1), (0,2), (1,2).
std::vector<double> q_components(const std::vector<SeedFunction>& seeds, const std::vector<std::vector<double>>& points);

}  // namespace rext
