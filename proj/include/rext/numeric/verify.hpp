#pragma once

#include <vector>

#include "rext/models/model.hpp"
#include "rext/numeric/grid.hpp"
#include "rext/susy/susy.hpp"

namespace rext {

/// max |-psi'' + V psi - E psi| / max |psi| over the points, with psi'' from
/// exact differentiation. V is the potential whose eigenvalue is E.
double residual(const PotentialForm& v, const Eigenstate& state, const std::vector<double>& points);

/// (-psi''/psi + V - E) / omega as an exact rational function of z; zero
/// for an exact eigenstate. Needs a rational frequency.
RationalFunction exact_residual(const PotentialForm& v, const Eigenstate& state);

/// Integration window [lo, hi] for one axis: the domain cut where the
/// Gaussian factor of f has fallen far below double precision.
std::pair<double, double> integration_window(const ExpPolyFunction& f, Domain domain);

/// Integral of f g over the domain. Odd products on the full line return
/// exactly 0.
double inner_product(const Eigenstate& f, const Eigenstate& g);

/// Unit L2 norm and positive sign as x -> +infinity.
Eigenstate normalize(const Eigenstate& state);

/// Max |G - I| entry of the Gram matrix of already normalized states.
double gram_deviation(const std::vector<Eigenstate>& states);

/// || A^dagger psi+_n / sqrt(E+) - psi-_{n'} ||_2 with psi+ normalized and
/// psi- the normalized catalog state, n' = n + 1 when the seed adds a level.
double intertwine_check(const AxisModel& axis, int n);

/// Strict sign changes of psi at the interior grid points.
int node_count(const Eigenstate& state, const Grid& grid);

/// n evenly spaced interior sample points on the axis domain, inside |z| <= z_max.
std::vector<double> sample_points(const AxisModel& axis, int n, double z_max = 5.0);

}  // namespace rext
