#pragma once

#include <functional>
#include <vector>

#include "rext/numeric/grid.hpp"

namespace rext {

/// Number of discrete eigenvalues strictly below e.
///
/// fd2: negative pivots of the LDL^T factorization of A - e I.
/// numerov: with f_i = e - V_i, the recurrence
///   (1 + h^2 f_{i+1}/12) u_{i+1} - 2 (1 - 5 h^2 f_i/12) u_i + (1 + h^2 f_{i-1}/12) u_{i-1} = 0
/// becomes -u_{i-1} + (2 + g_i) u_i - u_{i+1} = 0 for the rescaled u, with
/// g_i = -h^2 f_i / (1 + h^2 f_i / 12). That tridiagonal matrix decreases
/// monotonically in e, so its negative pivots count the levels below e.
/// Throws ConvergenceFailure if 1 + h^2 f_i / 12 <= 0 somewhere.
int sturm_count(const DiscretizedOperator& op, double e);

/// The k smallest eigenvalues in ascending order, by bisection on
/// sturm_count to about 1e-13 relative.
std::vector<double> lowest_eigenvalues(const DiscretizedOperator& op, int k);

/// Lowest k eigenvalues of the five-point fd2 operator -Laplacian + V(x, y)
/// on a product grid, counted by banded LDL^T inertia. Dense in the band,
/// so meant for small spot checks.
std::vector<double> lowest_eigenvalues_2d(const std::function<double(double, double)>& v, const Grid& gx,
                                          const Grid& gy, int k, double tol = 1e-9);

}  // namespace rext
