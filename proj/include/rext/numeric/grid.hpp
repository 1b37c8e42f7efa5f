#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rext/models/potential.hpp"

namespace rext {

/// Uniform grid of n_points interior points on (a, b) with Dirichlet ends:
/// x_i = a + (i+1) h, h = (b - a) / (n_points + 1).
struct Grid {
  double a = -1.0;
  double b = 1.0;
  int n_points = 16;

  Grid() = default;
  Grid(double a, double b, int n_points);
  double h() const { return (b - a) / (n_points + 1); }
  double x(int i) const { return a + (i + 1) * h(); }
};

enum class Scheme { fd2, numerov };

Scheme parse_scheme(const std::string& text);
std::string to_string(Scheme s);

/// diagonal and off_diagonal hold the fd2 matrix -Delta/h^2 + diag(V). The
/// numerov scheme counts eigenvalues from the sampled potential through the
/// fourth-order recurrence instead (see lowest_eigenvalues).
struct DiscretizedOperator {
  Scheme scheme = Scheme::numerov;
  Grid grid;
  std::vector<double> potential;
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;
};

/// Throws PotentialPoleOnGrid when V is not finite at an interior point.
DiscretizedOperator discretize(const std::function<double(double)>& v, const Grid& grid, Scheme scheme);
DiscretizedOperator discretize(const PotentialForm& v, const Grid& grid, Scheme scheme);

}  // namespace rext
