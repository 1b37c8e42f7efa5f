#include "rext/numeric/grid.hpp"

#include <cmath>

#include "rext/errors.hpp"

namespace rext {

Grid::Grid(double a_, double b_, int n) : a(a_), b(b_), n_points(n) {
  if (!(a < b)) throw InvalidSpec("grid needs a < b");
  if (n < 16) throw InvalidSpec("grid needs at least 16 points");
}

Scheme parse_scheme(const std::string& text) {
  if (text == "fd2") return Scheme::fd2;
  if (text == "numerov") return Scheme::numerov;
  throw InvalidSpec("unknown scheme '" + text + "'");
}

std::string to_string(Scheme s) { return s == Scheme::fd2 ? "fd2" : "numerov"; }

DiscretizedOperator discretize(const std::function<double(double)>& v, const Grid& grid, Scheme scheme) {
  DiscretizedOperator op;
  op.scheme = scheme;
  op.grid = grid;
  const int n = grid.n_points;
  const double h = grid.h();
  op.potential.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = grid.x(i);
    double value;
    try {
      value = v(x);
    } catch (const PoleEvaluation&) {
      throw PotentialPoleOnGrid("potential is singular at x = " + std::to_string(x));
    }
    if (!std::isfinite(value)) throw PotentialPoleOnGrid("potential is not finite at x = " + std::to_string(x));
    op.potential[i] = value;
  }
  op.diagonal.resize(n);
  op.off_diagonal.assign(n > 0 ? n - 1 : 0, -1.0 / (h * h));
  for (int i = 0; i < n; ++i) op.diagonal[i] = 2.0 / (h * h) + op.potential[i];
  return op;
}

DiscretizedOperator discretize(const PotentialForm& v, const Grid& grid, Scheme scheme) {
  return discretize([&v](double x) { return v(x); }, grid, scheme);
}

}  // namespace rext
