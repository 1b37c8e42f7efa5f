#include "rext/numeric/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rext/errors.hpp"

namespace rext {

namespace {

constexpr double kTiny = 1e-300;

int count_fd2(const DiscretizedOperator& op, double e) {
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < op.diagonal.size(); ++i) {
    double off = i == 0 ? 0.0 : op.off_diagonal[i - 1];
    q = (op.diagonal[i] - e) - (i == 0 ? 0.0 : off * off / q);
    if (q == 0.0) q = -kTiny;
    if (q < 0.0) ++count;
  }
  return count;
}

int count_numerov(const DiscretizedOperator& op, double e) {
  const double h2 = op.grid.h() * op.grid.h();
  int count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < op.potential.size(); ++i) {
    const double f = e - op.potential[i];
    const double denom = 1.0 + h2 * f / 12.0;
    if (denom <= 0.0) {
      throw ConvergenceFailure("Numerov weight is not positive at x = " + std::to_string(op.grid.x(static_cast<int>(i))) +
                               "; refine the grid");
    }
    const double g = -h2 * f / denom;
    d = 2.0 + g - (i == 0 ? 0.0 : 1.0 / d);
    if (d == 0.0) d = -kTiny;
    if (d < 0.0) ++count;
  }
  return count;
}

template <class Count>
std::vector<double> bisect_levels(Count count, double lo, double hi_start, int k, double rel_tol) {
  std::vector<double> levels;
  // make sure nothing lies below the starting lower bound
  double step = 1.0;
  while (count(lo) > 0) {
    lo -= step;
    step *= 2;
    if (step > 1e12) throw ConvergenceFailure("no lower bound for the spectrum");
  }
  double hi = std::max(hi_start, lo + 1.0);
  step = std::max(1.0, hi - lo);
  while (count(hi) < k) {
    hi += step;
    step *= 2;
    if (step > 1e15) throw ConvergenceFailure("fewer than " + std::to_string(k) + " levels found");
  }
  for (int j = 0; j < k; ++j) {
    double a = lo;
    double b = hi;
    for (int iter = 0; iter < 400; ++iter) {
      double mid = 0.5 * (a + b);
      if (count(mid) > j) b = mid; else a = mid;
      if (b - a <= rel_tol * std::max(1.0, std::abs(mid))) break;
      if (iter == 399) throw ConvergenceFailure("bisection did not converge");
    }
    levels.push_back(0.5 * (a + b));
    lo = a;
  }
  return levels;
}

}  // namespace

int sturm_count(const DiscretizedOperator& op, double e) {
  return op.scheme == Scheme::fd2 ? count_fd2(op, e) : count_numerov(op, e);
}

std::vector<double> lowest_eigenvalues(const DiscretizedOperator& op, int k) {
  if (k <= 0) return {};
  if (k > op.grid.n_points) throw InvalidSpec("more levels requested than grid points");
  const double vmin = *std::min_element(op.potential.begin(), op.potential.end());
  return bisect_levels([&op](double e) { return sturm_count(op, e); }, vmin - 1.0, vmin + 1.0, k, 1e-13);
}

std::vector<double> lowest_eigenvalues_2d(const std::function<double(double, double)>& v, const Grid& gx,
                                          const Grid& gy, int k, double tol) {
  const int nx = gx.n_points;
  const int ny = gy.n_points;
  const int n = nx * ny;
  const int band = ny;  // row-major in (i, j): neighbours in x sit ny apart
  const double cx = 1.0 / (gx.h() * gx.h());
  const double cy = 1.0 / (gy.h() * gy.h());
  std::vector<double> diag(n);
  double vmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      double value = v(gx.x(i), gy.x(j));
      if (!std::isfinite(value)) throw PotentialPoleOnGrid("2D potential not finite on the grid");
      diag[i * ny + j] = 2 * cx + 2 * cy + value;
      vmin = std::min(vmin, value);
    }
  }
  // a(p, p - 1) = -cy inside a column block, a(p, p - ny) = -cx
  auto entry = [&](int p, int q) {
    int off = p - q;
    if (off == 1 && p % ny != 0) return -cy;
    if (off == band) return -cx;
    return 0.0;
  };
  std::vector<double> l(static_cast<std::size_t>(n) * (band + 1));
  std::vector<double> d(n);
  auto count = [&](double e) {
    int negatives = 0;
    for (int p = 0; p < n; ++p) {
      const int first = std::max(0, p - band);
      double* lp = &l[static_cast<std::size_t>(p) * (band + 1)];
      // lp[q - p + band] stores l(p, q)
      for (int q = first; q < p; ++q) {
        const double* lq = &l[static_cast<std::size_t>(q) * (band + 1)];
        double sum = entry(p, q);
        const int rfirst = std::max(first, q - band);
        for (int r = rfirst; r < q; ++r) sum -= lp[r - p + band] * d[r] * lq[r - q + band];
        lp[q - p + band] = sum / d[q];
      }
      double dp = diag[p] - e;
      for (int r = first; r < p; ++r) dp -= lp[r - p + band] * lp[r - p + band] * d[r];
      if (dp == 0.0) dp = -kTiny;
      d[p] = dp;
      if (dp < 0.0) ++negatives;
    }
    return negatives;
  };
  return bisect_levels(count, vmin - 1.0, vmin + 1.0, k, tol);
}

}  // namespace rext
