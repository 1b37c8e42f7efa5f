#include "rext/numeric/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

namespace rext {

namespace {

using Rule = boost::math::quadrature::gauss<double, 20>;

struct Panel {
  double value;
  double magnitude;
};

Panel rule(const std::function<double(double)>& f, double a, double b) {
  double magnitude = 0.0;
  double value = Rule::integrate([&](double x) {
    double y = f(x);
    magnitude += std::abs(y);
    return y;
  }, a, b);
  // magnitude here is only a scale for the stopping test
  return {value, magnitude * (b - a) / 20.0};
}

// Caps the work spent on integrands that are pure rounding noise.
constexpr long kMaxPanels = 20000;

double refine(const std::function<double(double)>& f, double a, double b, Panel whole, double abs_tol, int depth,
              long& budget) {
  if (--budget <= 0) return whole.value;
  const double mid = 0.5 * (a + b);
  Panel left = rule(f, a, mid);
  Panel right = rule(f, mid, b);
  const double split = left.value + right.value;
  const double change = std::abs(split - whole.value);
  // stop at the tolerance, or once the change is at the rounding level of the panel
  if (depth >= 30 || change <= abs_tol || change <= 1e-14 * (left.magnitude + right.magnitude)) return split;
  return refine(f, a, mid, left, 0.5 * abs_tol, depth + 1, budget) +
         refine(f, mid, b, right, 0.5 * abs_tol, depth + 1, budget);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol, double abs_tol) {
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, rel_tol, abs_tol);
  // coarse pass over 16 panels fixes the absolute tolerance scale
  constexpr int kPanels = 16;
  const double width = (b - a) / kPanels;
  Panel panels[kPanels];
  double magnitude = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    panels[i] = rule(f, a + i * width, a + (i + 1) * width);
    magnitude += panels[i].magnitude;
  }
  const double tol = std::max({rel_tol * magnitude, abs_tol, 1e-300});
  long budget = kMaxPanels;
  double total = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    total += refine(f, a + i * width, a + (i + 1) * width, panels[i], tol / kPanels, 0, budget);
  }
  return total;
}

}  // namespace rext
