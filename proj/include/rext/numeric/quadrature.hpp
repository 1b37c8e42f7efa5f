#pragma once

#include <functional>

namespace rext {

/// Adaptive Gauss-Legendre quadrature on [a, b]: each panel uses the
/// 20-point rule and is bisected until the two halves agree with the whole
/// to rel_tol times the integral of |f|, or to abs_tol if that is larger.
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-13,
                 double abs_tol = 0.0);

}  // namespace rext
