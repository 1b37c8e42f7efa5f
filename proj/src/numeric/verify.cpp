#include "rext/numeric/verify.hpp"

#include <algorithm>
#include <cmath>

#include "rext/errors.hpp"
#include "rext/numeric/quadrature.hpp"

namespace rext {

namespace {

void require_single_axis(const Eigenstate& s) {
  if (s.factors.size() != 1) throw std::invalid_argument("expected a one-axis state");
}

}  // namespace

double residual(const PotentialForm& v, const Eigenstate& state, const std::vector<double>& points) {
  require_single_axis(state);
  const ExpPolyFunction& f = state.factors[0];
  const ExpPolyFunction f2 = f.derivative().derivative();
  const double e = state.energy.value();
  double worst = 0.0;
  double peak = 0.0;
  for (double x : points) {
    const double psi = f(x);
    peak = std::max(peak, std::abs(psi));
    worst = std::max(worst, std::abs(-f2(x) + (v(x) - e) * psi));
  }
  return peak > 0.0 ? worst / peak : worst;
}

RationalFunction exact_residual(const PotentialForm& v, const Eigenstate& state) {
  require_single_axis(state);
  if (!v.omega().is_rational()) throw DomainError("exact residual needs a rational frequency");
  const ExpPolyFunction& f = state.factors[0];
  // psi''/psi in z: the Gaussian, the amplitude and the scale cancel, leaving
  // (psi''_z / psi) with psi''_x = (omega/2) psi''_z.
  ExpPolyFunction unit(f.power(), f.rational_part(), f.gauss_sign(), 1.0, 1.0);
  ExpPolyFunction second = unit.derivative().derivative();
  // second / unit = z^(p2 - p) * R2 / R
  Rational shift = second.power() - unit.power();
  if (!is_integer(shift)) throw DomainError("unexpected fractional power shift");
  int k = boost::multiprecision::numerator(shift).convert_to<int>();
  RationalFunction ratio = second.rational_part() / unit.rational_part();
  if (k > 0) ratio = ratio * RationalFunction(Polynomial::monomial(Rational(1), k));
  if (k < 0) ratio = ratio / RationalFunction(Polynomial::monomial(Rational(1), -k));
  // energy in units of omega
  auto [e, radicand] = state.energy.exact();
  if (radicand != 1) throw DomainError("exact residual needs a rational energy");
  Rational e_units = e / v.omega().coefficient();
  return RationalFunction::constant(Rational(-1, 2)) * ratio + v.in_z() - RationalFunction::constant(e_units);
}

std::pair<double, double> integration_window(const ExpPolyFunction& f, Domain domain) {
  // exp(-z^2/2) < 1e-40 beyond |z| = 13.6; polynomial growth is covered by the margin
  double z_cut = 14.0;
  const int growth = std::max(0, f.num().degree() - f.den().degree()) +
                     static_cast<int>(std::ceil(std::max(0.0, to_double(f.power()))));
  z_cut += 0.5 * growth;
  const double x_cut = z_cut / f.scale();
  return {domain == Domain::full ? -x_cut : 0.0, x_cut};
}

double inner_product(const Eigenstate& f, const Eigenstate& g) {
  if (f.factors.size() != g.factors.size()) throw std::invalid_argument("states of different dimension");
  double total = 1.0;
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    const ExpPolyFunction& a = f.factors[k];
    const ExpPolyFunction& b = g.factors[k];
    const Domain domain = f.domains[k];
    if (domain == Domain::full) {
      auto pa = a.parity();
      auto pb = b.parity();
      if (pa && pb && *pa * *pb < 0) return 0.0;
    }
    auto wa = integration_window(a, domain);
    auto wb = integration_window(b, domain);
    double lo = std::min(wa.first, wb.first);
    double hi = std::max(wa.second, wb.second);
    auto integrand = [&](double x) {
      if (x == 0.0 && domain != Domain::full) return 0.0;
      return a(x) * b(x);
    };
    total *= integrate(integrand, lo, hi);
  }
  return total;
}

Eigenstate normalize(const Eigenstate& state) {
  Eigenstate out = state;
  const double norm = std::sqrt(inner_product(state, state));
  if (!(norm > 0.0)) throw DomainError("cannot normalize a zero state");
  double per_axis = std::pow(norm, 1.0 / static_cast<double>(state.factors.size()));
  for (auto& f : out.factors) {
    // the denominator leads positively, so the sign at +infinity is that of num * amplitude
    const bool negative = (f.num().leading() < 0) != (f.amplitude() < 0);
    f = f * ((negative ? -1.0 : 1.0) / per_axis);
  }
  out.normalized = true;
  return out;
}

double gram_deviation(const std::vector<Eigenstate>& states) {
  double worst = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double g = inner_product(states[i], states[j]);
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double intertwine_check(const AxisModel& axis, int n) {
  SeedFunction seed = build_seed(axis);
  Superpotential w = superpotential(seed);
  Eigenstate plus = normalize(starting_state(axis, n));
  Eigenstate mapped = map_state(w, plus, starting_energy(axis, n), classify_seed(seed));
  Eigenstate target = normalize(extended_state(axis, mapped.quantum_numbers[0]));
  // align the overall sign, then integrate the pointwise difference; expanding
  // the square would cancel catastrophically
  const double sign = inner_product(mapped, target) >= 0 ? 1.0 : -1.0;
  const ExpPolyFunction& a = mapped.factors[0];
  const ExpPolyFunction& b = target.factors[0];
  auto win = integration_window(b, axis.domain);
  double diff = integrate(
      [&](double x) {
        if (x == 0.0 && axis.domain != Domain::full) return 0.0;
        double d = a(x) - sign * b(x);
        return d * d;
      },
      win.first, win.second, 1e-10, 1e-30);
  return std::sqrt(std::max(0.0, diff));
}

int node_count(const Eigenstate& state, const Grid& grid) {
  int changes = 0;
  int previous = 0;
  for (int i = 0; i < grid.n_points; ++i) {
    double v = state(grid.x(i));
    int sign = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (sign == 0) continue;
    if (previous != 0 && sign != previous) ++changes;
    previous = sign;
  }
  return changes;
}

std::vector<double> sample_points(const AxisModel& axis, int n, double z_max) {
  const double x_max = z_max / axis.omega.scale();
  std::vector<double> out;
  const bool full = axis.domain == Domain::full;
  for (int i = 0; i < n; ++i) {
    double u = (i + 0.5) / n;  // cell midpoints, never 0
    out.push_back(full ? x_max * (2 * u - 1) : x_max * u);
  }
  return out;
}

}  // namespace rext
