#include "rext/susy/susy.hpp"

#include <algorithm>
#include <cmath>

#include "rext/errors.hpp"
#include "rext/orthopoly/families.hpp"

namespace rext {

SeedFunction build_seed(Domain domain, int m, std::optional<Rational> alpha, const Frequency& omega) {
  switch (domain) {
    case Domain::full:
      if (alpha && *alpha != 0) throw InvalidAlpha("the full-line seed takes no alpha");
      if (m < 0) throw InvalidSpec("m must be nonnegative");
      // odd m is allowed here so that superpotential() can refuse it
      return {ExpPolyFunction(Rational(0), RationalFunction(pseudo_hermite(m)), 1, omega.scale()),
              AxisModel{Domain::full, omega, m, Rational(0)}};
    case Domain::half:
    case Domain::radial: {
      if (!alpha) throw InvalidAlpha("half-line seeds need alpha");
      AxisModel axis{domain, omega, m, *alpha};
      axis.validate();
      Polynomial p = laguerre(m, *alpha).compose_neg_square();
      return {ExpPolyFunction(*alpha + Rational(1, 2), RationalFunction(p), 1, omega.scale()), axis};
    }
  }
  throw InvalidSpec("unknown domain");
}

SeedFunction build_seed(const AxisModel& axis) {
  if (axis.domain == Domain::full) return build_seed(axis.domain, axis.m, std::nullopt, axis.omega);
  return build_seed(axis.domain, axis.m, axis.alpha, axis.omega);
}

FactorizationEnergy factorization_energy(const SeedFunction& seed) {
  return {factorization_coefficient(seed.axis), seed.axis.omega};
}

Superpotential superpotential(const SeedFunction& seed) {
  const ExpPolyFunction& f = seed.shape;
  const bool full = seed.axis.domain == Domain::full;
  std::optional<Rational> lo;
  if (!full) lo = Rational(0);
  int zeros = count_real_roots(f.num(), lo, std::nullopt);
  if (full && f.power() > 0) ++zeros;  // factor z^p vanishes at the origin
  if (zeros > 0) {
    throw SeedHasInteriorZero("seed with m = " + std::to_string(seed.axis.m) + " has " + std::to_string(zeros) +
                              " zero(s) inside the domain");
  }
  // w = f'/f = p/z + gauss_sign z + N'/N - D'/D
  const Polynomial z = Polynomial::identity();
  const Polynomial& n = f.num();
  const Polynomial& d = f.den();
  Polynomial top = f.power() * (n * d) + z * (n.derivative() * d - n * d.derivative()) +
                   Rational(f.gauss_sign()) * (z * z * n * d);
  return {RationalFunction(top, z * n * d), seed.axis.omega, seed.axis.domain};
}

PartnerPair partner_pair(const Superpotential& w, const FactorizationEnergy& epsilon) {
  // W^2 = (omega/2) w^2 and W' = (omega/2) w', so V = omega [(w^2 -/+ w')/2 + e]
  RationalFunction sq = w.w * w.w;
  RationalFunction dw = w.w.derivative();
  RationalFunction half = RationalFunction::constant(Rational(1, 2));
  RationalFunction e = RationalFunction::constant(epsilon.value);
  PotentialForm plus(w.domain, w.omega, half * (sq + dw) + e);
  PotentialForm minus(w.domain, w.omega, half * (sq - dw) + e);
  return {plus, minus, epsilon};
}

ExpPolyFunction apply_A(const Superpotential& w, const ExpPolyFunction& f) {
  return f.derivative() + f * w.w * w.scale();
}

ExpPolyFunction apply_A_dagger(const Superpotential& w, const ExpPolyFunction& f) {
  return f * w.w * w.scale() - f.derivative();
}

SeedClass classify_seed(const SeedFunction& seed) {
  ExpPolyFunction inv = seed.shape.reciprocal();
  if (inv.gauss_sign() != -1) return SeedClass::StrictlyIsospectral;
  const bool full = seed.axis.domain == Domain::full;
  std::optional<Rational> lo;
  if (!full) lo = Rational(0);
  // zeros of phi are poles of 1/phi
  if (count_real_roots(inv.den(), lo, std::nullopt) > 0) return SeedClass::StrictlyIsospectral;
  if (full) return inv.power() == 0 ? SeedClass::ExtraBoundState : SeedClass::StrictlyIsospectral;
  // Dirichlet wall: 1/phi ~ z^power must vanish at 0+
  return inv.power() > 0 ? SeedClass::ExtraBoundState : SeedClass::StrictlyIsospectral;
}

Eigenstate map_state(const Superpotential& w, const Eigenstate& psi_plus, const Energy& e_plus, SeedClass seed_class) {
  const double e = e_plus.value();
  if (!(e > 0.0)) throw NonPositiveEnergy("E+ = " + std::to_string(e));
  if (psi_plus.factors.size() != 1) throw std::invalid_argument("map_state acts on one-axis states");
  Eigenstate out = psi_plus;
  out.factors = {apply_A_dagger(w, psi_plus.factors[0]) * (1.0 / std::sqrt(e))};
  if (seed_class == SeedClass::ExtraBoundState) ++out.quantum_numbers[0];
  out.energy = e_plus;
  return out;
}

std::vector<double> q_components(const std::vector<SeedFunction>& seeds, const std::vector<std::vector<double>>& points) {
  const std::size_t dim = seeds.size();
  if (dim < 1 || dim > 3) throw std::invalid_argument("q check needs one to three seeds");
  std::vector<Superpotential> ws;
  std::vector<ExpPolyFunction> derivs;
  for (const auto& s : seeds) {
    ws.push_back(superpotential(s));
    derivs.push_back(s.shape.derivative());
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = j + 1; k < dim; ++k) pairs.emplace_back(j, k);
  }
  std::vector<double> worst(pairs.size(), 0.0);
  for (const auto& x : points) {
    if (x.size() != dim) throw std::invalid_argument("point dimension does not match the seeds");
    std::vector<double> phi(dim), dphi(dim), w(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      phi[a] = seeds[a].shape(x[a]);
      dphi[a] = derivs[a](x[a]);
      w[a] = ws[a](x[a]);
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [j, k] = pairs[p];
      double rest = 1.0;
      for (std::size_t a = 0; a < dim; ++a) {
        if (a != j && a != k) rest *= phi[a];
      }
      // W_j d_k prod(phi) and W_k d_j prod(phi)
      double left = w[j] * phi[j] * dphi[k] * rest;
      double right = w[k] * dphi[j] * phi[k] * rest;
      double magnitude = std::abs(left) + std::abs(right);
      if (magnitude > 0.0) worst[p] = std::max(worst[p], std::abs(left - right) / magnitude);
    }
  }
  return worst;
}

double q_vanishing_check(const std::vector<SeedFunction>& seeds, const std::vector<std::vector<double>>& points) {
  auto parts = q_components(seeds, points);
  double worst = 0.0;
  for (double v : parts) worst = std::max(worst, v);
  return worst;
}

}  // namespace rext
