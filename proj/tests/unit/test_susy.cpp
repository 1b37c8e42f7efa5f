#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rext/errors.hpp"
#include "rext/models/catalog.hpp"
#include "rext/orthopoly/families.hpp"
#include "rext/numeric/verify.hpp"
#include "rext/susy/susy.hpp"

using namespace rext;
using testing::poly;
using testing::q;

namespace {

const Rational kHalf(1, 2);

std::vector<AxisModel> one_axis_catalog() {
  std::vector<AxisModel> out;
  for (int m = 0; m <= 3; ++m) {
    if (m % 2 == 0) out.push_back(AxisModel::full(m, Frequency(q(3, 2))));
    out.push_back(AxisModel::half(m, -kHalf, Frequency(q(3, 2))));
    out.push_back(AxisModel::half(m, kHalf, Frequency(q(3, 2))));
  }
  for (int g = 0; g <= 2; ++g) out.push_back(AxisModel::radial(1, g, Frequency(q(3, 2))));
  return out;
}

// Points inside the domain, away from the origin.
std::vector<double> points_for(const AxisModel& axis, testing::PolyGen& gen, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    double x = gen.uniform(0.2, 4.0);
    if (axis.domain == Domain::full && i % 2 == 1) x = -x;
    out.push_back(x);
  }
  return out;
}

Eigenstate wrap(const ExpPolyFunction& f, const Energy& e, Domain d) {
  Eigenstate s;
  s.quantum_numbers = {0};
  s.energy = e;
  s.factors = {f};
  s.domains = {d};
  return s;
}

}  // namespace

TEST_SUITE("susy") {
  TEST_CASE("seed shapes") {
    auto s0 = build_seed(Domain::full, 0, std::nullopt, Frequency());
    CHECK(s0.shape.gauss_sign() == 1);
    CHECK(s0.shape.power() == 0);
    CHECK(s0.shape.rational_part() == RationalFunction(poly({1})));

    auto s2 = build_seed(Domain::full, 2, std::nullopt, Frequency());
    CHECK(s2.shape.rational_part() == RationalFunction(poly({2, 0, 4})));

    // L_1^(-1/2)(-z^2) = z^2 + 1/2, prefactor z^0
    auto h = build_seed(Domain::half, 1, -kHalf, Frequency());
    CHECK(h.shape.power() == 0);
    CHECK(h.shape.num() == Polynomial({kHalf, q(0), q(1)}));

    CHECK_THROWS_AS(build_seed(Domain::half, 1, q(0), Frequency()), InvalidAlpha);
    CHECK_THROWS_AS(build_seed(Domain::half, 1, std::nullopt, Frequency()), InvalidAlpha);
    CHECK_THROWS_AS(build_seed(Domain::full, 2, kHalf, Frequency()), InvalidAlpha);
  }

  TEST_CASE("superpotential values") {
    testing::PolyGen gen(5);
    {
      const double w = 3.0;
      auto W = superpotential(build_seed(Domain::full, 0, std::nullopt, Frequency(q(3))));
      for (int i = 0; i < 20; ++i) {
        double x = gen.uniform(-5, 5);
        CHECK(W(x) == doctest::Approx(w * x / 2).epsilon(1e-13));
      }
    }
    {
      auto W = superpotential(build_seed(Domain::full, 2, std::nullopt, Frequency(q(2))));
      for (int i = 0; i < 20; ++i) {
        double x = gen.uniform(-5, 5);
        CHECK(W(x) == doctest::Approx(x + 4 * x / (2 * x * x + 1)).epsilon(1e-13));
      }
    }
    {
      const double w = 0.75;
      auto W = superpotential(build_seed(Domain::half, 0, kHalf, Frequency(q(3, 4))));
      for (int i = 0; i < 20; ++i) {
        double x = gen.uniform(0.1, 5);
        CHECK(W(x) == doctest::Approx(w * x / 2 + 1 / x).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("odd m full-line seed is refused") {
    for (int m : {1, 3, 5}) {
      CHECK_THROWS_AS(superpotential(build_seed(Domain::full, m, std::nullopt, Frequency())), SeedHasInteriorZero);
    }
  }

  TEST_CASE("partner potentials of the plain oscillator") {
    auto seed = build_seed(Domain::full, 0, std::nullopt, Frequency(q(5, 2)));
    auto pair = partner_pair(superpotential(seed), factorization_energy(seed));
    CHECK(factorization_energy(seed).value == -kHalf);
    // V+ = w^2 x^2 / 4 = w z^2 / 2 and V- = V+ - w
    CHECK(pair.v_plus.in_z() == RationalFunction(Polynomial({q(0), q(0), kHalf})));
    CHECK(pair.v_minus.in_z() == RationalFunction(Polynomial({q(-1), q(0), kHalf})));

    auto half = AxisModel::half(0, kHalf);
    auto hs = build_seed(half);
    auto hp = partner_pair(superpotential(hs), factorization_energy(hs));
    CHECK(hp.v_minus.render() == "1/4*w^2*x^2 + 2/x^2 - w");
  }

  TEST_CASE("V+ - V- = 2 W'") {
    testing::PolyGen gen(8);
    for (const auto& axis : one_axis_catalog()) {
      auto seed = build_seed(axis);
      auto W = superpotential(seed);
      auto pair = partner_pair(W, factorization_energy(seed));
      CHECK(pair.v_plus == starting_potential(axis));
      for (double x : points_for(axis, gen, 10)) {
        const double h = 1e-4;
        double dW = (-W(x + 2 * h) + 8 * W(x + h) - 8 * W(x - h) + W(x - 2 * h)) / (12 * h);
        double lhs = pair.v_plus(x) - pair.v_minus(x);
        CHECK(lhs == doctest::Approx(2 * dW).epsilon(1e-7).scale(1.0));
      }
    }
  }

  TEST_CASE("A annihilates the inverse seed") {
    for (const auto& axis : one_axis_catalog()) {
      auto seed = build_seed(axis);
      auto W = superpotential(seed);
      CHECK(apply_A(W, seed.shape.reciprocal()).is_zero());
    }
  }

  TEST_CASE("A dagger on the Gaussian") {
    const double w = 1.5;
    auto seed = build_seed(Domain::full, 0, std::nullopt, Frequency(q(3, 2)));
    auto W = superpotential(seed);
    auto g = ExpPolyFunction::gaussian(-1, seed.shape.scale());
    auto out = apply_A_dagger(W, g);
    testing::PolyGen gen(3);
    for (int i = 0; i < 20; ++i) {
      double x = gen.uniform(-4, 4);
      CHECK(out(x) == doctest::Approx(w * x * std::exp(-w * x * x / 4)).epsilon(1e-12).scale(1e-14));
    }
  }

  TEST_CASE("commutator [A, A dagger] = 2 W'") {
    testing::PolyGen gen(9);
    for (const auto& axis : one_axis_catalog()) {
      auto seed = build_seed(axis);
      auto W = superpotential(seed);
      const double s = W.scale();
      ExpPolyFunction f(q(2), RationalFunction(gen.next(3) + Polynomial{q(7)}, poly({3, 0, 1})), -1, s);
      auto lhs = apply_A(W, apply_A_dagger(W, f)) - apply_A_dagger(W, apply_A(W, f));
      auto dW = W.w.derivative();
      for (double x : points_for(axis, gen, 10)) {
        double expect = 2 * s * s * dW.evaluate(s * x) * f(x);
        CHECK(lhs(x) == doctest::Approx(expect).epsilon(1e-9).scale(1e-12));
      }
    }
  }

  TEST_CASE("factorization identity") {
    testing::PolyGen gen(12);
    for (const auto& axis : one_axis_catalog()) {
      auto seed = build_seed(axis);
      auto W = superpotential(seed);
      auto eps = factorization_energy(seed);
      PotentialForm h = extended_potential(axis).shifted(-eps.value);
      const double s = W.scale();
      ExpPolyFunction f(q(1), RationalFunction(gen.next(4) + Polynomial{q(5)}, poly({1, 0, 1})), -1, s);
      auto ada = apply_A_dagger(W, apply_A(W, f));
      auto f2 = f.derivative().derivative();
      for (double x : points_for(axis, gen, 50)) {
        double lhs = -f2(x) + h(x) * f(x);
        CHECK(ada(x) == doctest::Approx(lhs).epsilon(1e-9).scale(1e-12));
      }
    }
  }

  TEST_CASE("factorization identity in exact arithmetic") {
    // omega = 2 makes the scale 1, so every amplitude is an exact integer
    testing::PolyGen gen(13);
    for (int m = 0; m <= 3; ++m) {
      std::vector<AxisModel> axes{AxisModel::half(m, -kHalf, Frequency(q(2))), AxisModel::half(m, kHalf, Frequency(q(2)))};
      if (m % 2 == 0) axes.push_back(AxisModel::full(m, Frequency(q(2))));
      for (const auto& axis : axes) {
        auto seed = build_seed(axis);
        auto W = superpotential(seed);
        auto eps = factorization_energy(seed);
        RationalFunction u = extended_potential(axis).in_z() - RationalFunction::constant(eps.value);
        ExpPolyFunction f(q(1), RationalFunction(gen.next(4) + Polynomial{q(3)}), -1, 1.0);
        // -f'' + omega U f with omega = 2
        auto lhs = f * (RationalFunction::constant(q(2)) * u) - f.derivative().derivative();
        auto rhs = apply_A_dagger(W, apply_A(W, f));
        CHECK((lhs - rhs).is_zero());
      }
    }
  }

  TEST_CASE("intertwined states solve the partner equation") {
    for (const auto& axis : one_axis_catalog()) {
      auto seed = build_seed(axis);
      auto W = superpotential(seed);
      auto eps = factorization_energy(seed);
      PotentialForm hplus = starting_potential(axis).shifted(-eps.value);
      PotentialForm hminus = extended_potential(axis).shifted(-eps.value);
      auto pts = sample_points(axis, 50);
      for (int n = 0; n <= 4; ++n) {
        Eigenstate plus = starting_state(axis, n);
        auto up = wrap(apply_A_dagger(W, plus.factors[0]), plus.energy, axis.domain);
        CHECK(residual(hminus, up, pts) <= 1e-9);
        int k = axis.has_extra_state() ? n + 1 : n;
        Eigenstate minus = extended_state(axis, k);
        auto down = wrap(apply_A(W, minus.factors[0]), minus.energy, axis.domain);
        CHECK(residual(hplus, down, pts) <= 1e-9);
      }
    }
  }

  TEST_CASE("map_state") {
    auto seed = build_seed(Domain::full, 0, std::nullopt, Frequency());
    auto W = superpotential(seed);
    auto axis = AxisModel::full(0);
    Eigenstate ground = starting_state(axis, 0);
    Eigenstate mapped = map_state(W, ground, starting_energy(axis, 0), classify_seed(seed));
    CHECK(mapped.quantum_numbers == std::vector<int>{1});
    // proportional to x exp(-x^2/4)
    double ratio = mapped(1.0) / (1.0 * std::exp(-0.25));
    for (double x : {0.3, 0.7, 1.9, 2.6, -1.4}) {
      CHECK(mapped(x) == doctest::Approx(ratio * x * std::exp(-x * x / 4)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(map_state(W, ground, Energy::single(q(0), Frequency()), SeedClass::ExtraBoundState),
                    NonPositiveEnergy);

    auto hs = build_seed(Domain::half, 1, -kHalf, Frequency());
    auto haxis = AxisModel::half(1, -kHalf);
    Eigenstate hm = map_state(superpotential(hs), starting_state(haxis, 2), starting_energy(haxis, 2), classify_seed(hs));
    CHECK(hm.quantum_numbers == std::vector<int>{2});
    CHECK(hm.energy.value() == doctest::Approx(2 * (2 + 1 + 1 - 0.5)));
  }

  TEST_CASE("seed classification") {
    for (int m : {0, 2, 4}) {
      CHECK(classify_seed(build_seed(Domain::full, m, std::nullopt, Frequency())) == SeedClass::ExtraBoundState);
    }
    for (int m = 0; m <= 3; ++m) {
      CHECK(classify_seed(build_seed(Domain::half, m, kHalf, Frequency())) == SeedClass::StrictlyIsospectral);
      CHECK(classify_seed(build_seed(Domain::half, m, -kHalf, Frequency())) == SeedClass::StrictlyIsospectral);
    }
    for (int g = 0; g <= 2; ++g) {
      CHECK(classify_seed(build_seed(AxisModel::radial(1, g))) == SeedClass::StrictlyIsospectral);
    }
  }

  TEST_CASE("Q terms vanish for separable seeds") {
    testing::PolyGen gen(17);
    std::vector<std::vector<double>> p2, p3;
    for (int i = 0; i < 100; ++i) {
      p2.push_back({gen.uniform(-4, 4), gen.uniform(-4, 4)});
      p3.push_back({gen.uniform(-4, 4), gen.uniform(-4, 4), gen.uniform(-4, 4)});
    }
    auto s2 = build_seed(Domain::full, 2, std::nullopt, Frequency());
    auto s0 = build_seed(Domain::full, 0, std::nullopt, Frequency());
    CHECK(q_vanishing_check({s2, s2}, p2) <= 1e-12);
    auto parts = q_components({s2, s0, s2}, p3);
    REQUIRE(parts.size() == 3);
    for (double v : parts) CHECK(v <= 1e-12);
    CHECK(q_vanishing_check({s2}, {{0.5}, {1.5}}) == 0.0);
  }
}
