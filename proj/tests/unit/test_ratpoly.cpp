#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rext/errors.hpp"
#include "rext/ratpoly/exppoly.hpp"
#include "rext/ratpoly/serialize.hpp"

using namespace rext;
using testing::poly;
using testing::q;

TEST_SUITE("ratpoly") {
  TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3") == q(3));
    CHECK(parse_rational("-6/4") == q(-3, 2));
    CHECK(parse_rational("0.25") == q(1, 4));
    CHECK(parse_rational("1.5e-1") == q(3, 20));
    CHECK(to_fraction_string(q(3)) == "3/1");
    CHECK(to_compact_string(q(-1, 2)) == "-1/2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
  }

  TEST_CASE("addition") {
    CHECK(poly({1}) + poly({0}) == poly({1}));
    CHECK(poly({2, 0, 4}) + poly({-2}) == poly({0, 0, 4}));
    CHECK(poly({0, 4, 0, 8}) + poly({0, 8}) == poly({0, 12, 0, 8}));
    CHECK((poly({1, 2}) - poly({1, 2})).is_zero());
    CHECK((poly({1, 2}) - poly({1, 2})).degree() == -1);
  }

  TEST_CASE("multiplication") {
    CHECK(poly({0, 2}) * poly({1}) == poly({0, 2}));
    CHECK(poly({2, 0, 4}) * poly({0, 2}) == poly({0, 4, 0, 8}));
    CHECK(poly({-1, 1}) * poly({1, 1}) == poly({-1, 0, 1}));
  }

  TEST_CASE("derivative") {
    CHECK(poly({2, 0, 4}).derivative() == poly({0, 8}));
    CHECK(poly({1}).derivative().is_zero());
    CHECK(poly({0, 12, 0, 8}).derivative() == poly({12, 0, 24}));
  }

  TEST_CASE("compose with -z^2") {
    CHECK(poly({1}).compose_neg_square() == poly({1}));
    CHECK(Polynomial{q(1, 2), q(-1)}.compose_neg_square() == Polynomial{q(1, 2), q(0), q(1)});
    CHECK(poly({0, 0, 1}).compose_neg_square() == poly({0, 0, 0, 0, 1}));
  }

  TEST_CASE("division and gcd") {
    auto [quot, rem] = divmod(poly({-1, 0, 1}), poly({-1, 1}));
    CHECK(quot == poly({1, 1}));
    CHECK(rem.is_zero());
    CHECK(gcd(poly({-1, 0, 1}), poly({1, 1})) == poly({1, 1}));
    CHECK(gcd(poly({2, 0, 4}), poly({0, 8})) == poly({1}));
    CHECK_THROWS_AS(divmod(poly({1}), Polynomial{}), ZeroDenominator);
  }

  TEST_CASE("Sturm root counting") {
    Polynomial p = poly({-1, 0, 1});  // roots -1, 1
    CHECK(count_real_roots(p, std::nullopt, std::nullopt) == 2);
    CHECK(count_real_roots(p, q(0), std::nullopt) == 1);
    CHECK(count_real_roots(p, q(1), std::nullopt) == 0);
    CHECK(count_real_roots(p, q(-1), q(1)) == 0);
    CHECK(count_real_roots(poly({2, 0, 4}), std::nullopt, std::nullopt) == 0);
    CHECK(count_real_roots(poly({0, 12, 0, 8}), std::nullopt, std::nullopt) == 1);
    CHECK(count_real_roots(poly({0, 12, 0, 8}), q(0), std::nullopt) == 0);
    // (z-1)^2 (z-3): repeated roots are counted once
    CHECK(count_real_roots(poly({-1, 1}) * poly({-1, 1}) * poly({-3, 1}), std::nullopt, std::nullopt) == 2);
  }

  TEST_CASE("primitive part") {
    CHECK(Polynomial{q(1, 2), q(0), q(1)}.primitive() == poly({1, 0, 2}));
    CHECK(poly({-4, 0, -6}).primitive() == poly({2, 0, 3}));
  }

  TEST_CASE("reduce") {
    RationalFunction r = ratfun_reduce(poly({-1, 0, 1}), poly({-1, 1}));
    CHECK(r.num() == poly({1, 1}));
    CHECK(r.den() == poly({1}));
    r = ratfun_reduce(poly({0, 8}), poly({2, 0, 4}));
    CHECK(r.num() == poly({0, 4}));
    CHECK(r.den() == poly({1, 0, 2}));
    r = ratfun_reduce(Polynomial{}, poly({1, 1}));
    CHECK(r.is_zero());
    CHECK(r.den() == poly({1}));
    CHECK_THROWS_AS(ratfun_reduce(poly({1}), Polynomial{}), ZeroDenominator);
    CHECK_THROWS_AS(RationalFunction(poly({1}), poly({-1, 1}))(q(1)), PoleEvaluation);
  }

  TEST_CASE("product rule holds exactly on random polynomials") {
    testing::PolyGen gen(11);
    for (int trial = 0; trial < 200; ++trial) {
      Polynomial a = gen.next(6);
      Polynomial b = gen.next(6);
      CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
  }

  TEST_CASE("evaluation commutes with arithmetic at rational points") {
    testing::PolyGen gen(12);
    for (int trial = 0; trial < 200; ++trial) {
      Polynomial a = gen.next();
      Polynomial b = gen.next();
      Rational x = gen.rational();
      CHECK((a + b)(x) == a(x) + b(x));
      CHECK((a * b)(x) == a(x) * b(x));
    }
  }

  TEST_CASE("reduce is idempotent and canonical") {
    testing::PolyGen gen(13);
    for (int trial = 0; trial < 100; ++trial) {
      Polynomial n = gen.next(4);
      Polynomial d = gen.next(4);
      Polynomial common = gen.next(2);
      if (d.is_zero() || common.is_zero()) continue;
      RationalFunction r(n, d);
      CHECK(RationalFunction(r.num(), r.den()) == r);
      CHECK(RationalFunction(n * common, d * common) == r);
      CHECK(r.den().leading() > 0);
      CHECK(gcd(r.num(), r.den()).degree() <= 0);
    }
  }

  TEST_CASE("rational function calculus") {
    RationalFunction r(poly({0, 1}), poly({1, 0, 1}));  // z/(1+z^2)
    CHECK(r.derivative() == RationalFunction(poly({1, 0, -1}), poly({1, 0, 2, 0, 1})));
    CHECK(r.parity() == -1);
    RationalFunction e(poly({1, 0, 3}), poly({2, 0, 1}));
    CHECK(e.even_to_square_variable(q(1, 2)) == RationalFunction(Polynomial{q(1), q(3, 2)}, Polynomial{q(2), q(1, 2)}));
    CHECK(r / r == RationalFunction::constant(q(1)));
  }

  TEST_CASE("Gaussian derivatives") {
    const double s = 0.7;
    ExpPolyFunction g = ExpPolyFunction::gaussian(-1, s);
    ExpPolyFunction dg = g.derivative();
    CHECK(dg.power() == 1);
    CHECK(dg.num() == poly({-1}));
    CHECK(dg.amplitude() == doctest::Approx(s));

    ExpPolyFunction zg(q(1), RationalFunction::constant(q(1)), -1, s);
    ExpPolyFunction dzg = zg.derivative();
    CHECK(dzg.power() == 0);
    CHECK(dzg.num() == poly({1, 0, -1}));
    CHECK(dzg.amplitude() == doctest::Approx(s));
  }

  TEST_CASE("evaluation") {
    CHECK(ExpPolyFunction::gaussian(-1, 1.3)(0.0) == 1.0);
    ExpPolyFunction f(q(2), RationalFunction::constant(q(1)), -1, 1.0);
    CHECK(f(2.0) == doctest::Approx(4 * std::exp(-2.0)).epsilon(1e-14));
    CHECK(f(2.0) == doctest::Approx(0.541341).epsilon(1e-6));
    ExpPolyFunction no_pole(q(0), RationalFunction(poly({1}), poly({1, 0, 2})), -1, 1.0);
    for (double x = -10; x <= 10; x += 0.125) CHECK_NOTHROW(no_pole(x));
    ExpPolyFunction pole(q(0), RationalFunction(poly({1}), poly({-1, 1})), -1, 1.0);
    CHECK_THROWS_AS(pole(1.0), PoleEvaluation);
    ExpPolyFunction root(q(1, 2), RationalFunction::constant(q(1)), -1, 1.0);
    CHECK_THROWS_AS(root(-1.0), DomainError);
    CHECK(root(4.0) == doctest::Approx(2 * std::exp(-8.0)));
  }

  TEST_CASE("normalization moves z factors into the power") {
    ExpPolyFunction f(q(1, 2), RationalFunction(poly({0, 0, 3}), poly({0, 1, 1})), 1, 2.0);
    CHECK(f.power() == q(3, 2));
    CHECK(f.num() == poly({3}));
    CHECK(f.den() == poly({1, 1}));
  }

  TEST_CASE("derivative agrees with central differences") {
    testing::PolyGen gen(14);
    const double s = std::sqrt(0.5);
    ExpPolyFunction f(q(1), RationalFunction(poly({1, -3, 0, 2}), poly({1, 0, 2})), -1, s);
    ExpPolyFunction df = f.derivative();
    for (int i = 0; i < 100; ++i) {
      double x = gen.uniform(-10, 10);
      // fourth-order stencil keeps truncation far below the tolerance
      double h = 1e-3;
      double fd = (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
      double exact = df(x);
      double magnitude = std::max(std::abs(exact), s * std::abs(f(x)));
      CHECK(std::abs(fd - exact) <= 1e-8 * magnitude);
    }
  }

  TEST_CASE("addition of shifted powers and amplitudes") {
    ExpPolyFunction a(q(1), RationalFunction::constant(q(1)), -1, 1.0, 2.0);
    ExpPolyFunction b(q(3), RationalFunction::constant(q(1)), -1, 1.0, 0.5);
    ExpPolyFunction sum = a + b;
    CHECK(sum(1.5) == doctest::Approx(a(1.5) + b(1.5)).epsilon(1e-14));
    CHECK((a - a).is_zero());
    ExpPolyFunction c(q(1, 2), RationalFunction::constant(q(1)), -1, 1.0);
    CHECK_THROWS(a + c);
  }

  TEST_CASE("parity and reciprocal") {
    ExpPolyFunction f(q(1), RationalFunction(poly({1, 0, 1}), poly({2, 0, 4})), -1, 1.0);
    CHECK(f.parity() == -1);
    ExpPolyFunction r = f.reciprocal();
    CHECK(r.gauss_sign() == 1);
    CHECK(r(0.8) * f(0.8) == doctest::Approx(1.0));
  }

  TEST_CASE("JSON round trip") {
    RationalFunction r(Polynomial{q(1, 3), q(-2)}, poly({1, 0, 2}));
    auto j = to_json(r);
    CHECK(j["num"][0] == "1/3");
    CHECK(rational_function_from_json(j) == r);
  }
}
