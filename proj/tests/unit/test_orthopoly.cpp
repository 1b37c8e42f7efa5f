#include <doctest.h>

#include <complex>
#include <thread>

#include "helpers.hpp"
#include "rext/orthopoly/families.hpp"
#include "rext/numeric/quadrature.hpp"

using namespace rext;
using testing::poly;
using testing::q;

namespace {

std::complex<double> complex_hermite(int n, std::complex<double> z) {
  std::complex<double> prev = 1.0;
  if (n == 0) return prev;
  std::complex<double> cur = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    std::complex<double> next = 2.0 * z * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

TEST_SUITE("orthopoly") {
  TEST_CASE("Hermite") {
    CHECK(hermite(0) == poly({1}));
    CHECK(hermite(2) == poly({-2, 0, 4}));
    CHECK(hermite(3) == poly({0, -12, 0, 8}));
  }

  TEST_CASE("pseudo-Hermite") {
    CHECK(pseudo_hermite(0) == poly({1}));
    CHECK(pseudo_hermite(2) == poly({2, 0, 4}));
    CHECK(pseudo_hermite(3) == poly({0, 12, 0, 8}));
    for (int m = 0; m <= 10; ++m) {
      for (const auto& c : pseudo_hermite(m).coefficients()) CHECK(c >= 0);
      CHECK(pseudo_hermite(m).parity() == (m % 2 == 0 ? 1 : -1));
    }
  }

  TEST_CASE("pseudo-Hermite equals (-i)^m H_m(iz)") {
    testing::PolyGen gen(21);
    for (int m = 0; m <= 8; ++m) {
      for (int i = 0; i < 20; ++i) {
        Rational t = gen.rational();
        double td = to_double(t);
        std::complex<double> phase = std::pow(std::complex<double>(0, -1), m);
        std::complex<double> expect = phase * complex_hermite(m, {0, td});
        double got = to_double(pseudo_hermite(m)(t));
        CHECK(std::abs(expect.imag()) <= 1e-9 * (1 + std::abs(expect.real())));
        CHECK(got == doctest::Approx(expect.real()).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("pseudo-Hermite real zeros") {
    for (int m = 0; m <= 8; ++m) {
      const int expected = m % 2 == 0 ? 0 : 1;
      CHECK(count_real_roots(pseudo_hermite(m), std::nullopt, std::nullopt) == expected);
      // grid scan away from the origin
      auto coeffs = pseudo_hermite(m).to_doubles();
      int changes = 0;
      double prev = horner(coeffs, -20.0);
      for (int i = 1; i <= 4000; ++i) {
        double z = -20.0 + 0.01 * i;
        if (std::abs(z) < 1e-9) continue;
        double v = horner(coeffs, z);
        if ((v > 0) != (prev > 0)) ++changes;
        prev = v;
      }
      CHECK(changes == expected);
    }
  }

  TEST_CASE("Laguerre") {
    CHECK(laguerre(0, q(-1, 2)) == poly({1}));
    CHECK(laguerre(1, q(-1, 2)) == Polynomial{q(1, 2), q(-1)});
    CHECK(laguerre(1, q(1, 2)) == Polynomial{q(3, 2), q(-1)});
    CHECK(laguerre(-1, q(1, 2)).is_zero());
    // L_2^(a)(s) = (a+1)(a+2)/2 - (a+2) s + s^2/2
    CHECK(laguerre(2, q(1, 2)) == Polynomial{q(15, 8), q(-5, 2), q(1, 2)});
  }

  TEST_CASE("exceptional Hermite") {
    CHECK(exceptional_hermite(0, 2) == poly({1}));
    CHECK(exceptional_hermite(1, 2) == poly({0, 12, 0, 8}));
    CHECK(exceptional_hermite(1, 0) == poly({0, 2}));
    for (int m : {0, 2, 4}) {
      for (int k = 1; k <= 8; ++k) CHECK(exceptional_hermite(k, m).degree() == k + m);
    }
  }

  TEST_CASE("exceptional Laguerre") {
    for (auto a : {q(-1, 2), q(1, 2), q(1)}) CHECK(exceptional_laguerre(0, 0, a) == poly({1}));
    CHECK(exceptional_laguerre(0, 1, q(-1, 2)) == Polynomial{q(3, 2), q(1)});
    CHECK(exceptional_laguerre(1, 0, q(1, 2)) == Polynomial{q(5, 2), q(-1)});
    for (int n = 0; n <= 5; ++n) CHECK(exceptional_laguerre(n, 0, q(1, 2)) == laguerre(n, q(3, 2)));
  }

  TEST_CASE("classical orthogonality by quadrature") {
    for (int i = 0; i <= 6; ++i) {
      for (int j = 0; j <= i; ++j) {
        auto hi = hermite(i).to_doubles();
        auto hj = hermite(j).to_doubles();
        auto f = [&](double z) { return horner(hi, z) * horner(hj, z) * std::exp(-z * z); };
        double ij = integrate(f, -12.0, 12.0);
        if (i == j) {
          CHECK(ij > 0);
        } else {
          auto fi = [&](double z) { return horner(hi, z) * horner(hi, z) * std::exp(-z * z); };
          auto fj = [&](double z) { return horner(hj, z) * horner(hj, z) * std::exp(-z * z); };
          double norm = std::sqrt(integrate(fi, -12.0, 12.0) * integrate(fj, -12.0, 12.0));
          CHECK(std::abs(ij) <= 1e-9 * norm);
        }
      }
    }
    for (auto a : {q(-1, 2), q(1, 2)}) {
      const double ad = to_double(a);
      for (int i = 0; i <= 6; ++i) {
        for (int j = 0; j < i; ++j) {
          auto li = laguerre(i, a).to_doubles();
          auto lj = laguerre(j, a).to_doubles();
          // s = u^2 removes the endpoint singularity of s^alpha
          auto w = [&](const std::vector<double>& p1, const std::vector<double>& p2, double u) {
            double s = u * u;
            return horner(p1, s) * horner(p2, s) * std::pow(u, 2 * ad + 1) * 2 * std::exp(-s);
          };
          double ij = integrate([&](double u) { return w(li, lj, u); }, 0.0, 10.0);
          double norm = std::sqrt(integrate([&](double u) { return w(li, li, u); }, 0.0, 10.0) *
                                  integrate([&](double u) { return w(lj, lj, u); }, 0.0, 10.0));
          CHECK(std::abs(ij) <= 1e-9 * norm);
        }
      }
    }
  }

  TEST_CASE("exceptional Hermite orthogonality under the rational weight") {
    for (int m : {2, 4}) {
      auto hm = pseudo_hermite(m).to_doubles();
      std::vector<std::vector<double>> family;
      for (int k = 0; k <= 6; ++k) family.push_back(exceptional_hermite(k, m).to_doubles());
      auto inner = [&](int a, int b) {
        return integrate(
            [&](double z) {
              double d = horner(hm, z);
              return horner(family[a], z) * horner(family[b], z) * std::exp(-z * z) / (d * d);
            },
            -14.0, 14.0);
      };
      for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b < a; ++b) {
          CHECK(std::abs(inner(a, b)) <= 1e-8 * std::sqrt(inner(a, a) * inner(b, b)));
        }
      }
    }
  }

  TEST_CASE("cache is safe under concurrent readers") {
    std::vector<std::thread> threads;
    std::vector<Polynomial> results(8);
    for (int t = 0; t < 8; ++t) {
      threads.emplace_back([t, &results] { results[t] = laguerre(12, q(t, 3)) * pseudo_hermite(12); });
    }
    for (auto& th : threads) th.join();
    for (int t = 0; t < 8; ++t) CHECK(results[t] == laguerre(12, q(t, 3)) * pseudo_hermite(12));
  }
}
