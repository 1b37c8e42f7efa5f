#include "rext/orthopoly/families.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace rext {

namespace {

// Memo of one recurrence family, keyed by (degree, parameter). Values are
// never modified after insertion.
class FamilyCache {
 public:
  template <class Build>
  Polynomial get(int n, const Rational& param, Build build) {
    Key key{n, param};
    {
      std::shared_lock lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    Polynomial value = build();
    std::unique_lock lock(mutex_);
    return entries_.emplace(std::move(key), std::move(value)).first->second;
  }

 private:
  using Key = std::pair<int, Rational>;
  std::shared_mutex mutex_;
  std::map<Key, Polynomial> entries_;
};

FamilyCache& cache(int family) {
  static FamilyCache caches[3];
  return caches[family];
}

void require_nonnegative(int n) {
  if (n < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
}

// H_{k+1} = 2z H_k + 2 sign k H_{k-1}; sign = -1 classical, +1 pseudo.
Polynomial hermite_recurrence(int n, int sign) {
  Polynomial prev = Polynomial::constant(Rational(1));
  if (n == 0) return prev;
  Polynomial cur = Polynomial::monomial(Rational(2), 1);
  const Polynomial two_z = Polynomial::monomial(Rational(2), 1);
  for (int k = 1; k < n; ++k) {
    Polynomial next = two_z * cur + Rational(2 * sign * k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Polynomial hermite(int n) {
  require_nonnegative(n);
  return cache(0).get(n, Rational(0), [n] { return hermite_recurrence(n, -1); });
}

Polynomial pseudo_hermite(int m) {
  require_nonnegative(m);
  return cache(1).get(m, Rational(0), [m] { return hermite_recurrence(m, +1); });
}

Polynomial laguerre(int n, const Rational& alpha) {
  if (n < -1) throw std::invalid_argument("Laguerre degree below -1");
  if (n == -1) return {};
  return cache(2).get(n, alpha, [n, &alpha] {
    // (k+1) L_{k+1} = (2k+1+alpha-s) L_k - (k+alpha) L_{k-1}
    Polynomial prev = Polynomial::constant(Rational(1));
    if (n == 0) return prev;
    Polynomial cur{Rational(1) + alpha, Rational(-1)};
    for (int k = 1; k < n; ++k) {
      Polynomial factor{Rational(2 * k + 1) + alpha, Rational(-1)};
      Polynomial next = (factor * cur - (Rational(k) + alpha) * prev) * Rational(1, k + 1);
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  });
}

Polynomial exceptional_hermite(int k, int m) {
  require_nonnegative(k);
  require_nonnegative(m);
  if (k == 0) return Polynomial::constant(Rational(1));
  const int n = k - 1;
  Polynomial p = pseudo_hermite(m);
  return p * hermite(n + 1) + hermite(n) * p.derivative();
}

Polynomial exceptional_laguerre(int n, int m, const Rational& alpha) {
  require_nonnegative(n);
  require_nonnegative(m);
  const Rational beta = alpha + 1;
  auto at_neg = [&](const Polynomial& p) {
    // p(-s)
    std::vector<Rational> c = p.coefficients();
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return Polynomial(std::move(c));
  };
  return at_neg(laguerre(m, alpha)) * laguerre(n, beta) + at_neg(laguerre(m - 1, beta)) * laguerre(n, alpha);
}

}  // namespace rext
