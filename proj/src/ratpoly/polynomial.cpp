#include "rext/ratpoly/polynomial.hpp"

#include <stdexcept>

#include "rext/errors.hpp"

namespace rext {

namespace {
const Rational kZero{0};

int sign_of(const Rational& q) { return q.sign(); }
}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::identity() { return monomial(Rational(1), 1); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) return kZero;
  return coeffs_.back();
}

int Polynomial::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return static_cast<int>(k);
  }
  return 0;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::compose_scaled_square(const Rational& c) const {
  if (is_zero()) return {};
  std::vector<Rational> out(2 * coeffs_.size() - 1);
  Rational power(1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[2 * k] = coeffs_[k] * power;
    power *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::even_to_square_variable(const Rational& c) const {
  if (parity().value_or(0) != 1) throw std::invalid_argument("even_to_square_variable needs an even polynomial");
  std::vector<Rational> out;
  Rational power(1);
  for (std::size_t k = 0; k < coeffs_.size(); k += 2) {
    out.push_back(coeffs_[k] * power);
    power *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::divide_by_power(int k) const {
  if (k <= 0 || is_zero()) return *this;
  if (valuation() < k) throw std::invalid_argument("polynomial not divisible by z^k");
  return Polynomial(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

Polynomial Polynomial::multiply_by_power(int k) const {
  if (k <= 0 || is_zero()) return *this;
  std::vector<Rational> out(static_cast<std::size_t>(k));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  out *= Rational(1) / leading();
  return out;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm(1);
  for (const auto& c : coeffs_) den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
  Integer num_gcd(0);
  for (const auto& c : coeffs_) {
    Integer scaled = boost::multiprecision::numerator(c) * (den_lcm / boost::multiprecision::denominator(c));
    num_gcd = boost::multiprecision::gcd(num_gcd, scaled);
  }
  Rational factor(den_lcm, num_gcd);
  if (leading() < 0) factor = -factor;
  Polynomial out = *this;
  out *= factor;
  return out;
}

std::optional<int> Polynomial::parity() const {
  bool has_even = false;
  bool has_odd = false;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    (k % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_even && has_odd) return std::nullopt;
  return has_odd ? -1 : 1;
}

Rational Polynomial::operator()(const Rational& z) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double Polynomial::evaluate(double z) const { return horner(to_doubles(), z); }

std::vector<double> Polynomial::to_doubles() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_double(c));
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& coeff : coeffs_) coeff *= c;
  return *this;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw ZeroDenominator("polynomial division by zero");
  std::vector<Rational> rem = dividend.coefficients();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Polynomial{}, dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1);
  const Rational& lead = divisor.leading();
  for (int k = dividend.degree(); k >= dd; --k) {
    const Rational coef = rem[static_cast<std::size_t>(k)] / lead;
    if (coef == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = coef;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= coef * divisor.coefficient(j);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

int count_real_roots(const Polynomial& p, std::optional<Rational> lo, std::optional<Rational> hi) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots of the zero polynomial");
  Polynomial q = divmod(p, gcd(p, p.derivative())).first;  // squarefree part
  for (const auto& bound : {lo, hi}) {
    if (bound && q(*bound) == 0) q = divmod(q, Polynomial{-*bound, Rational(1)}).first;
  }
  if (q.degree() <= 0) return 0;

  std::vector<Polynomial> chain{q, q.derivative()};
  while (!chain.back().is_zero()) {
    Polynomial r = -divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }

  auto changes = [&](const std::optional<Rational>& x, int at_infinity) {
    int count = 0;
    int previous = 0;
    for (const auto& s : chain) {
      int sg;
      if (x) {
        sg = sign_of(s(*x));
      } else {
        sg = sign_of(s.leading());
        if (at_infinity < 0 && s.degree() % 2 == 1) sg = -sg;
      }
      if (sg == 0) continue;
      if (previous != 0 && sg != previous) ++count;
      previous = sg;
    }
    return count;
  };
  return changes(lo, -1) - changes(hi, +1);
}

}  // namespace rext
