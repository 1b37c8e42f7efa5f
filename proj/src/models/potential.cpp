#include "rext/models/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace rext {

namespace {

// c * w^a * var^b without the sign of c.
std::string monomial(const Rational& c, int a, int b, const std::string& var, const std::string& freq) {
  std::vector<std::string> parts;
  Rational mag = c < 0 ? Rational(-c) : c;
  if (mag != 1 || (a == 0 && b == 0)) parts.push_back(to_compact_string(mag));
  if (a != 0) parts.push_back(a == 1 ? freq : freq + "^" + std::to_string(a));
  if (b != 0) parts.push_back(b == 1 ? var : var + "^" + std::to_string(b));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

struct Term {
  bool negative;
  std::string body;
};

std::string join(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      out += terms[i].negative ? "-" + terms[i].body : terms[i].body;
    } else {
      out += (terms[i].negative ? " - " : " + ") + terms[i].body;
    }
  }
  return out;
}

// p(t) with t = w var^2, times w^extra; highest power first.
std::vector<Term> t_polynomial_terms(const Polynomial& p, int extra, const std::string& var, const std::string& freq) {
  std::vector<Term> terms;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coefficient(k);
    if (c == 0) continue;
    terms.push_back({c < 0, monomial(c, k + extra, 2 * k, var, freq)});
  }
  return terms;
}

std::string parenthesize_if_sum(const std::vector<Term>& terms) {
  std::string s = join(terms);
  return terms.size() > 1 ? "(" + s + ")" : s;
}

// Partial fractions over powers of the squarefree part of the denominator;
// falls back to a single fraction when the denominator is not a pure power.
std::vector<Term> correction_terms(const RationalFunction& r, const std::string& var, const std::string& freq) {
  std::vector<Term> out;
  if (r.is_zero()) return out;
  const Polynomial& den = r.den();
  Polynomial base = divmod(den, gcd(den, den.derivative())).first.primitive();
  int power = 0;
  Polynomial probe = Polynomial::constant(Rational(1));
  while (probe.degree() < den.degree()) {
    probe *= base;
    ++power;
  }
  std::vector<std::pair<Polynomial, int>> pieces;  // numerator, power of base
  if (probe.primitive() == den && base.degree() > 0) {
    Rational lead = den.leading() / probe.leading();
    Polynomial rest = r.num() * (Rational(1) / lead);
    for (int j = 0; j < power; ++j) {
      auto [quot, rem] = divmod(rest, base);
      // rem / base^(power - j)
      if (!rem.is_zero()) pieces.emplace_back(rem, power - j);
      rest = quot;
    }
    std::reverse(pieces.begin(), pieces.end());
  } else {
    base = den;
    pieces.emplace_back(r.num(), 1);
  }
  const std::string den_text = parenthesize_if_sum(t_polynomial_terms(base, 0, var, freq));
  for (const auto& [num, k] : pieces) {
    Polynomial prim = num.primitive();
    Rational content = num.leading() / prim.leading();
    auto num_terms = t_polynomial_terms(prim, 1, var, freq);
    std::string body;
    if (num_terms.size() == 1) {
      // single monomial: fold the content into it
      auto single = t_polynomial_terms(num, 1, var, freq);
      body = single[0].body;
      out.push_back({single[0].negative, body + "/" + den_text + (k > 1 ? "^" + std::to_string(k) : "")});
      continue;
    }
    Rational mag = content < 0 ? Rational(-content) : content;
    body = (mag == 1 ? "" : to_compact_string(mag) + "*") + "(" + join(num_terms) + ")";
    out.push_back({content < 0, body + "/" + den_text + (k > 1 ? "^" + std::to_string(k) : "")});
  }
  return out;
}

Polynomial truncate(const Polynomial& p, int n) {
  std::vector<Rational> c;
  for (int k = 0; k < n && k <= p.degree(); ++k) c.push_back(p.coefficient(k));
  return Polynomial(std::move(c));
}

}  // namespace

PotentialTerms decompose_in_t(const RationalFunction& f) {
  const int v = f.den().valuation();
  const Polynomial d0 = f.den().divide_by_power(v);
  auto [quot, rem] = divmod(f.num(), f.den());
  PotentialTerms out;
  out.polynomial = quot;
  if (v == 0) {
    out.correction = RationalFunction(rem, d0);
    return out;
  }
  // series inverse of d0 modulo t^v
  std::vector<Rational> inv(static_cast<std::size_t>(v));
  inv[0] = Rational(1) / d0.coefficient(0);
  for (int k = 1; k < v; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += d0.coefficient(j) * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = -acc * inv[0];
  }
  Polynomial a = truncate(rem * Polynomial(inv), v);
  Polynomial b = (rem - a * d0).divide_by_power(v);
  std::vector<Rational> inverse(static_cast<std::size_t>(v));
  for (int j = 0; j < v; ++j) inverse[static_cast<std::size_t>(v - j - 1)] = a.coefficient(j);
  out.inverse = Polynomial(std::move(inverse));
  out.correction = RationalFunction(b, d0);
  return out;
}

PotentialForm::PotentialForm(Domain domain, Frequency omega, RationalFunction u)
    : domain_(domain), omega_(std::move(omega)), u_(std::move(u)) {}

RationalFunction PotentialForm::in_t() const { return u_.even_to_square_variable(Rational(1, 2)); }

PotentialTerms PotentialForm::terms() const { return decompose_in_t(in_t()); }

PotentialForm PotentialForm::shifted(const Rational& c) const {
  return PotentialForm(domain_, omega_, u_ + RationalFunction::constant(c));
}

double PotentialForm::operator()(double x) const { return omega_.value() * u_.evaluate(omega_.scale() * x); }

std::string PotentialForm::render(const std::string& var, const std::string& freq) const {
  PotentialTerms t = terms();
  std::vector<Term> all;
  // oscillator and any higher polynomial terms first, constant last
  Polynomial upper = t.polynomial - Polynomial::constant(t.constant());
  for (auto& term : t_polynomial_terms(upper, 1, var, freq)) all.push_back(term);
  for (auto& term : correction_terms(t.correction, var, freq)) all.push_back(term);
  for (int k = 0; k <= t.inverse.degree(); ++k) {
    const Rational& c = t.inverse.coefficient(k);
    if (c == 0) continue;
    // omega * c / t^(k+1) = c w^(-k) / var^(2k+2)
    std::string top = monomial(c, -k, 0, var, freq);
    if (k > 0) top = monomial(c, 0, 0, var, freq) + "/(" + freq + "^" + std::to_string(k) + "*" + var + "^" + std::to_string(2 * k + 2) + ")";
    else top += "/" + var + "^2";
    all.push_back({c < 0, top});
  }
  if (t.constant() != 0) all.push_back({t.constant() < 0, monomial(t.constant(), 1, 0, var, freq)});
  return join(all);
}

}  // namespace rext
