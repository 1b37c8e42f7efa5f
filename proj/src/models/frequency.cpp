#include "rext/models/frequency.hpp"

#include <cmath>

#include "rext/errors.hpp"

namespace rext {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Frequency::Frequency(Rational coefficient, Integer radicand) {
  if (radicand <= 0) throw InvalidSpec("frequency radicand must be positive");
  // pull square factors out of the radicand
  Integer r = radicand;
  for (Integer p = 2; p * p <= r; ++p) {
    while (r % (p * p) == 0) {
      r /= p * p;
      coefficient *= Rational(p);
    }
  }
  if (coefficient <= 0) throw InvalidSpec("frequency must be positive");
  coefficient_ = std::move(coefficient);
  radicand_ = std::move(r);
  value_ = to_double(coefficient_) * std::sqrt(radicand_.convert_to<double>());
}

Frequency Frequency::parse(std::string_view text) {
  text = trim(text);
  Rational coefficient(1);
  Integer radicand(1);
  auto root = text.find("sqrt(");
  try {
    if (root != std::string_view::npos) {
      auto close = text.find(')', root);
      if (close == std::string_view::npos || close + 1 != text.size()) throw InvalidSpec("malformed sqrt");
      Rational inner = parse_rational(text.substr(root + 5, close - root - 5));
      if (!is_integer(inner)) {
        // sqrt(p/q) = sqrt(p q) / q
        Integer p = boost::multiprecision::numerator(inner);
        Integer q = boost::multiprecision::denominator(inner);
        radicand = p * q;
        coefficient = Rational(1, 1) / Rational(q);
      } else {
        radicand = boost::multiprecision::numerator(inner);
      }
      auto prefix = trim(text.substr(0, root));
      if (!prefix.empty()) {
        if (prefix.back() != '*') throw InvalidSpec("expected '*' before sqrt");
        prefix.remove_suffix(1);
        coefficient *= parse_rational(prefix);
      }
    } else {
      coefficient = parse_rational(text);
    }
  } catch (const InvalidSpec&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidSpec("bad frequency '" + std::string(text) + "': " + e.what());
  }
  return Frequency(coefficient, radicand);
}

double Frequency::scale() const { return std::sqrt(value_ / 2.0); }

std::string Frequency::to_string() const {
  if (is_rational()) return to_compact_string(coefficient_);
  std::string root = "sqrt(" + radicand_.str() + ")";
  if (coefficient_ == 1) return root;
  return to_compact_string(coefficient_) + "*" + root;
}

}  // namespace rext
