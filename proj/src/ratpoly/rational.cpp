#include "rext/ratpoly/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rext {

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("bad integer literal '" + std::string(text) + "'");
    }
  }
  const bool negative = text[0] == '-';
  // GMP would read a leading zero as an octal prefix
  std::string_view body = text.substr(start);
  while (body.size() > 1 && body.front() == '0') body.remove_prefix(1);
  Integer value{std::string(body)};
  return negative ? Integer(-value) : value;
}

Rational parse_decimal(std::string_view text) {
  int exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    exponent = std::stoi(std::string(text.substr(e + 1)));
    text = text.substr(0, e);
  }
  std::string digits;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
    exponent -= static_cast<int>(text.size() - dot - 1);
  } else {
    digits = std::string(text);
  }
  if (digits.empty()) throw std::invalid_argument("bad decimal literal");
  Rational value(parse_integer(digits));
  Integer ten_power = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::abs(exponent)));
  value = exponent >= 0 ? value * Rational(ten_power) : value / Rational(ten_power);
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
  return Rational(parse_integer(text));
}

std::string to_fraction_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string to_compact_string(const Rational& q) {
  if (is_integer(q)) return boost::multiprecision::numerator(q).str();
  return to_fraction_string(q);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace rext
