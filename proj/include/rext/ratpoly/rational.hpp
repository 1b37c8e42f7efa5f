#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace rext {

/// Exact rational number, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// Accepts "n", "n/d", and plain decimals such as "-0.25" or "1.5e-3".
Rational parse_rational(std::string_view text);

/// Always "num/den", e.g. "3/1", "-1/2".
std::string to_fraction_string(const Rational& q);

/// Shortest form: "3", "-1/2".
std::string to_compact_string(const Rational& q);

double to_double(const Rational& q);

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

}  // namespace rext
