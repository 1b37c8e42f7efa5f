#include "rext/ratpoly/serialize.hpp"

namespace rext {

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_fraction_string(c));
  return out;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(parse_rational(c.get<std::string>()));
  return Polynomial(std::move(coeffs));
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coefficient(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0) {
      out += to_compact_string(magnitude);
    } else if (magnitude == 1) {
      out += power;
    } else {
      out += to_compact_string(magnitude) + "*" + power;
    }
  }
  return out;
}

nlohmann::json to_json(const RationalFunction& r) {
  return {{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

RationalFunction rational_function_from_json(const nlohmann::json& j) {
  return RationalFunction(polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den")));
}

}  // namespace rext
