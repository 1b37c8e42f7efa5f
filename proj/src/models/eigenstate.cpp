#include "rext/models/eigenstate.hpp"

#include <stdexcept>

#include "rext/errors.hpp"

namespace rext {

double Energy::value() const {
  double total = 0.0;
  for (std::size_t k = 0; k < coefficients.size(); ++k) total += to_double(coefficients[k]) * frequencies[k].value();
  return total;
}

std::pair<Rational, Integer> Energy::exact() const {
  Rational total(0);
  std::optional<Integer> radicand;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k] == 0) continue;
    const Frequency& w = frequencies[k];
    if (radicand && *radicand != w.radicand()) {
      throw IrrationalRatioUnsupported("frequencies " + frequencies[0].to_string() + " and " + w.to_string() +
                                       " have an irrational ratio");
    }
    radicand = w.radicand();
    total += coefficients[k] * w.coefficient();
  }
  return {total, radicand.value_or(Integer(1))};
}

std::string Energy::to_string(const std::vector<std::string>& labels) const {
  std::string out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const Rational& c = coefficients[k];
    if (c == 0) continue;
    std::string mag = to_compact_string(c < 0 ? Rational(-c) : c);
    std::string term = (mag == "1" ? "" : mag + "*") + labels.at(k);
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

Energy operator+(const Energy& a, const Energy& b) {
  if (a.frequencies.empty()) return b;
  if (b.frequencies.empty()) return a;
  if (a.frequencies != b.frequencies) throw std::invalid_argument("adding energies over different frequency sets");
  Energy out = a;
  for (std::size_t k = 0; k < out.coefficients.size(); ++k) out.coefficients[k] += b.coefficients[k];
  return out;
}

double Eigenstate::operator()(std::span<const double> x) const {
  if (x.size() != factors.size()) throw std::invalid_argument("point dimension does not match the state");
  double value = 1.0;
  for (std::size_t k = 0; k < factors.size(); ++k) value *= factors[k](x[k]);
  return value;
}

double Eigenstate::operator()(double x) const {
  if (factors.size() != 1) throw std::invalid_argument("scalar evaluation of a multi-axis state");
  return factors[0](x);
}

}  // namespace rext
