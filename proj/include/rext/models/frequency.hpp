#pragma once

#include <string>
#include <string_view>

#include "rext/ratpoly/rational.hpp"

namespace rext {

/// Angular frequency of one axis, stored exactly as coefficient * sqrt(radicand)
/// with a squarefree radicand, so frequency ratios can be tested for
/// rationality without rounding.
class Frequency {
 public:
  Frequency() = default;
  explicit Frequency(Rational coefficient, Integer radicand = 1);

  /// "2", "3/2", "0.75", "sqrt(2)", "3*sqrt(8)", "3/2*sqrt(5)".
  static Frequency parse(std::string_view text);

  const Rational& coefficient() const { return coefficient_; }
  const Integer& radicand() const { return radicand_; }
  bool is_rational() const { return radicand_ == 1; }
  double value() const { return value_; }
  /// sqrt(omega / 2): maps x to the dimensionless z.
  double scale() const;
  std::string to_string() const;

  friend bool operator==(const Frequency& a, const Frequency& b) {
    return a.coefficient_ == b.coefficient_ && a.radicand_ == b.radicand_;
  }

 private:
  Rational coefficient_{1};
  Integer radicand_{1};
  double value_ = 1.0;
};

}  // namespace rext
