#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rext/domain.hpp"
#include "rext/models/frequency.hpp"
#include "rext/ratpoly/exppoly.hpp"

namespace rext {

/// Exact energy sum_k c_k omega_k over the frequencies of a model's axes.
struct Energy {
  std::vector<Rational> coefficients;
  std::vector<Frequency> frequencies;

  static Energy single(Rational c, Frequency omega) { return {{std::move(c)}, {std::move(omega)}}; }

  double value() const;
  /// Exact value as q * sqrt(r); throws IrrationalRatioUnsupported when the
  /// frequencies carry different radicands.
  std::pair<Rational, Integer> exact() const;
  /// "3*w", "4*wx + 3*wy" with the given axis labels.
  std::string to_string(const std::vector<std::string>& labels) const;

  friend Energy operator+(const Energy& a, const Energy& b);
  friend bool operator==(const Energy& a, const Energy& b) {
    return a.coefficients == b.coefficients && a.frequencies == b.frequencies;
  }
};

/// Product state: one closed-form factor per axis.
struct Eigenstate {
  std::vector<int> quantum_numbers;  // spectral index per axis
  std::optional<int> gamma;          // angular number of a cylindrical state
  Energy energy;
  std::vector<ExpPolyFunction> factors;
  std::vector<Domain> domains;
  bool normalized = false;

  std::size_t dimension() const { return factors.size(); }
  double operator()(std::span<const double> x) const;
  /// One-axis shortcut.
  double operator()(double x) const;
};

}  // namespace rext
