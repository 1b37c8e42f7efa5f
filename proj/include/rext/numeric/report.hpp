#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rext/models/model.hpp"
#include "rext/numeric/grid.hpp"

namespace rext {

struct OracleSettings {
  Scheme scheme = Scheme::numerov;
  int n_points = 4000;
  std::optional<double> half_width;  // L; chosen from the energies when absent
  double tolerance = 1e-6;
};

struct LevelComparison {
  std::string exact;  // analytic energy, e.g. "7*w"
  double analytic = 0.0;
  double oracle = 0.0;
  double error = 0.0;
};

struct SpectrumReport {
  std::string model_id;
  std::string part;  // "axis 0", "combined", ...
  Scheme scheme = Scheme::numerov;
  Grid grid;
  std::vector<LevelComparison> levels;
  double tolerance = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
};

/// Truncation L = max(12, 2 sqrt(2 E_max / omega)) / sqrt(min(omega, 1)).
double default_half_width(const AxisModel& axis, double e_max);
Grid oracle_grid(const AxisModel& axis, double e_max, const OracleSettings& settings);

/// Lowest k levels of one axis: analytic energies against the eigenvalues of
/// the discretized V- - epsilon.
SpectrumReport verify_axis(const AxisModel& axis, int k, const OracleSettings& settings, const std::string& model_id = "");

/// One report per axis plus, for several axes, the lowest k listed product
/// levels assembled from the per-axis oracle levels.
std::vector<SpectrumReport> verify_model(const ModelND& model, int k, const OracleSettings& settings);

nlohmann::json to_json(const SpectrumReport& report);

struct ConvergenceRow {
  Scheme scheme;
  int n_points;
  double h;
  double error;  // max error of the lowest three oscillator levels
};

/// V = x^2/4 on [-12, 12], refining N -> 2N + 1 so h halves exactly.
std::vector<ConvergenceRow> convergence_study(Scheme scheme, int n_start, int refinements);

/// error(h) / error(h/2) for consecutive rows.
std::vector<double> convergence_ratios(const std::vector<ConvergenceRow>& rows);

}  // namespace rext
