#include "rext/numeric/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "rext/errors.hpp"
#include "rext/numeric/eigen.hpp"

namespace rext {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

double default_half_width(const AxisModel& axis, double e_max) {
  const double w = axis.omega.value();
  return std::max(12.0, 2.0 * std::sqrt(2.0 * std::max(e_max, 0.0) / w)) / std::sqrt(std::min(w, 1.0));
}

Grid oracle_grid(const AxisModel& axis, double e_max, const OracleSettings& settings) {
  const double l = settings.half_width.value_or(default_half_width(axis, e_max));
  if (axis.domain == Domain::full) return Grid(-l, l, settings.n_points);
  return Grid(0.0, l, settings.n_points);
}

SpectrumReport verify_axis(const AxisModel& axis, int k, const OracleSettings& settings, const std::string& model_id) {
  const auto start = Clock::now();
  SpectrumReport report;
  report.model_id = model_id.empty() ? ModelND{ModelKind::tensor, {axis}, std::nullopt}.id() : model_id;
  report.part = "axis";
  report.scheme = settings.scheme;
  report.tolerance = settings.tolerance;
  std::vector<Energy> energies;
  for (int j = 0; j < k; ++j) energies.push_back(extended_energy(axis, j));
  report.grid = oracle_grid(axis, energies.back().value(), settings);
  DiscretizedOperator op = discretize(hamiltonian_potential(axis), report.grid, settings.scheme);
  std::vector<double> oracle = lowest_eigenvalues(op, k);
  report.pass = true;
  for (int j = 0; j < k; ++j) {
    LevelComparison level;
    level.exact = energies[j].to_string({"w"});
    level.analytic = energies[j].value();
    level.oracle = oracle[j];
    level.error = std::abs(level.oracle - level.analytic);
    report.pass = report.pass && level.error <= settings.tolerance;
    report.levels.push_back(level);
  }
  report.runtime_ms = elapsed_ms(start);
  return report;
}

std::vector<SpectrumReport> verify_model(const ModelND& model, int k, const OracleSettings& settings) {
  std::vector<SpectrumReport> out;
  std::vector<std::vector<double>> oracle_levels;
  const auto labels = model.axis_labels();
  for (std::size_t a = 0; a < model.axes.size(); ++a) {
    SpectrumReport r = verify_axis(model.axes[a], k, settings, model.id());
    r.part = "axis " + std::to_string(a) + " (" + labels[a] + ")";
    for (int j = 0; j < k; ++j) r.levels[j].exact = extended_energy(model.axes[a], j).to_string({labels[a]});
    std::vector<double> levels;
    for (const auto& level : r.levels) levels.push_back(level.oracle);
    oracle_levels.push_back(levels);
    out.push_back(r);
  }
  if (model.axes.size() == 1) return out;

  const auto start = Clock::now();
  struct Entry {
    double analytic;
    double oracle;
    std::string exact;
  };
  std::vector<Entry> entries;
  std::vector<int> idx(model.axes.size(), 0);
  while (true) {
    if (listed_state(model, idx, StateSet::labeled)) {
      Energy e = model_energy(model, idx);
      double oracle = 0.0;
      for (std::size_t a = 0; a < idx.size(); ++a) oracle += oracle_levels[a][idx[a]];
      entries.push_back({e.value(), oracle, e.to_string(labels)});
    }
    std::size_t pos = 0;
    while (pos < idx.size() && idx[pos] == k - 1) idx[pos++] = 0;
    if (pos == idx.size()) break;
    ++idx[pos];
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.analytic < b.analytic; });
  SpectrumReport combined;
  combined.model_id = model.id();
  combined.part = "combined";
  combined.scheme = settings.scheme;
  combined.grid = out.front().grid;
  combined.tolerance = settings.tolerance * static_cast<double>(model.axes.size());
  combined.pass = true;
  // only levels below the first one a truncated axis could have missed are complete
  for (std::size_t j = 0; j < entries.size() && static_cast<int>(j) < k; ++j) {
    LevelComparison level{entries[j].exact, entries[j].analytic, entries[j].oracle,
                          std::abs(entries[j].oracle - entries[j].analytic)};
    combined.pass = combined.pass && level.error <= combined.tolerance;
    combined.levels.push_back(level);
  }
  combined.runtime_ms = elapsed_ms(start);
  out.push_back(combined);
  return out;
}

nlohmann::json to_json(const SpectrumReport& report) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : report.levels) {
    levels.push_back({{"exact", l.exact}, {"analytic", l.analytic}, {"oracle", l.oracle}, {"abs_error", l.error}});
  }
  return {{"model", report.model_id},
          {"part", report.part},
          {"scheme", to_string(report.scheme)},
          {"grid", {{"a", report.grid.a}, {"b", report.grid.b}, {"n_points", report.grid.n_points}}},
          {"levels", levels},
          {"tolerance", report.tolerance},
          {"pass", report.pass},
          {"runtime_ms", report.runtime_ms}};
}

std::vector<ConvergenceRow> convergence_study(Scheme scheme, int n_start, int refinements) {
  std::vector<ConvergenceRow> rows;
  int n = n_start;
  for (int r = 0; r <= refinements; ++r) {
    Grid grid(-12.0, 12.0, n);
    DiscretizedOperator op = discretize([](double x) { return 0.25 * x * x; }, grid, scheme);
    std::vector<double> levels = lowest_eigenvalues(op, 3);
    double error = 0.0;
    for (int j = 0; j < 3; ++j) error = std::max(error, std::abs(levels[j] - (j + 0.5)));
    rows.push_back({scheme, n, grid.h(), error});
    n = 2 * n + 1;
  }
  return rows;
}

std::vector<double> convergence_ratios(const std::vector<ConvergenceRow>& rows) {
  std::vector<double> out;
  for (std::size_t i = 1; i < rows.size(); ++i) out.push_back(rows[i - 1].error / rows[i].error);
  return out;
}

}  // namespace rext
