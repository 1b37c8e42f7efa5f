#pragma once

#include <optional>
#include <string>
#include <vector>

#include "output.hpp"
#include "rext/models/model.hpp"
#include "rext/numeric/report.hpp"

namespace cli {

/// Everything the command line can set. Unset optionals fall back to the
/// per-command defaults.
struct RunConfig {
  std::string command;
  std::string target;  // "all" for verify
  std::string model;   // JSON text or a path to a JSON file
  std::string domain = "full";
  std::string omega = "1";
  std::optional<int> m;
  std::optional<int> m2;
  std::optional<std::string> alpha;
  std::optional<int> gamma;
  std::string omega_z = "1";
  std::optional<int> grid_n;
  std::optional<double> grid_l;
  std::string scheme = "numerov";
  std::string format = "json";
  std::string out;
  double tol = 1e-6;
  int k = 6;
  std::optional<std::string> energy;
  std::optional<int> level;
  int n_max = 20;
  bool complete = false;
  std::vector<int> n_list{0, 1, 2, 3};
};

/// Thrown when a verification ran but did not pass (exit status 1).
struct VerificationFailed {
  Document doc;
};

rext::ModelND resolve_model(const RunConfig& cfg);

Document cmd_table1(const RunConfig& cfg);
Document cmd_table2(const RunConfig& cfg);
Document cmd_figure1(const RunConfig& cfg);
Document cmd_spectrum(const RunConfig& cfg);
/// Throws VerificationFailed (carrying the reports) when any level misses.
Document cmd_verify(const RunConfig& cfg);
Document cmd_degeneracy(const RunConfig& cfg);
Document cmd_potential(const RunConfig& cfg);
Document cmd_states(const RunConfig& cfg);

/// Every catalog family, used by "verify all".
std::vector<rext::ModelND> catalog_models();

}  // namespace cli
