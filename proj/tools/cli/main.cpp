#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"
#include "rext/errors.hpp"

namespace {

using Command = cli::Document (*)(const cli::RunConfig&);

const std::map<std::string, std::pair<Command, std::string>>& commands() {
  static const std::map<std::string, std::pair<Command, std::string>> table{
      {"table1", {cli::cmd_table1, "Half-line extended potentials for m = 0..3, alpha = -1/2, 1/2"}},
      {"table2", {cli::cmd_table2, "Half-line eigenfunction families for m = 0..3, alpha = -1/2, 1/2"}},
      {"figure1", {cli::cmd_figure1, "Normalized half-line eigenfunctions sampled on (0, L]"}},
      {"spectrum", {cli::cmd_spectrum, "Lowest k exact energies of a model"}},
      {"verify", {cli::cmd_verify, "Compare exact energies with the discretized oracle ('all' or a model)"}},
      {"degeneracy", {cli::cmd_degeneracy, "Index tuples sharing one exact energy"}},
      {"potential", {cli::cmd_potential, "Exact axis potentials of a model"}},
      {"states", {cli::cmd_states, "Normalized closed-form eigenstates of a model"}},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rationally extended harmonic oscillators: exact potentials, states and spectra"};
  app.require_subcommand(1);
  cli::RunConfig cfg;

  app.add_option("--model", cfg.model, "Model as inline JSON or a path to a JSON file");
  app.add_option("--domain", cfg.domain, "full, half, radial or cylindrical (when --model is absent)");
  app.add_option("--omega", cfg.omega, "Axis frequency, e.g. 1, 3/2, sqrt(2)");
  app.add_option("--m", cfg.m, "Seed index m (m1 for cylindrical)");
  app.add_option("--m2", cfg.m2, "Axial seed index of a cylindrical model");
  app.add_option("--alpha", cfg.alpha, "-1/2 or 1/2 for the half line");
  app.add_option("--gamma", cfg.gamma, "Angular number of a radial or cylindrical model");
  app.add_option("--omega-z", cfg.omega_z, "Axial frequency of a cylindrical model");
  app.add_option("--grid-N", cfg.grid_n, "Interior grid points");
  app.add_option("--grid-L", cfg.grid_l, "Truncation length");
  app.add_option("--scheme", cfg.scheme, "fd2 or numerov");
  app.add_option("--format", cfg.format, "json or csv");
  app.add_option("--out", cfg.out, "Output path (default stdout)");
  app.add_option("--tol", cfg.tol, "Absolute eigenvalue tolerance for verify");
  app.add_option("--k", cfg.k, "Number of levels or states");
  app.add_option("--energy", cfg.energy, "Exact energy for degeneracy, e.g. 8 or 8*sqrt(2)");
  app.add_option("--level", cfg.level, "Index of the distinct level for degeneracy");
  app.add_option("--n-max", cfg.n_max, "Largest index per axis in degeneracy enumeration");
  app.add_flag("--complete", cfg.complete, "Use every product state instead of the labeled set");
  app.add_option("--n-list", cfg.n_list, "Indices n for figure1")->delimiter(',');

  for (const auto& [name, entry] : commands()) {
    CLI::App* sub = app.add_subcommand(name, entry.second)->fallthrough();
    if (name == "verify") sub->add_option("target", cfg.target, "'all' for the catalog; omit to use the model flags");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const cli::Format format = cli::parse_format(cfg.format);
    if (!cfg.target.empty() && cfg.target != "all") throw rext::InvalidSpec("verify target must be 'all'");
    try {
      cli::emit(commands().at(cfg.command).first(cfg), format, cfg.out);
    } catch (const cli::VerificationFailed& failed) {
      cli::emit(failed.doc, format, cfg.out);
      std::cerr << "verification failed\n";
      return 1;
    }
  } catch (const rext::ConvergenceFailure& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const rext::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
