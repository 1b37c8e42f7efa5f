#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rext/errors.hpp"
#include "rext/models/spec_io.hpp"
#include "rext/numeric/verify.hpp"
#include "rext/orthopoly/families.hpp"
#include "rext/ratpoly/serialize.hpp"

namespace cli {

using nlohmann::json;
using namespace rext;

namespace {

const Rational kHalf(1, 2);

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot read model file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

StateSet state_set(const RunConfig& cfg) { return cfg.complete ? StateSet::complete : StateSet::labeled; }

std::string set_name(const RunConfig& cfg) { return cfg.complete ? "complete" : "labeled"; }

std::vector<std::string> variables(const ModelND& model) {
  if (model.kind == ModelKind::cylindrical) return {"r", "z"};
  if (model.dimension() == 1) return {"x"};
  std::vector<std::string> v{"x", "y", "z"};
  v.resize(model.dimension());
  return v;
}

json indices_json(const std::vector<int>& idx) { return json(idx); }

std::string indices_text(const std::vector<int>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? " " : "") + std::to_string(idx[i]);
  return s;
}

struct Level {
  std::vector<int> indices;
  Energy energy;
};

// The lowest k states of the set, ordered by energy; ties keep index order.
std::vector<Level> lowest_levels(const ModelND& model, int k, StateSet set) {
  if (k < 1) throw InvalidSpec("--k must be positive");
  // every index of one of the lowest k states is at most k
  const int bound = k + 2;
  std::vector<Level> all;
  std::vector<int> idx(model.dimension(), 0);
  while (true) {
    if (listed_state(model, idx, set)) all.push_back({idx, model_energy(model, idx)});
    std::size_t pos = 0;
    while (pos < idx.size() && idx[pos] == bound) idx[pos++] = 0;
    if (pos == idx.size()) break;
    ++idx[pos];
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const Level& a, const Level& b) { return a.energy.value() < b.energy.value(); });
  if (static_cast<int>(all.size()) > k) all.resize(k);
  return all;
}

json terms_json(const PotentialTerms& t) {
  return {{"quadratic", to_compact_string(t.quadratic())},
          {"constant", to_compact_string(t.constant())},
          {"inverse_square", to_compact_string(t.inverse_square())},
          {"polynomial", to_json(t.polynomial)},
          {"inverse", to_json(t.inverse)},
          {"correction", to_json(t.correction)}};
}

json factor_json(const ExpPolyFunction& f, Domain domain) {
  return {{"domain", to_string(domain)},
          {"power", to_compact_string(f.power())},
          {"num", to_json(f.num())},
          {"den", to_json(f.den())},
          {"num_text", to_string(f.num())},
          {"den_text", to_string(f.den())},
          {"gauss_sign", f.gauss_sign()},
          {"scale", f.scale()},
          {"amplitude", f.amplitude()}};
}

json report_json(const SpectrumReport& r) {
  json j = to_json(r);
  // wall-clock time would break byte-identical output
  j.erase("runtime_ms");
  return j;
}

json axis_json(const AxisModel& axis) {
  json j = {{"domain", to_string(axis.domain)}, {"m", axis.m}, {"omega", axis.omega.to_string()}};
  if (axis.domain != Domain::full) j["alpha"] = to_compact_string(axis.alpha);
  return j;
}

// num/den as text in t.
std::string ratio_text(const Polynomial& num, const Polynomial& den) {
  if (den.degree() == 0 && den.coefficient(0) == 1) return to_string(num, "t");
  return "(" + to_string(num, "t") + ")/(" + to_string(den, "t") + ")";
}

}  // namespace

ModelND resolve_model(const RunConfig& cfg) {
  if (!cfg.model.empty()) {
    std::string text = cfg.model.front() == '{' ? cfg.model : read_file(cfg.model);
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw InvalidSpec(std::string("model is not valid JSON: ") + e.what());
    }
    return model_from_json(j);
  }
  const Frequency omega = Frequency::parse(cfg.omega);
  const int m = cfg.m.value_or(0);
  ModelND model;
  if (cfg.domain == "cylindrical") {
    model = cylindrical_model(cfg.gamma.value_or(0), m, cfg.m2.value_or(0), omega, Frequency::parse(cfg.omega_z));
  } else {
    AxisModel axis;
    switch (parse_domain(cfg.domain)) {
      case Domain::full: axis = AxisModel::full(m, omega); break;
      case Domain::half:
        if (!cfg.alpha) throw InvalidAlpha("half-line models need --alpha -1/2 or 1/2");
        axis = AxisModel::half(m, parse_rational(*cfg.alpha), omega);
        break;
      case Domain::radial: axis = AxisModel::radial(m, cfg.gamma.value_or(0), omega); break;
    }
    model = assemble_tensor({axis});
  }
  for (const auto& axis : model.axes) axis.validate();
  return model;
}

Document cmd_table1(const RunConfig&) {
  Document doc;
  doc.csv_header = {"m", "alpha", "potential"};
  json rows = json::array();
  for (int m = 0; m <= 3; ++m) {
    for (const Rational& a : {-kHalf, kHalf}) {
      PotentialForm v = half_line_potential(m, a, Frequency());
      const std::string render = v.render();
      rows.push_back({{"m", m},
                      {"alpha", to_compact_string(a)},
                      {"potential", render},
                      {"in_t", to_json(v.in_t())},
                      {"in_z", to_json(v.in_z())},
                      {"terms", terms_json(v.terms())}});
      doc.csv_rows.push_back({std::to_string(m), to_compact_string(a), render});
    }
  }
  doc.json = {{"variables", "t = w*x^2, z = sqrt(w/2)*x"}, {"rows", rows}};
  return doc;
}

Document cmd_table2(const RunConfig&) {
  Document doc;
  doc.csv_header = {"m", "alpha", "eigenfunction", "F"};
  json rows = json::array();
  for (int m = 0; m <= 3; ++m) {
    for (const Rational& a : {-kHalf, kHalf}) {
      // F = (L_m^(a)(-z^2) + L_{m-1}^(a+1)(-z^2)) / L_m^(a)(-z^2), rewritten in t = 2 z^2
      Polynomial lm = laguerre(m, a).compose_neg_square();
      Polynomial lower = m >= 1 ? laguerre(m - 1, a + 1).compose_neg_square() : Polynomial();
      RationalFunction f = RationalFunction(lm + lower, lm).even_to_square_variable(kHalf);
      const std::string pre = a < 0 ? "x" : "x^2";
      const std::string up = to_compact_string(a + 1), down = to_compact_string(a);
      const std::string ftext = ratio_text(f.num(), f.den());
      std::string form = pre + "*exp(-w*x^2/4)*";
      // for m = 0 the bracket collapses to L_n^(a+1)
      if (m == 0) form += "L_n^(" + up + ")(y)";
      else form += "[L_{n-1}^(" + up + ")(y) + " + ftext + "*L_n^(" + down + ")(y)]";
      json states = json::array();
      for (int n = 0; n <= 3; ++n) {
        ExpPolyFunction s = half_line_state(n, m, a, Frequency()).factors[0];
        states.push_back({{"n", n}, {"energy", half_line_energy(n, m, a, Frequency()).to_string({"w"})},
                          {"factor", factor_json(s, Domain::half)}});
      }
      rows.push_back({{"m", m},
                      {"alpha", to_compact_string(a)},
                      {"eigenfunction", form},
                      {"F", {{"text", ftext}, {"num", to_json(f.num())}, {"den", to_json(f.den())}}},
                      {"states", states}});
      doc.csv_rows.push_back({std::to_string(m), to_compact_string(a), form, ftext});
    }
  }
  doc.json = {{"variables", "t = w*x^2, y = w*x^2/2"}, {"rows", rows}};
  return doc;
}

Document cmd_figure1(const RunConfig& cfg) {
  const int m = cfg.m.value_or(1);
  const Frequency omega = Frequency::parse(cfg.omega);
  const int n_points = cfg.grid_n.value_or(200);
  const double length = cfg.grid_l.value_or(10.0);
  if (n_points < 1 || !(length > 0)) throw InvalidSpec("figure1 needs --grid-N >= 1 and --grid-L > 0");
  std::vector<Rational> alphas;
  if (cfg.alpha) alphas.push_back(parse_rational(*cfg.alpha));
  else alphas = {-kHalf, kHalf};

  struct Curve {
    Rational alpha;
    int n;
    Eigenstate state;
  };
  std::vector<Curve> curves;
  Grid grid(0.0, length, 4000);
  json meta = json::array();
  Document doc;
  doc.csv_header = {"x"};
  for (const Rational& a : alphas) {
    AxisModel axis = AxisModel::half(m, a, omega);
    axis.validate();
    for (int n : cfg.n_list) {
      if (n < 0) throw InvalidSpec("--n-list entries must be nonnegative");
      Eigenstate s = normalize(half_line_state(n, m, a, omega));
      const std::string name = "psi_" + std::to_string(n) + "(alpha=" + to_compact_string(a) + ")";
      doc.csv_header.push_back(name);
      meta.push_back({{"column", name},
                      {"alpha", to_compact_string(a)},
                      {"n", n},
                      {"energy", half_line_energy(n, m, a, omega).to_string({"w"})},
                      {"nodes", node_count(s, grid)},
                      {"wall_power", to_compact_string(s.factors[0].power())}});
      curves.push_back({a, n, std::move(s)});
    }
  }
  json rows = json::array();
  for (int i = 0; i <= n_points; ++i) {
    const double x = length * i / n_points;
    json row = json::array({x});
    std::vector<std::string> csv{format_double(x)};
    for (const auto& c : curves) {
      const double v = c.state(x);
      row.push_back(v);
      csv.push_back(format_double(v));
    }
    rows.push_back(row);
    doc.csv_rows.push_back(csv);
  }
  doc.json = {{"m", m}, {"omega", omega.to_string()}, {"curves", meta}, {"columns", doc.csv_header}, {"rows", rows}};
  return doc;
}

Document cmd_spectrum(const RunConfig& cfg) {
  ModelND model = resolve_model(cfg);
  const auto labels = model.axis_labels();
  Document doc;
  doc.csv_header = {"indices", "exact", "value"};
  json levels = json::array();
  for (const auto& level : lowest_levels(model, cfg.k, state_set(cfg))) {
    json e = to_json(level.energy, labels);
    e["indices"] = indices_json(level.indices);
    levels.push_back(e);
    doc.csv_rows.push_back({indices_text(level.indices), e["exact"], format_double(level.energy.value())});
  }
  doc.json = {{"model", to_json(model)}, {"id", model.id()}, {"state_set", set_name(cfg)}, {"levels", levels}};
  return doc;
}

std::vector<ModelND> catalog_models() {
  std::vector<ModelND> out;
  for (int m : {0, 2}) out.push_back(assemble_tensor({AxisModel::full(m)}));
  for (int m = 0; m <= 3; ++m)
    for (const Rational& a : {-kHalf, kHalf}) out.push_back(assemble_tensor({AxisModel::half(m, a)}));
  out.push_back(assemble_tensor({AxisModel::full(2), AxisModel::full(2)}));
  out.push_back(assemble_tensor({AxisModel::half(1, kHalf), AxisModel::half(1, -kHalf)}));
  out.push_back(assemble_tensor({AxisModel::half(2, -kHalf), AxisModel::half(1, -kHalf)}));
  out.push_back(assemble_tensor({AxisModel::full(2), AxisModel::half(1, -kHalf)}));
  out.push_back(assemble_tensor({AxisModel::full(2), AxisModel::full(0), AxisModel::full(2)}));
  out.push_back(cylindrical_model(1, 1, 0, Frequency(), Frequency()));
  return out;
}

Document cmd_verify(const RunConfig& cfg) {
  std::vector<ModelND> models;
  if (cfg.target == "all") models = catalog_models();
  else models.push_back(resolve_model(cfg));
  OracleSettings settings;
  settings.scheme = parse_scheme(cfg.scheme);
  if (cfg.grid_n) settings.n_points = *cfg.grid_n;
  settings.half_width = cfg.grid_l;
  settings.tolerance = cfg.tol;
  if (!(cfg.tol > 0)) throw InvalidSpec("--tol must be positive");

  Document doc;
  doc.csv_header = {"model", "part", "level", "exact", "analytic", "oracle", "abs_error", "pass"};
  json reports = json::array();
  bool pass = true;
  for (const auto& model : models) {
    for (const auto& r : verify_model(model, cfg.k, settings)) {
      pass = pass && r.pass;
      reports.push_back(report_json(r));
      for (std::size_t j = 0; j < r.levels.size(); ++j) {
        const auto& l = r.levels[j];
        doc.csv_rows.push_back({r.model_id, r.part, std::to_string(j), l.exact, format_double(l.analytic),
                                format_double(l.oracle), format_double(l.error), r.pass ? "true" : "false"});
      }
    }
  }
  doc.json = {{"target", cfg.target.empty() ? "model" : cfg.target}, {"pass", pass}, {"reports", reports}};
  if (!pass) throw VerificationFailed{doc};
  return doc;
}

Document cmd_degeneracy(const RunConfig& cfg) {
  ModelND model = resolve_model(cfg);
  if (cfg.energy.has_value() == cfg.level.has_value()) throw InvalidSpec("degeneracy needs exactly one of --energy, --level");
  if (cfg.n_max < 0) throw InvalidSpec("--n-max must be nonnegative");
  Rational energy;
  Integer radicand = 1;
  if (cfg.energy) {
    // same grammar as a frequency: "8", "15/2", "8*sqrt(2)"; zero is allowed
    if (cfg.energy->find("sqrt") == std::string::npos) {
      energy = parse_rational(*cfg.energy);
      if (energy == 0) radicand = model.frequencies().front().radicand();
    } else {
      Frequency e = Frequency::parse(*cfg.energy);
      energy = e.coefficient();
      radicand = e.radicand();
    }
  } else {
    auto levels = level_multiplicities(model, cfg.n_max, state_set(cfg));
    if (*cfg.level < 0 || *cfg.level >= static_cast<int>(levels.size()))
      throw InvalidSpec("--level out of range for --n-max " + std::to_string(cfg.n_max));
    energy = levels[*cfg.level].first;
    radicand = model.frequencies().front().radicand();
  }
  DegeneracyResult r = degeneracy(model, energy, radicand, cfg.n_max, state_set(cfg));
  std::string exact = radicand == 1 ? to_compact_string(r.energy) : Frequency(r.energy, radicand).to_string();
  if (r.energy == 0) exact = "0";
  json witnesses = json::array();
  Document doc;
  doc.csv_header = {"indices"};
  for (const auto& w : r.witnesses) {
    witnesses.push_back(indices_json(w));
    doc.csv_rows.push_back({indices_text(w)});
  }
  doc.json = {{"model", to_json(model)},
              {"id", model.id()},
              {"state_set", set_name(cfg)},
              {"n_max", cfg.n_max},
              {"energy", {{"exact", exact}, {"value", to_double(r.energy) * std::sqrt(to_double(Rational(radicand)))}}},
              {"count", r.count()},
              {"witnesses", witnesses}};
  return doc;
}

Document cmd_potential(const RunConfig& cfg) {
  ModelND model = resolve_model(cfg);
  const auto labels = model.axis_labels();
  const auto vars = variables(model);
  const auto pots = axis_potentials(model);
  Document doc;
  doc.csv_header = {"axis", "domain", "potential"};
  json axes = json::array();
  for (std::size_t k = 0; k < model.dimension(); ++k) {
    const std::string render = pots[k].render(vars[k], labels[k]);
    json a = axis_json(model.axes[k]);
    a["variable"] = vars[k];
    a["frequency_label"] = labels[k];
    a["potential"] = render;
    a["starting_potential"] = starting_potential(model.axes[k]).render(vars[k], labels[k]);
    a["factorization_energy"] = to_compact_string(factorization_coefficient(model.axes[k])) + "*" + labels[k];
    a["in_z"] = to_json(pots[k].in_z());
    a["in_t"] = to_json(pots[k].in_t());
    a["terms"] = terms_json(pots[k].terms());
    axes.push_back(a);
    doc.csv_rows.push_back({vars[k], to_string(model.axes[k].domain), render});
  }
  doc.json = {{"model", to_json(model)}, {"id", model.id()}, {"axes", axes}};
  if (model.kind == ModelKind::cylindrical) {
    auto c = compare_printed_cylindrical(*model.gamma, model.axes[0].m, model.axes[1].m);
    doc.json["printed_form"] = {{"radial_difference", to_json(c.radial_difference)},
                                {"axial_difference", to_json(c.axial_difference)},
                                {"radial_note", c.radial_note},
                                {"axial_note", c.axial_note}};
  }
  return doc;
}

Document cmd_states(const RunConfig& cfg) {
  ModelND model = resolve_model(cfg);
  const auto labels = model.axis_labels();
  Document doc;
  doc.csv_header = {"indices", "energy", "amplitude"};
  json states = json::array();
  for (const auto& level : lowest_levels(model, cfg.k, state_set(cfg))) {
    Eigenstate s = normalize(model_state(model, level.indices));
    json factors = json::array();
    for (std::size_t a = 0; a < s.dimension(); ++a) factors.push_back(factor_json(s.factors[a], s.domains[a]));
    json e = to_json(level.energy, labels);
    states.push_back({{"indices", indices_json(level.indices)}, {"energy", e}, {"factors", factors}});
    double amplitude = 1.0;
    for (const auto& f : s.factors) amplitude *= f.amplitude();
    doc.csv_rows.push_back({indices_text(level.indices), e["exact"], format_double(amplitude)});
  }
  doc.json = {{"model", to_json(model)},
              {"id", model.id()},
              {"state_set", set_name(cfg)},
              {"form", "amplitude * z^power * num(z)/den(z) * exp(gauss_sign*z^2/2), z = scale*x, per axis"},
              {"states", states}};
  return doc;
}

}  // namespace cli
