#include "rext/models/spec_io.hpp"

#include <set>

#include "rext/errors.hpp"

namespace rext {

namespace {

using nlohmann::json;

void allow_keys(const json& j, const std::set<std::string>& keys, const std::string& where) {
  if (!j.is_object()) throw InvalidSpec(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!keys.count(key)) throw InvalidSpec("unknown key '" + key + "' in " + where);
  }
}

std::string scalar_text(const json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number()) return j.dump();
  throw InvalidSpec(what + " must be a number or a string");
}

Frequency frequency_of(const json& j, const char* key) {
  if (!j.contains(key)) return Frequency();
  return Frequency::parse(scalar_text(j.at(key), key));
}

int int_of(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InvalidSpec(where + " needs '" + key + "'");
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw InvalidSpec(std::string(key) + " must be an integer");
  return v.get<int>();
}

Rational alpha_of(const json& j) {
  if (!j.contains("alpha")) throw InvalidAlpha("half-line axes need alpha = -1/2 or 1/2");
  try {
    return parse_rational(scalar_text(j.at("alpha"), "alpha"));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidSpec(std::string("bad alpha: ") + e.what());
  }
}

AxisModel axis_from_json(const json& j) {
  allow_keys(j, {"domain", "omega", "m", "alpha"}, "axis");
  const Domain d = j.contains("domain") ? parse_domain(j.at("domain").get<std::string>()) : Domain::full;
  const int m = int_of(j, "m", "axis");
  const Frequency w = frequency_of(j, "omega");
  switch (d) {
    case Domain::full:
      if (j.contains("alpha")) throw InvalidAlpha("full-line axes take no alpha");
      return AxisModel::full(m, w);
    case Domain::half:
      return AxisModel::half(m, alpha_of(j), w);
    case Domain::radial:
      throw InvalidSpec("radial axes belong to cylindrical models");
  }
  throw InvalidSpec("unknown domain");
}

}  // namespace

ModelND model_from_json(const json& j) {
  try {
    allow_keys(j, {"kind", "axes", "gamma", "omega_z"}, "model");
    const std::string kind = j.value("kind", std::string("tensor"));
    if (!j.contains("axes") || !j.at("axes").is_array()) throw InvalidSpec("model needs an 'axes' array");
    const json& axes = j.at("axes");
    if (kind == "tensor") {
      if (j.contains("gamma") || j.contains("omega_z")) throw InvalidSpec("gamma and omega_z belong to cylindrical models");
      std::vector<AxisModel> out;
      for (const auto& a : axes) out.push_back(axis_from_json(a));
      return assemble_tensor(std::move(out));
    }
    if (kind == "cylindrical") {
      if (axes.size() != 2) throw InvalidSpec("a cylindrical model has a radial and an axial axis");
      allow_keys(axes[0], {"domain", "omega", "m"}, "radial axis");
      allow_keys(axes[1], {"domain", "omega", "m"}, "axial axis");
      if (axes[0].value("domain", std::string("radial")) != "radial") throw InvalidSpec("first axis must be radial");
      if (axes[1].value("domain", std::string("full")) != "full") throw InvalidSpec("second axis must be full");
      if (j.contains("omega_z") && axes[1].contains("omega")) throw InvalidSpec("give omega_z once");
      const int gamma = int_of(j, "gamma", "cylindrical model");
      const Frequency wz = j.contains("omega_z") ? frequency_of(j, "omega_z") : frequency_of(axes[1], "omega");
      ModelND m = cylindrical_model(gamma, int_of(axes[0], "m", "radial axis"), int_of(axes[1], "m", "axial axis"),
                                    frequency_of(axes[0], "omega"), wz);
      m.axes[0].validate();
      return m;
    }
    throw InvalidSpec("unknown model kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("malformed model record: ") + e.what());
  }
}

json to_json(const ModelND& model) {
  json axes = json::array();
  for (std::size_t k = 0; k < model.axes.size(); ++k) {
    const AxisModel& a = model.axes[k];
    json axis{{"domain", to_string(a.domain)}, {"m", a.m}};
    if (!(model.kind == ModelKind::cylindrical && k == 1)) axis["omega"] = a.omega.to_string();
    if (a.domain == Domain::half) axis["alpha"] = to_compact_string(a.alpha);
    axes.push_back(axis);
  }
  json out{{"kind", model.kind == ModelKind::cylindrical ? "cylindrical" : "tensor"}, {"axes", axes}};
  if (model.kind == ModelKind::cylindrical) {
    out["gamma"] = model.gamma.value_or(0);
    out["omega_z"] = model.axes[1].omega.to_string();
  }
  return out;
}

json to_json(const Energy& energy, const std::vector<std::string>& labels) {
  json coefficients = json::array();
  for (const auto& c : energy.coefficients) coefficients.push_back(to_compact_string(c));
  return {{"exact", energy.to_string(labels)}, {"coefficients", coefficients}, {"value", energy.value()}};
}

}  // namespace rext
