#include "rext/models/model.hpp"

#include <map>
#include <sstream>

#include "rext/errors.hpp"
#include "rext/susy/susy.hpp"

namespace rext {

namespace {

std::string describe(const AxisModel& a) {
  std::ostringstream out;
  out << to_string(a.domain) << "(m=" << a.m;
  if (a.domain != Domain::full) out << ",alpha=" << to_compact_string(a.alpha);
  out << ",omega=" << a.omega.to_string() << ")";
  return out.str();
}

// Visits every tuple in [0, n_max]^dim.
template <class Visit>
void for_each_tuple(std::size_t dim, int n_max, Visit visit) {
  std::vector<int> idx(dim, 0);
  while (true) {
    visit(idx);
    std::size_t pos = 0;
    while (pos < dim && idx[pos] == n_max) idx[pos++] = 0;
    if (pos == dim) return;
    ++idx[pos];
  }
}

// Exact energy coefficients in units of sqrt(radicand), one per axis level.
struct ExactAxes {
  Integer radicand{1};
  std::vector<Rational> omega;
};

ExactAxes exact_axes(const ModelND& model) {
  ExactAxes out;
  out.radicand = model.axes.front().omega.radicand();
  for (const auto& a : model.axes) {
    if (a.omega.radicand() != out.radicand) {
      throw IrrationalRatioUnsupported("frequencies " + model.axes.front().omega.to_string() + " and " +
                                       a.omega.to_string() + " have an irrational ratio");
    }
    out.omega.push_back(a.omega.coefficient());
  }
  return out;
}

Rational exact_level(const ModelND& model, const ExactAxes& ex, const std::vector<int>& idx) {
  Rational total(0);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    total += extended_energy(model.axes[k], idx[k]).coefficients[0] * ex.omega[k];
  }
  return total;
}

}  // namespace

std::vector<Frequency> ModelND::frequencies() const {
  std::vector<Frequency> out;
  for (const auto& a : axes) out.push_back(a.omega);
  return out;
}

std::vector<std::string> ModelND::axis_labels() const {
  if (kind == ModelKind::cylindrical) return {"w", "wz"};
  if (axes.size() == 1) return {"w"};
  std::vector<std::string> labels{"wx", "wy", "wz"};
  labels.resize(axes.size());
  return labels;
}

std::string ModelND::id() const {
  std::ostringstream out;
  if (kind == ModelKind::cylindrical) {
    out << "cylindrical(gamma=" << gamma.value_or(0) << ",m1=" << axes[0].m << ",m2=" << axes[1].m
        << ",omega=" << axes[0].omega.to_string() << ",omega_z=" << axes[1].omega.to_string() << ")";
    return out.str();
  }
  for (std::size_t k = 0; k < axes.size(); ++k) out << (k ? "+" : "") << describe(axes[k]);
  return out.str();
}

ModelND assemble_tensor(std::vector<AxisModel> axes) {
  if (axes.empty() || axes.size() > 3) throw InvalidSpec("a tensor model has one to three axes");
  for (const auto& a : axes) {
    if (a.domain == Domain::radial) throw InvalidSpec("radial axes belong to cylindrical models");
    a.validate();
  }
  if (axes.size() == 2 && axes[0].domain == Domain::half && axes[1].domain == Domain::half &&
      axes[0].alpha < 0 && axes[1].alpha > 0) {
    std::swap(axes[0], axes[1]);
  }
  return ModelND{ModelKind::tensor, std::move(axes), std::nullopt};
}

ModelND cylindrical_model(int gamma, int m1, int m2, const Frequency& omega, const Frequency& omega_z) {
  if (m2 % 2 != 0) throw OddM2("m2 = " + std::to_string(m2) + " gives an axial seed with a real zero");
  return ModelND{ModelKind::cylindrical, {AxisModel::radial(m1, gamma, omega), AxisModel::full(m2, omega_z)}, gamma};
}

std::vector<PotentialForm> axis_potentials(const ModelND& model) {
  std::vector<PotentialForm> out;
  for (const auto& a : model.axes) {
    SeedFunction seed = build_seed(a);
    out.push_back(partner_pair(superpotential(seed), factorization_energy(seed)).v_minus);
  }
  return out;
}

bool listed_state(const ModelND& model, const std::vector<int>& indices, StateSet set) {
  if (indices.size() != model.axes.size()) return false;
  if (set == StateSet::complete) return true;
  bool any_full = false, all_extra = true, all_excited = true;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (!model.axes[k].has_extra_state()) continue;
    any_full = true;
    (indices[k] == 0 ? all_excited : all_extra) = false;
  }
  if (!any_full || all_excited) return true;
  if (!all_extra) return false;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (!model.axes[k].has_extra_state() && indices[k] != 0) return false;
  }
  return true;
}

Eigenstate model_state(const ModelND& model, const std::vector<int>& indices) {
  if (indices.size() != model.axes.size()) throw InvalidSpec("one index per axis is required");
  Eigenstate out;
  out.gamma = model.gamma;
  out.energy = model_energy(model, indices);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    Eigenstate axis = extended_state(model.axes[k], indices[k]);
    out.quantum_numbers.push_back(indices[k]);
    out.factors.push_back(axis.factors[0]);
    out.domains.push_back(axis.domains[0]);
  }
  return out;
}

Energy model_energy(const ModelND& model, const std::vector<int>& indices) {
  Energy e{std::vector<Rational>(model.axes.size()), model.frequencies()};
  for (std::size_t k = 0; k < indices.size(); ++k) {
    e.coefficients[k] = extended_energy(model.axes[k], indices[k]).coefficients[0];
  }
  return e;
}

Eigenstate cylindrical_state(int n1, int k, int gamma, int m1, int m2, const Frequency& omega, const Frequency& omega_z) {
  return model_state(cylindrical_model(gamma, m1, m2, omega, omega_z), {n1, k});
}

DegeneracyResult degeneracy(const ModelND& model, const Rational& energy, const Integer& radicand, int n_max,
                            StateSet set) {
  ExactAxes ex = exact_axes(model);
  if (energy != 0 && radicand != ex.radicand) {
    throw IrrationalRatioUnsupported("requested energy is not a rational multiple of the axis frequencies");
  }
  DegeneracyResult out{energy, ex.radicand, {}};
  for_each_tuple(model.axes.size(), n_max, [&](const std::vector<int>& idx) {
    if (listed_state(model, idx, set) && exact_level(model, ex, idx) == energy) out.witnesses.push_back(idx);
  });
  return out;
}

std::vector<std::pair<Rational, std::size_t>> level_multiplicities(const ModelND& model, int n_max, StateSet set) {
  ExactAxes ex = exact_axes(model);
  std::map<Rational, std::size_t> levels;
  for_each_tuple(model.axes.size(), n_max, [&](const std::vector<int>& idx) {
    if (listed_state(model, idx, set)) ++levels[exact_level(model, ex, idx)];
  });
  return {levels.begin(), levels.end()};
}

}  // namespace rext
