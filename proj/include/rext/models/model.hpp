#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rext/models/catalog.hpp"

namespace rext {

enum class ModelKind { tensor, cylindrical };

/// Which product states a multi-axis model lists.
///
/// labeled: the states written down for the separable partners. Full-line
/// axes are either all in their extra (k = 0) state with every other axis in
/// its ground state, or all excited (k >= 1) with the others free.
/// complete: every product of one-axis eigenstates.
enum class StateSet { labeled, complete };

/// Separable model: the potential is the sum of its axis potentials and the
/// states are products. A cylindrical model has a radial axis (first) and a
/// full-line axial axis (second).
struct ModelND {
  ModelKind kind = ModelKind::tensor;
  std::vector<AxisModel> axes;
  std::optional<int> gamma;

  std::size_t dimension() const { return axes.size(); }
  std::vector<Frequency> frequencies() const;
  std::vector<std::string> axis_labels() const;
  std::string id() const;
};

/// 1 to 3 axes. A half/half pair given as (-1/2, +1/2) is reordered to
/// (+1/2, -1/2).
ModelND assemble_tensor(std::vector<AxisModel> axes);

/// Radial axis with alpha = |gamma| and m1, axial full-line axis with m2.
/// Throws OddM2 for odd m2.
ModelND cylindrical_model(int gamma, int m1, int m2, const Frequency& omega, const Frequency& omega_z);

/// Axis potentials V-_k(x_k) of the model; the radial one includes the
/// centrifugal term. Built from the seeds through the factorization.
std::vector<PotentialForm> axis_potentials(const ModelND& model);

/// Whether the tuple of spectral indices belongs to the state set.
bool listed_state(const ModelND& model, const std::vector<int>& indices, StateSet set);

Eigenstate model_state(const ModelND& model, const std::vector<int>& indices);
Energy model_energy(const ModelND& model, const std::vector<int>& indices);

/// Cylindrical state with radial index n1 and axial spectral index k.
Eigenstate cylindrical_state(int n1, int k, int gamma, int m1, int m2, const Frequency& omega, const Frequency& omega_z);

struct DegeneracyResult {
  Rational energy;  // in units of sqrt(radicand)
  Integer radicand;
  std::vector<std::vector<int>> witnesses;
  std::size_t count() const { return witnesses.size(); }
};

/// All listed index tuples with every index <= n_max whose exact energy is
/// energy * sqrt(radicand). Throws IrrationalRatioUnsupported when the axis
/// frequencies are not rational multiples of each other.
DegeneracyResult degeneracy(const ModelND& model, const Rational& energy, const Integer& radicand, int n_max,
                            StateSet set = StateSet::labeled);

/// Sorted distinct energies with multiplicities for all listed tuples with
/// indices <= n_max.
std::vector<std::pair<Rational, std::size_t>> level_multiplicities(const ModelND& model, int n_max,
                                                                    StateSet set = StateSet::labeled);

/// Comparison of the constructed cylindrical potential with the closed form
/// printed alongside the construction (taking its m as m1 and L_{m-2} as
/// L_{m1-2}). Differences are reported, not asserted.
struct PrintedFormComparison {
  RationalFunction radial_difference;  // printed - constructed, units of omega
  RationalFunction axial_difference;   // units of omega_z, in the axial z variable
  std::string radial_note;
  std::string axial_note;
};
PrintedFormComparison compare_printed_cylindrical(int gamma, int m1, int m2);

}  // namespace rext
