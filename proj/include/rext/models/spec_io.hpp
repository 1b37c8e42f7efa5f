#pragma once

#include <json.hpp>

#include "rext/models/model.hpp"

namespace rext {

/// Reads a model record
///   {"kind": "tensor", "axes": [{"domain": "full", "omega": "1", "m": 2}, ...]}
///   {"kind": "cylindrical", "gamma": 1, "omega_z": "1",
///    "axes": [{"domain": "radial", "m": 1, "omega": "1"}, {"domain": "full", "m": 0}]}
/// Frequencies may be JSON numbers or strings such as "3/2" or "sqrt(2)"; alpha
/// may be -0.5, "-1/2", 0.5 or "1/2". Throws InvalidSpec on anything else.
ModelND model_from_json(const nlohmann::json& j);

/// Canonical record of a model; model_from_json(to_json(m)) rebuilds m.
nlohmann::json to_json(const ModelND& model);

/// {"exact": "4*wx + 3*wy", "coefficients": ["4", "3"], "value": 7.0}
nlohmann::json to_json(const Energy& energy, const std::vector<std::string>& labels);

}  // namespace rext
