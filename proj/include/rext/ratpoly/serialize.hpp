#pragma once

#include <string>

#include <json.hpp>

#include "rext/ratpoly/rational_function.hpp"

namespace rext {

/// Coefficients low to high as "num/den" strings.
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

/// Readable form, highest power first: "4*z^2 + 2", "-1/2*t + 3".
std::string to_string(const Polynomial& p, const std::string& var = "z");

/// {"num": [...], "den": [...]}
nlohmann::json to_json(const RationalFunction& r);
RationalFunction rational_function_from_json(const nlohmann::json& j);

}  // namespace rext
