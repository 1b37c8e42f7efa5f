#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cli {

enum class Format { json, csv };

Format parse_format(const std::string& text);

/// Result of one command: a JSON document and its flat CSV view.
struct Document {
  nlohmann::json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

/// Every floating value in the tree rounded to 12 significant digits, so
/// repeated runs print identical bytes.
nlohmann::json round_floats(const nlohmann::json& j);

std::string format_double(double v);

/// Writes to path, or stdout when path is empty.
void emit(const Document& doc, Format format, const std::string& path);

}  // namespace cli
