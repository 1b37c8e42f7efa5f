#include "output.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "rext/errors.hpp"

namespace cli {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw rext::InvalidSpec("unknown format '" + text + "' (json or csv)");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  return s == "-0" ? "0" : s;
}

nlohmann::json round_floats(const nlohmann::json& j) {
  if (j.is_number_float()) {
    double v = std::strtod(format_double(j.get<double>()).c_str(), nullptr);
    return v;
  }
  if (j.is_array()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : j) out.push_back(round_floats(x));
    return out;
  }
  if (j.is_object()) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [k, v] : j.items()) out[k] = round_floats(v);
    return out;
  }
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(std::ostream& os, const Document& doc) {
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << "\n";
  };
  line(doc.csv_header);
  for (const auto& row : doc.csv_rows) line(row);
}

}  // namespace

void emit(const Document& doc, Format format, const std::string& path) {
  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw rext::InvalidSpec("cannot write '" + path + "'");
  }
  std::ostream& os = path.empty() ? std::cout : file;
  if (format == Format::json) {
    os << round_floats(doc.json).dump(2) << "\n";
  } else {
    write_csv(os, doc);
  }
}

}  // namespace cli
