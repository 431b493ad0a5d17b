#include <cmath>
#include <cstdio>
#include <ostream>

#include "pslab/cli.hpp"

namespace pslab::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  for (auto& ch : s)
    if (ch == ',') ch = '.';
  return s;
}

namespace {

std::string csv_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  const auto& s = std::get<std::string>(cell);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (const char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<Table>& tables) {
  bool first = true;
  for (const auto& t : tables) {
    if (!first) os << '\n';
    first = false;
    os << "# table: " << t.name << '\n';
    for (const auto& h : t.header) os << "# " << h << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << '\n';
    }
  }
}

nlohmann::ordered_json tables_json(const std::vector<Table>& tables) {
  auto out = nlohmann::ordered_json::object();
  for (const auto& t : tables) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      auto obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i)
        std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
      rows.push_back(std::move(obj));
    }
    out[t.name] = {{"header", t.header}, {"rows", std::move(rows)}};
  }
  return out;
}

}  // namespace pslab::cli
