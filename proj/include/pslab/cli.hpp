#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace pslab::cli {

// Bad flags, unparseable values, out-of-range parameters. Exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct RunConfig {
  std::string command;
  std::string c = "11/10";
  std::int64_t N = 100000;
  std::int64_t M = 0;  // 0: same as N
  double eps = 0.01;
  std::string sigma_variant = "theorem";
  int threads = 1;
  std::uint64_t seed = 1;
  std::string out_path;  // empty: stdout
  Format format = Format::csv;

  std::int64_t n0 = 4;                 // exceptional
  std::vector<std::int64_t> n_list;    // majorarc; empty: floor(3M/4)
  std::vector<std::int64_t> X_list;    // bounds, bprocess, hbident, expsum
  int samples = 16;                    // random x or random G draws
};

// Throws ConfigError on anything invalid.
void validate(const RunConfig& cfg);

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  Table(std::string n, std::vector<std::string> h, std::vector<std::string> cols)
      : name(std::move(n)), header(std::move(h)), columns(std::move(cols)) {}

  std::string name;
  std::vector<std::string> header;  // comment lines: units and the quantity
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

// %.12g with '.' as decimal separator, independent of the locale.
std::string format_number(double v);

void write_csv(std::ostream& os, const std::vector<Table>& tables);
nlohmann::ordered_json tables_json(const std::vector<Table>& tables);

struct Report {
  std::vector<Table> tables;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();  // top-level json fields
};

Report cmd_exceptional(const RunConfig& cfg);
Report cmd_majorarc(const RunConfig& cfg);
Report cmd_moment4(const RunConfig& cfg);
Report cmd_bounds(const RunConfig& cfg);
Report cmd_bprocess(const RunConfig& cfg);
Report cmd_hbident(const RunConfig& cfg);
Report cmd_expsum(const RunConfig& cfg);

Report run_command(const RunConfig& cfg);
void emit(std::ostream& os, const RunConfig& cfg, const Report& report);

// Full driver: parses argv, runs, writes output. Returns the exit code
// (0 ok, 2 configuration, 3 numeric certification).
int main_entry(int argc, char** argv);

}  // namespace pslab::cli
