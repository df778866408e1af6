#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gnio/instance.hpp"

namespace gnio {

// y column with optional second w column; has_w says whether the file
// carried weights (w is empty otherwise).
struct CsvData {
  std::vector<double> y;
  std::vector<double> w;
  bool has_w = false;
};

// One value (or "y,w" pair) per line; a header line is auto-detected by a
// non-numeric first token and skipped.  Throws IoFailure on missing files,
// malformed numbers, or inconsistent column counts.
CsvData read_y_csv(const std::string& path);

// One value per line, 12 significant digits.
void write_x_csv(const std::string& path, std::span<const double> x);

// Structured penalty file: {"lambda": [...], "mu": [...]} where entries are
// nonnegative numbers or the string "inf" (plain numeric CSV cannot carry
// +infinity portably).
std::pair<std::vector<ExtendedPenalty>, std::vector<ExtendedPenalty>>
read_params_json(const std::string& path);

void write_params_json(const std::string& path,
                       const std::vector<ExtendedPenalty>& lambda,
                       const std::vector<ExtendedPenalty>& mu);

// 12 significant digits; infinities print as "inf"/"-inf".
std::string format_number(double v);

struct RunReport {
  std::string instance_id;
  std::size_t n = 0;
  std::string loss;
  std::string pattern;
  double objective = 0.0;
  double runtime_seconds = 0.0;
  SolverStats stats;
  std::string x_output_path;  // empty when x was not written
};

// Single-line key=value rendering, fixed key order.
std::string format_report(const RunReport& report);

}  // namespace gnio
