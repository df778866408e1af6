#include "gnio/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gnio {
namespace {

// Parses a full token as a double; rejects partial parses like "x12".
bool parse_double(const std::string& tok, double& out) {
  const char* s = tok.c_str();
  char* end = nullptr;
  out = std::strtod(s, &end);
  if (end == s) return false;
  while (*end == ' ' || *end == '\t') ++end;
  return *end == '\0';
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<ExtendedPenalty> parse_penalty_array(const nlohmann::json& arr,
                                                 const char* key) {
  if (!arr.is_array())
    throw GnioError(ErrorCode::IoFailure, std::string(key) + " must be an array");
  std::vector<ExtendedPenalty> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (v.is_string()) {
      if (v.get<std::string>() != "inf")
        throw GnioError(ErrorCode::IoFailure,
                        std::string(key) + ": only the string \"inf\" is allowed");
      out.push_back(ExtendedPenalty::infinity());
    } else if (v.is_number()) {
      out.push_back(ExtendedPenalty::from_raw(v.get<double>()));
    } else {
      throw GnioError(ErrorCode::IoFailure,
                      std::string(key) + ": entries must be numbers or \"inf\"");
    }
  }
  return out;
}

}  // namespace

CsvData read_y_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GnioError(ErrorCode::IoFailure, "cannot open " + path);
  CsvData data;
  std::string line;
  bool first = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = strip(line);
    if (body.empty()) continue;
    std::string tok1 = body;
    std::string tok2;
    if (const std::size_t comma = body.find(','); comma != std::string::npos) {
      tok1 = strip(body.substr(0, comma));
      tok2 = strip(body.substr(comma + 1));
      if (tok2.find(',') != std::string::npos)
        throw GnioError(ErrorCode::IoFailure,
                        path + ": more than two columns at line " +
                            std::to_string(lineno));
    }
    double y = 0.0;
    if (!parse_double(tok1, y)) {
      if (first) {  // header line
        first = false;
        continue;
      }
      throw GnioError(ErrorCode::IoFailure,
                      path + ": bad number at line " + std::to_string(lineno));
    }
    const bool row_has_w = !tok2.empty();
    if (!data.y.empty() && row_has_w != data.has_w)
      throw GnioError(ErrorCode::IoFailure,
                      path + ": inconsistent column count at line " +
                          std::to_string(lineno));
    data.has_w = row_has_w;
    if (row_has_w) {
      double w = 0.0;
      if (!parse_double(tok2, w))
        throw GnioError(ErrorCode::IoFailure,
                        path + ": bad weight at line " + std::to_string(lineno));
      data.w.push_back(w);
    }
    data.y.push_back(y);
    first = false;
  }
  if (data.y.empty())
    throw GnioError(ErrorCode::IoFailure, path + ": no data rows");
  return data;
}

void write_x_csv(const std::string& path, std::span<const double> x) {
  std::ofstream out(path);
  if (!out) throw GnioError(ErrorCode::IoFailure, "cannot write " + path);
  for (double v : x) out << format_number(v) << '\n';
  if (!out) throw GnioError(ErrorCode::IoFailure, "write failed for " + path);
}

std::pair<std::vector<ExtendedPenalty>, std::vector<ExtendedPenalty>>
read_params_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GnioError(ErrorCode::IoFailure, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw GnioError(ErrorCode::IoFailure, path + ": " + e.what());
  }
  if (!doc.contains("lambda") || !doc.contains("mu"))
    throw GnioError(ErrorCode::IoFailure,
                    path + ": need \"lambda\" and \"mu\" arrays");
  return {parse_penalty_array(doc["lambda"], "lambda"),
          parse_penalty_array(doc["mu"], "mu")};
}

void write_params_json(const std::string& path,
                       const std::vector<ExtendedPenalty>& lambda,
                       const std::vector<ExtendedPenalty>& mu) {
  nlohmann::json doc;
  auto render = [](const std::vector<ExtendedPenalty>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ExtendedPenalty& p : v) {
      if (p.is_infinite())
        arr.push_back("inf");
      else
        arr.push_back(p.finite_value());
    }
    return arr;
  };
  doc["lambda"] = render(lambda);
  doc["mu"] = render(mu);
  std::ofstream out(path);
  if (!out) throw GnioError(ErrorCode::IoFailure, "cannot write " + path);
  out << doc.dump() << '\n';
  if (!out) throw GnioError(ErrorCode::IoFailure, "write failed for " + path);
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_report(const RunReport& report) {
  std::ostringstream out;
  out << "instance_id=" << report.instance_id << " n=" << report.n
      << " loss=" << report.loss << " pattern=" << report.pattern
      << " objective=" << format_number(report.objective)
      << " runtime_seconds=" << format_number(report.runtime_seconds)
      << " breakpoints_inserted=" << report.stats.breakpoints_inserted
      << " breakpoints_deleted=" << report.stats.breakpoints_deleted;
  if (!report.x_output_path.empty())
    out << " x_output_path=" << report.x_output_path;
  return out.str();
}

}  // namespace gnio
