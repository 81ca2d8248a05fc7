#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace syncav {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct ReportRow {
  std::int64_t n = 0;
  double g = kUnset;         // forward image diameter g_n
  double h = kUnset;         // pullback image diameter h_n
  double cesaro_g = kUnset;  // (1/n) sum_{i<=n} g_i
  double sync_max = kUnset;  // strong sync profile value
  double residual = kUnset;  // invariance residual
};

struct Verdict {
  std::string property;
  double threshold = 0.0;
  double observed = 0.0;
  bool pass = false;
};

struct DiagnosticsReport {
  std::vector<ReportRow> rows;
  std::vector<Verdict> verdicts;

  // provenance
  std::string preset;
  std::string scenario;
  std::vector<std::uint64_t> seeds;
  double epsilon = 0.0;
  std::int64_t n_max = 0;

  bool all_pass() const;
};

// Fixed columns n,g_n,h_n,cesaro_g,sync_max,residual; unset cells are left
// empty; 17 significant digits so downstream tolerances stay meaningful.
void write_report_csv(const DiagnosticsReport& report, const std::string& path);

// Array of {property, threshold, observed, pass}, in insertion order.
void write_verdicts_json(const DiagnosticsReport& report, const std::string& path);

std::string format_full(double v);  // %.17g

}  // namespace syncav
