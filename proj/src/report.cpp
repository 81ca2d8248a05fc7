#include "syncav/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace syncav {

bool DiagnosticsReport::all_pass() const {
  for (const auto& v : verdicts)
    if (!v.pass) return false;
  return true;
}

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_report_csv(const DiagnosticsReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "n,g_n,h_n,cesaro_g,sync_max,residual\n";
  const auto cell = [](double v) { return std::isnan(v) ? std::string() : format_full(v); };
  for (const auto& r : report.rows) {
    out << r.n << ',' << cell(r.g) << ',' << cell(r.h) << ',' << cell(r.cesaro_g)
        << ',' << cell(r.sync_max) << ',' << cell(r.residual) << '\n';
  }
}

void write_verdicts_json(const DiagnosticsReport& report, const std::string& path) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : report.verdicts) {
    nlohmann::ordered_json item;
    item["property"] = v.property;
    item["threshold"] = v.threshold;
    item["observed"] = v.observed;
    item["pass"] = v.pass;
    arr.push_back(item);
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << arr.dump(2) << '\n';
}

}  // namespace syncav
