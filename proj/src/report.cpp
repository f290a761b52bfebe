#include "zqlab/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "json.hpp"
#include "zqlab/version.hpp"

namespace zqlab::identities {

void IdentityReport::finish(double tolerance) {
  residual_abs = std::abs(lhs - rhs);
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  residual_rel = residual_abs / scale;
  pass = residual_abs <= tolerance;
}

namespace {

nlohmann::ordered_json to_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["identity_id"] = r.identity_id;
  j["params"] = r.params;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["rhs_components"] = r.rhs_components;
  j["residual_abs"] = r.residual_abs;
  j["residual_rel"] = r.residual_rel;
  j["truncation"] = {{"series_terms", r.truncation.series_terms},
                     {"zero_count", r.truncation.zero_count},
                     {"quad_tol", r.truncation.quad_tol},
                     {"smoothing", r.truncation.smoothing}};
  j["pass"] = r.pass;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

}  // namespace

std::string report_to_json(const IdentityReport& r, int indent) {
  return to_json(r).dump(indent);
}

std::string reports_to_json(const std::vector<IdentityReport>& rs,
                            const std::string& command_line,
                            const VerifierConfig& cfg, int indent) {
  nlohmann::ordered_json manifest;
  manifest["command_line"] = command_line;
  manifest["library_version"] = kVersion;
  manifest["config"] = {{"series_terms", cfg.series_terms},
                        {"zero_count", cfg.zero_count},
                        {"quad_tol", cfg.quad_tol},
                        {"smoothing", cfg.smoothing.label()},
                        {"tolerance", cfg.tolerance},
                        {"fast", cfg.fast}};
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  manifest["finished_unix_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
  bool all_pass = true;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) {
    arr.push_back(to_json(r));
    all_pass = all_pass && r.pass;
  }
  nlohmann::ordered_json root;
  root["manifest"] = manifest;
  root["manifest"]["all_pass"] = all_pass;
  root["reports"] = arr;
  return root.dump(indent);
}

std::string report_table_row(const IdentityReport& r) {
  char buf[256];
  std::string params;
  for (const auto& [k, v] : r.params) {
    char p[48];
    std::snprintf(p, sizeof p, "%s=%.6g ", k.c_str(), v);
    params += p;
  }
  std::snprintf(buf, sizeof buf, "%-22s %-24s lhs=%- .12e rhs=%- .12e resid=%.3e  %s",
                r.identity_id.c_str(), params.c_str(), r.lhs, r.rhs, r.residual_abs,
                r.pass ? "PASS" : "FAIL");
  return buf;
}

}  // namespace zqlab::identities
