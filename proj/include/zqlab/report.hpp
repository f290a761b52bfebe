#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zqlab/arith.hpp"

namespace zqlab::identities {

struct VerifierConfig {
  std::int64_t series_terms = 1000000;
  int zero_count = 40;
  double quad_tol = 1e-10;
  arith::SmoothingScheme smoothing{arith::SmoothingScheme::Kind::abel_exponential, 2, 1e6};
  double tolerance = 1e-8;
  bool fast = false;                 // trims the 1e6-scale smoothed sums
  bool experimental_d2_kernel = false;
};

struct Truncation {
  std::int64_t series_terms = 0;
  int zero_count = 0;
  double quad_tol = 0.0;
  std::string smoothing;
};

struct IdentityReport {
  std::string identity_id;
  std::map<std::string, double> params;
  double lhs = 0.0;
  double rhs = 0.0;
  std::map<std::string, double> rhs_components;
  double residual_abs = 0.0;
  double residual_rel = 0.0;
  Truncation truncation;
  bool pass = false;
  std::int64_t wall_time_ms = 0;

  void finish(double tolerance);  // fills residuals and pass
};

// JSON with the stable key set: identity_id, params{}, lhs, rhs,
// rhs_components{}, residual_abs, residual_rel, truncation{...}, pass,
// wall_time_ms.
std::string report_to_json(const IdentityReport& r, int indent = 2);
std::string reports_to_json(const std::vector<IdentityReport>& rs,
                            const std::string& command_line,
                            const VerifierConfig& cfg, int indent = 2);

std::string report_table_row(const IdentityReport& r);

}  // namespace zqlab::identities
