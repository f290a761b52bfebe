#include <string>

#include "doctest.h"
#include "json.hpp"
#include "zqlab/identities.hpp"

using namespace zqlab;
using namespace zqlab::identities;

TEST_CASE("report JSON carries the stable schema") {
  auto cfg = default_config("cohen-lambda");
  auto r = verify_cohen_lambda(1.3, cfg);
  const auto j = nlohmann::json::parse(report_to_json(r));
  for (const char* key : {"identity_id", "params", "lhs", "rhs", "rhs_components",
                          "residual_abs", "residual_rel", "truncation", "pass",
                          "wall_time_ms"}) {
    INFO(key);
    CHECK(j.contains(key));
  }
  for (const char* key : {"series_terms", "zero_count", "quad_tol", "smoothing"})
    CHECK(j["truncation"].contains(key));
  CHECK(j["identity_id"] == "cohen-lambda");
  CHECK(j["params"]["x"] == 1.3);
  CHECK(j["residual_abs"].get<double>() <= 1e-8);
  CHECK(j["pass"] == true);
}

TEST_CASE("re-running a verifier is bit-identical in every numeric field") {
  auto cfg = default_config("rg-lambda");
  auto a = verify_rg_lambda(1.0, cfg);
  auto b = verify_rg_lambda(1.0, cfg);
  a.wall_time_ms = b.wall_time_ms = 0;  // the one run-dependent field
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("manifest wraps reports verbatim") {
  auto cfg = default_config("baselines");
  const auto rs = verify_baselines(cfg);
  const auto j = nlohmann::json::parse(reports_to_json(rs, "zqlab verify baselines", cfg));
  REQUIRE(j.contains("manifest"));
  REQUIRE(j.contains("reports"));
  CHECK(j["manifest"]["command_line"] == "zqlab verify baselines");
  CHECK(j["manifest"].contains("library_version"));
  CHECK(j["manifest"].contains("config"));
  CHECK(j["reports"].size() == rs.size());
  CHECK(j["reports"][0]["identity_id"] == rs[0].identity_id);
}
