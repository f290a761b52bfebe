// zqlab command-line front end: run identity verifiers, oscillation traces,
// zero-table refinement, and the self-test suite.
//
// Exit codes: 0 pass, 1 numeric/verification failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "zqlab/identities.hpp"
#include "zqlab/riesz.hpp"
#include "zqlab/selfcheck.hpp"
#include "zqlab/version.hpp"

namespace {

using namespace zqlab;

struct VerifyFlags {
  std::string identity_id;
  std::optional<double> x, y, a, b, alpha, delta, tol;
  std::optional<int> zeros;
  std::optional<long long> terms;
  std::string json_path, csv_path;
  bool fast = false;
  bool experimental = false;
};

identities::VerifierConfig build_config(const std::string& id, const VerifyFlags& fl) {
  identities::VerifierConfig cfg = identities::default_config(id);
  if (fl.zeros) cfg.zero_count = *fl.zeros;
  if (fl.terms) cfg.series_terms = *fl.terms;
  if (fl.tol) cfg.tolerance = *fl.tol;
  cfg.fast = fl.fast;
  cfg.experimental_d2_kernel = fl.experimental;
  return cfg;
}

identities::ParamMap build_params(const VerifyFlags& fl) {
  identities::ParamMap p;
  if (fl.x) p["x"] = *fl.x;
  if (fl.y) p["y"] = *fl.y;
  if (fl.a) p["a"] = *fl.a;
  if (fl.b) p["b"] = *fl.b;
  if (fl.alpha) p["alpha"] = *fl.alpha;
  if (fl.delta) p["delta"] = *fl.delta;
  return p;
}

int run_verify(const VerifyFlags& fl, const std::string& command_line) {
  std::vector<identities::IdentityReport> reports;
  identities::VerifierConfig cfg_used;
  if (fl.identity_id == "all") {
    for (const auto& entry : identities::registry()) {
      const auto cfg = build_config(entry.id, fl);
      cfg_used = cfg;
      auto rs = entry.run(build_params(fl), cfg);
      reports.insert(reports.end(), rs.begin(), rs.end());
    }
    if (fl.experimental) {
      auto cfg = build_config("d2-kernel-experimental", fl);
      reports.push_back(identities::verify_d2_kernel_experimental(cfg));
    }
  } else {
    auto entry = identities::find_identity(fl.identity_id);
    if (!entry) {
      std::fprintf(stderr, "unknown identity: %s\n", fl.identity_id.c_str());
      return 2;
    }
    const auto cfg = build_config(fl.identity_id, fl);
    cfg_used = cfg;
    reports = entry->run(build_params(fl), cfg);
    if (fl.experimental && fl.identity_id == "all") {
      reports.push_back(identities::verify_d2_kernel_experimental(cfg));
    }
  }
  bool all_pass = true;
  for (const auto& r : reports) {
    std::puts(identities::report_table_row(r).c_str());
    all_pass = all_pass && r.pass;
  }
  if (!fl.json_path.empty()) {
    std::ofstream out(fl.json_path);
    if (!out) {
      std::fprintf(stderr, "cannot write %s\n", fl.json_path.c_str());
      return 1;
    }
    out << identities::reports_to_json(reports, command_line, cfg_used) << "\n";
  }
  return all_pass ? 0 : 1;
}

int run_oscillate(const std::string& kind_s, double delta, double ymin, double ymax,
                  int points, const std::string& csv, int zeros) {
  const auto kind = riesz::kind_from_string(kind_s);
  const auto grid = riesz::log_spaced_grid(ymin, ymax, points);
  const auto atab = arith::shared_table(static_cast<std::int64_t>(std::ceil(ymax)));
  const auto& ztab = identities::shared_zero_table(zeros);
  const auto tr = riesz::trace(kind, grid, delta, *atab, ztab);
  if (!csv.empty()) riesz::write_trace_csv(tr, csv);
  const int sc = riesz::sign_changes(tr);
  const double tail = riesz::zero_main_term_tail_bound(kind, delta, ztab);
  std::printf("kind=%s delta=%g points=%zu sign_changes=%d zero_sum_tail_bound=%.3e\n",
              riesz::to_string(kind).c_str(), delta, tr.points.size(), sc, tail);
  return 0;
}

int run_zeros(int count, const std::string& out_path) {
  const auto table = zeta::zero_table(count);
  if (!out_path.empty()) {
    zeta::write_seed_file(out_path, table);
  } else {
    for (const auto& z : table.zeros)
      std::printf("%d %.12f   # |zeta(rho)| = %.2e\n", z.index, z.gamma, z.residual);
  }
  return 0;
}

int run_selftest(bool fast) {
  const auto results = selfcheck::run_all(fast);
  int failures = 0;
  for (const auto& c : results) {
    std::printf("%-44s %s  (%.3e <= %.3e)\n", c.name.c_str(), c.pass ? "PASS" : "FAIL",
                c.value, c.bound);
    if (!c.pass) ++failures;
  }
  std::printf("selftest: %zu checks, %d failures\n", results.size(), failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zqlab: numerical verification of zeta-zero summation identities"};
  app.set_version_flag("--version", zqlab::kVersion);
  app.require_subcommand(1);

  VerifyFlags fl;
  auto* verify = app.add_subcommand("verify", "run an identity verifier (or 'all')");
  verify->add_option("identity", fl.identity_id, "identity id or 'all'")->required();
  verify->add_option("--x", fl.x);
  verify->add_option("--y", fl.y);
  verify->add_option("--a", fl.a);
  verify->add_option("--b", fl.b);
  verify->add_option("--alpha", fl.alpha);
  verify->add_option("--delta", fl.delta);
  verify->add_option("--zeros", fl.zeros);
  verify->add_option("--terms", fl.terms);
  verify->add_option("--tol", fl.tol);
  verify->add_option("--json", fl.json_path);
  verify->add_option("--csv", fl.csv_path);
  verify->add_flag("--fast", fl.fast);
  verify->add_flag("--experimental-d2-kernel", fl.experimental);

  std::string osc_kind = "mu", osc_csv;
  double osc_delta = 0.1, osc_ymin = 1e3, osc_ymax = 1e6;
  int osc_points = 400, osc_zeros = 100;
  auto* osc = app.add_subcommand("oscillate", "Riesz-sum oscillation trace");
  osc->add_option("--kind", osc_kind, "mu | lambda | d2");
  osc->add_option("--delta", osc_delta);
  osc->add_option("--ymin", osc_ymin);
  osc->add_option("--ymax", osc_ymax);
  osc->add_option("--points", osc_points);
  osc->add_option("--csv", osc_csv);
  osc->add_option("--zeros", osc_zeros);

  int zeros_count = 100;
  std::string zeros_out;
  auto* zcmd = app.add_subcommand("zeros", "refine and emit the zero table");
  zcmd->add_option("--count", zeros_count);
  zcmd->add_option("--out", zeros_out);

  bool st_fast = false;
  auto* st = app.add_subcommand("selftest", "run the invariant suites");
  st->add_flag("--fast", st_fast);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  std::string command_line;
  for (int i = 0; i < argc; ++i) {
    if (i) command_line += ' ';
    command_line += argv[i];
  }

  try {
    if (verify->parsed()) return run_verify(fl, command_line);
    if (osc->parsed()) {
      if (osc_points < 1 || !(osc_ymin < osc_ymax)) {
        std::fprintf(stderr, "oscillate: need points >= 1 and ymin < ymax\n");
        return 2;
      }
      return run_oscillate(osc_kind, osc_delta, osc_ymin, osc_ymax, osc_points, osc_csv,
                           osc_zeros);
    }
    if (zcmd->parsed()) return run_zeros(zeros_count, zeros_out);
    if (st->parsed()) return run_selftest(st_fast);
  } catch (const zqlab::numeric_error& e) {
    std::fprintf(stderr, "numeric failure: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
