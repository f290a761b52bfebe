#include <cmath>
#include <cstdio>

#include "doctest.h"
#include "zqlab/identities.hpp"
#include "zqlab/quad.hpp"
#include "zqlab/riesz.hpp"

using namespace zqlab;
using namespace zqlab::riesz;

TEST_CASE("weighted_sum anchors") {
  const auto tbl = arith::shared_table(2000);
  // delta -> 0 limit reproduces the Mertens partial sum M(10) = -1
  CHECK(weighted_sum(Kind::mu, 10.5, 1e-9, *tbl) == doctest::Approx(-1.0).epsilon(1e-6));
  // lambda, delta = 1/2 matches the lambda-riesz LHS at the same y
  const auto r = identities::verify_lambda_riesz(
      10.5, identities::default_config("lambda-riesz"));
  CHECK(weighted_sum(Kind::lambda, 10.5, 0.5, *tbl) ==
        doctest::Approx(r.lhs).epsilon(1e-13));
  // d2 brute force
  double brute = 0.0;
  for (int n = 1; n <= 100; ++n) {
    int d = 0;
    for (int k = 1; k <= n; ++k)
      if (n % k == 0) ++d;
    brute += double(d) * d * std::pow(1.0 - n / 100.5, 1.1);
  }
  CHECK(weighted_sum(Kind::d2, 100.5, 0.1, *tbl) == doctest::Approx(brute).epsilon(1e-12));
  CHECK_THROWS_AS(weighted_sum(Kind::mu, 1e7, 0.1, *tbl), numeric_error);
}

TEST_CASE("weighted_sum is continuous between integers and jumps at them") {
  const auto tbl = arith::shared_table(2000);
  const double eps = 1e-9;
  const double a = weighted_sum(Kind::mu, 100.4 - eps, 0.3, *tbl);
  const double b = weighted_sum(Kind::mu, 100.4 + eps, 0.3, *tbl);
  CHECK(std::abs(a - b) < 1e-7);
}

TEST_CASE("zero_main_term: empty table gives zero, values are finite") {
  zeta::ZeroTable empty;
  CHECK(zero_main_term(Kind::mu, 100.0, 0.1, empty) == 0.0);
  const auto& table = identities::shared_zero_table(40);
  const double v = zero_main_term(Kind::mu, 1e4, 0.1, table);
  CHECK(std::isfinite(v));
  const double bound = zero_main_term_tail_bound(Kind::mu, 0.1, table);
  CHECK(bound > 0.0);
  CHECK(bound < 10.0);
}

TEST_CASE("d2 beta terms match Lemma-8.1-style quadrature") {
  const double y = 50.0, delta = 0.1;
  const auto& rc = zeta::stieltjes_and_local_derivatives();
  CHECK(d2_beta_term(y, delta, 0) ==
        doctest::Approx(rc.A0 * y / (2.0 + delta)).epsilon(1e-12));
  for (int j = 1; j <= 3; ++j) {
    const double quadv =
        quad::integrate_adaptive(
            [&](double x) {
              return std::pow(1.0 - x / y, 1.0 + delta) * std::pow(std::log(x), j);
            },
            0.0, y, 1e-12)
            .real();
    const double Aj = (j == 1 ? rc.A1 : (j == 2 ? rc.A2 : rc.A3));
    CHECK(d2_beta_term(y, delta, j) == doctest::Approx(Aj * quadv).epsilon(1e-9));
  }
}

TEST_CASE("d2 normalization: modular computation matches brute force") {
  const auto tbl = arith::shared_table(2000);
  const auto& ztab = identities::shared_zero_table(10);
  const double y = 500.5, delta = 0.1;
  const auto tr = trace(Kind::d2, {y}, delta, *tbl, ztab);
  const double brute =
      (weighted_sum(Kind::d2, y, delta, *tbl) - d2_main_term(y, delta)) /
      std::pow(y, 0.25);
  CHECK(tr.points[0].normalized_sum == doctest::Approx(brute).epsilon(1e-9));
}

TEST_CASE("sign changes") {
  RieszTrace t;
  t.kind = Kind::mu;
  t.delta = 0.1;
  for (int i = 0; i < 5; ++i)
    t.points.push_back({double(i + 1), (i % 2 == 0) ? 1.0 : -1.0, 0.0});
  CHECK(sign_changes(t) == 4);
  for (auto& p : t.points) p.normalized_sum = 0.7;
  CHECK(sign_changes(t) == 0);
}

TEST_CASE("lemma4 partial sums: monotone in delta, ratio bounded") {
  const auto& table = identities::shared_zero_table(100);
  const auto a1 = lemma4_partial(0.05, table);
  const auto a2 = lemma4_partial(0.1, table);
  const auto a3 = lemma4_partial(0.2, table);
  CHECK(a1.A >= a2.A);
  CHECK(a2.A >= a3.A);
  for (const auto& l : {a1, a2, a3}) {
    CHECK(l.B / l.A > 1e-2);
    CHECK(l.B / l.A < 1e2);
  }
}

TEST_CASE("kronecker search") {
  // betas all zero accepts t = 0
  const auto t0 = kronecker_search({std::log(2.0), std::log(3.0)}, {0.0, 0.0}, 0.05, 10.0);
  REQUIRE(t0.has_value());
  CHECK(*t0 == doctest::Approx(0.0));
  // a nontrivial simultaneous return time beyond t = 10
  const auto t1 = kronecker_search({std::log(2.0), std::log(3.0)}, {0.0, 0.0}, 0.05, 1e6,
                                   10.0);
  REQUIRE(t1.has_value());
  CHECK(*t1 > 10.0);
  // Lemma-8.3-style sup: with C1 = C2 = 1/2 the cosine sum approaches 2S
  const double s = std::cos(*t1 * std::log(2.0)) + std::cos(*t1 * std::log(3.0));
  CHECK(s >= 2.0 * std::cos(0.05));
}

TEST_CASE("trace emits csv") {
  const auto tbl = arith::shared_table(20000);
  const auto& ztab = identities::shared_zero_table(10);
  const auto grid = log_spaced_grid(1e3, 1e4, 12);
  const auto tr = trace(Kind::mu, grid, 0.1, *tbl, ztab);
  REQUIRE(tr.points.size() == 12);
  write_trace_csv(tr, "test_trace.csv");
  FILE* f = std::fopen("test_trace.csv", "r");
  REQUIRE(f != nullptr);
  char header[64];
  REQUIRE(std::fgets(header, sizeof header, f) != nullptr);
  CHECK(std::string(header) == "y,normalized_sum,predicted\n");
  std::fclose(f);
  std::remove("test_trace.csv");
}
