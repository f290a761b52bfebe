#include <cmath>

#include "doctest.h"
#include "zqlab/identities.hpp"
#include "zqlab/quad.hpp"
#include "zqlab/specfun.hpp"

using namespace zqlab;
using namespace zqlab::identities;

namespace {

// unit-test config: smaller Abel scale keeps each corollary around a second
VerifierConfig quick(const std::string& id) {
  VerifierConfig cfg = default_config(id);
  cfg.smoothing.scale = 1e5;
  cfg.zero_count = std::min(cfg.zero_count, 50);
  return cfg;
}

}  // namespace

TEST_CASE("test functions satisfy their Mellin pairs") {
  const TestFunction fns[] = {TestFunction::make_exp(1.0), TestFunction::make_gauss(1.0),
                              TestFunction::make_k0(1.0),
                              TestFunction::make_riesz(10.5, 0.5)};
  for (const auto& tf : fns) {
    for (double s : {0.75, 1.5}) {
      INFO(tf.name());
      CHECK(tf.mellin_pair_residual(s) < 1e-8);
    }
  }
}

TEST_CASE("lambda-exp verifier at y = 1 and y = 2") {
  for (double y : {1.0, 2.0}) {
    const auto r = verify_lambda_exp(y, quick("lambda-exp"));
    INFO("y = ", y, " residual = ", r.residual_abs);
    CHECK(r.residual_abs <= 5e-4);
    CHECK(r.pass);
  }
}

TEST_CASE("lambda-exp mutation control: 1% on the constant term flips it") {
  const auto r = verify_lambda_exp(1.0, quick("lambda-exp"));
  const double mutated_rhs = r.rhs + 0.01 * r.rhs_components.at("constant_term");
  CHECK(std::abs(r.lhs - mutated_rhs) > 1e-3);
}

TEST_CASE("lambda-gauss verifier at y = 1 and y = 0.5") {
  for (double y : {1.0, 0.5}) {
    const auto r = verify_lambda_gauss(y, quick("lambda-gauss"));
    INFO("y = ", y, " residual = ", r.residual_abs);
    CHECK(r.pass);
  }
}

TEST_CASE("lambda-gauss large-n term model") {
  // e^{-z}(I_{-1/4}+I_{1/4})(z) = (8 sqrt(y))/(pi^{3/2} n) (1 + O(1/n^2))
  const double y = 1.0, n = 1e4;
  const double z = kPi * kPi * n * n / (32.0 * y);
  const double w = specfun::bessel_i_scaled(-0.25, z) + specfun::bessel_i_scaled(0.25, z);
  const double model = 8.0 * std::sqrt(y) / (std::pow(kPi, 1.5) * n);
  CHECK(std::abs(w / model - 1.0) < 0.01);
}

TEST_CASE("lambda-k0 verifier at y = 1") {
  const auto r = verify_lambda_k0(1.0, quick("lambda-k0"));
  INFO("residual = ", r.residual_abs);
  CHECK(r.pass);
  // mutation on the Gamma^2(5/4) coefficient
  const double mutated = r.rhs + 0.01 * r.rhs_components.at("constant_term");
  CHECK(std::abs(r.lhs - mutated) > 1e-3);
}

TEST_CASE("lambda-k0: the 2F1 argument stays strictly below 1") {
  const double y = 1e-3;
  for (double n : {1.0, 10.0, 1e6}) {
    const double q = kPi * kPi * n * n + 4.0 * y * y;
    const double sq = std::sqrt(q);
    const double omz = 2.0 * y * y / (sq * (sq + kPi * n));
    CHECK(omz > 0.0);
  }
}

TEST_CASE("lambda-riesz verifier at y = 10.5") {
  const auto r = verify_lambda_riesz(10.5, quick("lambda-riesz"));
  INFO("residual = ", r.residual_abs);
  CHECK(r.pass);
  // LHS is the plain finite sum
  const auto tbl = arith::shared_table(100);
  double direct = 0.0;
  for (int n = 1; n <= 10; ++n) direct += tbl->lambda(n) * std::sqrt(1.0 - n / 10.5);
  CHECK(r.lhs == doctest::Approx(direct).epsilon(1e-14));
  CHECK_THROWS_AS(verify_lambda_riesz(10.0, quick("lambda-riesz")), numeric_error);
}

TEST_CASE("lambda-riesz large-n term model") {
  // J0(t)(sin+cos)(t) + J1(t)(sin-cos)(t) = 4/(pi sqrt(n y)) (1+O(n^{-3/2}))
  const double y = 10.5, n = 1e4;
  const double t = kPi * n * y / 4.0;
  double st, ct;
  sincos_reduced(t, st, ct);
  const double combo = specfun::bessel_j(0.0, t) * (st + ct) +
                       specfun::bessel_j(1.0, t) * (st - ct);
  CHECK(std::abs(combo / (4.0 / (kPi * std::sqrt(n * y))) - 1.0) < 0.02);
}

TEST_CASE("cohen-lambda at x = 1.3 hits 1e-8") {
  auto cfg = default_config("cohen-lambda");
  const auto r = verify_cohen_lambda(1.3, cfg);
  INFO("residual = ", r.residual_abs);
  CHECK(r.residual_abs <= 1e-8);
  // dropping the constant term pushes the residual far out
  const double mutated = r.rhs - r.rhs_components.at("constant_term");
  CHECK(std::abs(r.lhs - mutated) > 1e-3);
}

TEST_CASE("rg-lambda at x = 1 hits 1e-8 with an internal kernel cross-check") {
  auto cfg = default_config("rg-lambda");
  const auto r = verify_rg_lambda(1.0, cfg);
  INFO("residual = ", r.residual_abs);
  CHECK(r.residual_abs <= 1e-8);
  // first series term at n=1, x=1 against the Lemma 4.3 contour at t = 1/sqrt(pi):
  // (1/2 pi i) Int Gamma(1/2-s)/Gamma((1-s)/2) t^{-s} ds with t = x/(sqrt(pi) n)
  const double t = 1.0 / std::sqrt(kPi);
  auto f = [t](cplx s) {
    return std::exp(specfun::log_gamma(0.5 - s) - specfun::log_gamma((1.0 - s) / 2.0) -
                    s * std::log(t));
  };
  const double contour = quad::integrate_vertical_line(f, 0.0, 44.0, 4000).real();
  const double z = 1.0 / (8.0 * t * t);
  const double closed = std::exp(-z) / (4.0 * std::sqrt(2.0) * kPi * t * t) *
                        (specfun::bessel_k(0.25, z) + specfun::bessel_k(0.75, z));
  CHECK(std::abs(contour - closed) < 1e-9);
}

TEST_CASE("mu-ramanujan: alpha = sqrt(pi) self-dual point vanishes exactly") {
  auto cfg = default_config("mu-ramanujan");
  cfg.series_terms = 200000;
  const auto r = verify_mu_ramanujan(std::sqrt(kPi), cfg);
  CHECK(r.lhs == 0.0);                    // exact antisymmetry
  CHECK(std::abs(r.rhs) < 1e-9);          // zero sum vanishes by pairing
}

TEST_CASE("mu-ramanujan at alpha = 1 and 2") {
  auto cfg = default_config("mu-ramanujan");
  cfg.series_terms = 400000;
  for (double alpha : {1.0, 2.0}) {
    const auto r = verify_mu_ramanujan(alpha, cfg);
    INFO("alpha = ", alpha, " residual = ", r.residual_abs);
    CHECK(r.residual_abs <= 1e-3);
    CHECK(std::abs(r.lhs - r.rhs) < 1e-8);  // far tighter in practice
  }
}

TEST_CASE("cohen-sigma rejects degenerate and out-of-range parameters") {
  auto cfg = default_config("cohen-sigma");
  CHECK_THROWS_AS(verify_cohen_sigma(0.0, 0.2, 2.5, cfg), numeric_error);
  CHECK_THROWS_AS(verify_cohen_sigma(0.6, 0.5, 2.5, cfg), numeric_error);  // a+b > 1
  CHECK_THROWS_AS(verify_cohen_sigma(0.3, 0.2, 3.0, cfg), numeric_error);  // integer x
}

TEST_CASE("cohen-sigma at the second reference point (0.4, -0.3, 1.7)") {
  auto cfg = default_config("cohen-sigma");
  cfg.series_terms = 400000;
  const auto r = verify_cohen_sigma(0.4, -0.3, 1.7, cfg);
  INFO("residual = ", r.residual_abs);
  CHECK(r.pass);
}

TEST_CASE("rg-sigma at (0.4, 0.1, 1.0) hits 1e-6") {
  const auto r = verify_rg_sigma(0.4, 0.1, 1.0, default_config("rg-sigma"));
  INFO("residual = ", r.residual_abs);
  CHECK(r.residual_abs <= 1e-6);
  CHECK_THROWS_AS(verify_rg_sigma(0.4, 0.4, 1.0, default_config("rg-sigma")),
                  numeric_error);
}

TEST_CASE("rg-sigma LHS truncation: the n = 20 term is below 1e-30 at x = 1") {
  const double w = 2.0 * 20.0 * 1.0;
  const double term = 8.0 * arith::sigma_pow(20, 0.4) * arith::sigma_pow(20, 0.1) *
                      std::pow(20.0, -0.25) * specfun::bessel_k_scaled(0.2, w) *
                      specfun::bessel_k_scaled(0.05, w) * std::exp(-2.0 * w);
  CHECK(std::abs(term) < 1e-30);
}

TEST_CASE("cohen-d2 internal anchors") {
  // R1(x) vanishes at x = 1/(4 pi^2)
  const double x0 = 1.0 / (4.0 * kPi * kPi);
  const double u = 4.0 * kPi * kPi * x0;
  CHECK(std::abs(std::log(u) * std::log(u) / u) < 1e-25);
  // R0 self-check: Laurent extraction of the a=b=0 integrand residue at s=0
  // must reproduce the Glaisher/Stieltjes closed form
  const double x = 2.5;
  const double uu = 4.0 * kPi * kPi * x;
  auto integrand = [&](cplx s) {
    return std::pow(specfun::gamma(s), 4) * std::pow(zeta::zeta(s), 4) /
           (specfun::gamma(2.0 * s - 1.0) * zeta::zeta(2.0 * s - 1.0)) *
           std::exp(-s * std::log(uu));
  };
  const double res0 =
      quad::laurent_coefficients(integrand, cplx(0.0, 0.0), 0.15, -1, -1)[0].real();
  const auto& rc = zeta::stieltjes_and_local_derivatives();
  const double logA = rc.glaisher_log12 / 12.0;
  const double zpp_m1 = zeta::zeta_derivative(cplx(-1.0, 0.0), 2).real();
  const double g = rc.euler_gamma;
  const double R0 = kPi * kPi / 4.0 + 3.0 * std::pow(std::log(2.0), 2) - 72.0 * logA +
                    6.0 * (g + 12.0 * logA) * (12.0 * logA - std::log(2.0 * kPi)) +
                    std::log(kPi) * std::log(64.0 * std::pow(kPi, 3)) +
                    0.75 * std::log(x) *
                        (4.0 * g + 48.0 * logA - 4.0 * std::log(2.0 * kPi) + std::log(x)) -
                    6.0 * rc.stieltjes_1 + 36.0 * zpp_m1;
  CHECK(std::abs(res0 - R0) < 1e-8);
}

TEST_CASE("rg-d2 at x = 1 hits 1e-6; large-x LHS collapses to the log term") {
  const auto r = verify_rg_d2(1.0, default_config("rg-d2"));
  INFO("residual = ", r.residual_abs);
  CHECK(r.residual_abs <= 1e-6);
  CHECK(r.rhs_components.at("two_radius_gap") < 1e-9);
  // at large x the d^2 K0^2 series is dead and the LHS is the squared log term
  const auto rbig = verify_rg_d2(40.0, default_config("rg-d2"));
  const auto& rc = zeta::stieltjes_and_local_derivatives();
  const double logt = rc.euler_gamma - std::log(4.0 * kPi * kPi / 40.0);
  CHECK(rbig.lhs == doctest::Approx(logt * logt).epsilon(1e-12));
}

TEST_CASE("d2 residue constants: Laurent vs closed forms") {
  const auto r = verify_d2_residue_constants(default_config("d2-residues"));
  CHECK(r.pass);
  CHECK(std::abs(r.rhs_components.at("A3_laurent") - 1.0 / (kPi * kPi)) < 1e-8);
  const auto& rc = zeta::stieltjes_and_local_derivatives();
  const double A2_closed = (12.0 * rc.euler_gamma * std::pow(kPi, 6) -
                            36.0 * std::pow(kPi, 4) * rc.zeta_prime_2) /
                           std::pow(kPi, 8);
  CHECK(std::abs(r.rhs_components.at("A2_laurent") - A2_closed) < 1e-8);
}

TEST_CASE("zero sums in every verifier are conjugate-paired (imag = 0)") {
  // bracketed_zero_sum returns 2*Re by construction; spot-check the raw pairing
  const auto& table = shared_zero_table(10);
  auto term = [](const zeta::ZetaZero& z) {
    return zeta::zeta(2.0 * z.rho) * specfun::gamma(z.rho) / z.zeta_prime;
  };
  const cplx v = zeta::bracketed_zero_sum(term, table);
  CHECK(v.imag() == 0.0);
}

TEST_CASE("cn-sums with the unit-test scale") {
  auto cfg = default_config("cn-sums");
  cfg.smoothing.scale = 1e5;
  const auto rs = verify_cn_sums(cfg);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].residual_abs < 2e-3);
  CHECK(rs[1].residual_abs < 5e-3);
  CHECK(rs[0].pass);
  CHECK(rs[1].pass);
}

TEST_CASE("registry covers the command surface") {
  const char* ids[] = {"lambda-exp", "lambda-gauss", "lambda-k0", "lambda-riesz",
                       "cohen-lambda", "rg-lambda", "mu-ramanujan", "cohen-sigma",
                       "rg-sigma", "cohen-d2", "rg-d2", "cn-sums", "d2-residues",
                       "lemmas", "baselines"};
  for (const char* id : ids) {
    INFO(id);
    CHECK(find_identity(id).has_value());
  }
  CHECK(!find_identity("bogus").has_value());
}
