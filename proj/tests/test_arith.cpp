#include <cmath>

#include "doctest.h"
#include "zqlab/arith.hpp"
#include "zqlab/selfcheck.hpp"
#include "zqlab/zeta.hpp"

using namespace zqlab;
using namespace zqlab::arith;

TEST_CASE("moebius values for N = 10") {
  const ArithTable t(10);
  const int expect[] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
  for (int n = 1; n <= 10; ++n) CHECK(t.moebius(n) == expect[n]);
  CHECK_THROWS_AS(t.lambda(12), numeric_error);  // out of range
  CHECK_THROWS_AS(ArithTable(200000001), numeric_error);
}

TEST_CASE("sieve identities for n <= 1e5") {
  for (const auto& c : selfcheck::sieve_checks(false)) {
    INFO(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("sigma_pow") {
  CHECK(sigma_pow(6, 1.0) == doctest::Approx(12.0));
  CHECK(sigma_pow(6, 0.0) == doctest::Approx(4.0));
  double s = 0.0;
  for (std::int64_t e : {1, 2, 3, 4, 6, 12}) s += std::pow(double(e), -0.5);
  CHECK(sigma_pow(12, -0.5) == doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("c and b values") {
  CHECK(c_value(1) == 1);
  CHECK(c_value(12) == -2);
  CHECK(c_value(360) == 6);
  CHECK(b_value(2) == 4);
  CHECK(b_value(4) == 8);
  CHECK(b_value(6) == 16);
  const ArithTable t(400);
  CHECK(t.c_value(12) == -2);
  CHECK(t.c_value(360) == 6);
  CHECK(t.c_value(1000001) == c_value(1000001));  // beyond the sieve: trial division
  CHECK(t.b_value(360) == b_value(360));
}

TEST_CASE("kappa and cab") {
  CHECK(kappa_value(2, 0.7, -0.3) == 0.0);
  CHECK(kappa_value(1, 0.0, 0.0) == doctest::Approx(1.0));
  CHECK(kappa_value(4, 0.0, 0.0) == doctest::Approx(-1.0));
  CHECK(cab_value(1, 0.0, 0.0) == doctest::Approx(1.0));
  CHECK(cab_value(2, 0.0, 0.0) == doctest::Approx(4.0));
  CHECK(cab_value(4, 0.0, 0.0) == doctest::Approx(8.0));
  // phi_inverse against the Sum d mu(d) oracle
  for (std::int64_t n : {1, 2, 6, 12, 36, 100}) {
    std::int64_t oracle = 0;
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) oracle += d * moebius_value(d);
    CHECK(phi_inverse(n) == oracle);
  }
}

TEST_CASE("dirichlet_convolve") {
  const ArithTable t(10000);
  auto h = dirichlet_convolve([&](std::int64_t n) { return double(t.moebius(n)); },
                              [](std::int64_t) { return 1.0; }, 1000);
  CHECK(h[1] == doctest::Approx(1.0));
  for (int n = 2; n <= 1000; ++n) CHECK(h[n] == doctest::Approx(0.0));
  auto d = dirichlet_convolve([](std::int64_t) { return 1.0; },
                              [](std::int64_t) { return 1.0; }, 1000);
  for (int n = 1; n <= 1000; ++n) CHECK(d[n] == doctest::Approx(double(t.d(n))));
  // b = a * d4 with a(m^2) = m mu(m)
  auto a_fn = [&](std::int64_t n) {
    const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(double(n))));
    if (r * r != n) return 0.0;
    return double(r * t.moebius(r));
  };
  auto b = dirichlet_convolve(a_fn, [&](std::int64_t n) { return double(t.d4(n)); }, 10000);
  for (int n = 1; n <= 10000; ++n) CHECK(b[n] == doctest::Approx(double(t.b_value(n))));
}

TEST_CASE("dirichlet series checks against closed forms") {
  const std::int64_t N = 100000;
  const ArithTable t(N);
  // sum c(n)/n^3 = zeta(5)/zeta(3); tail bound ~ sum_{n>N} sqrt(n) n^{-3}
  const double tail_c = 2.0 / (3.0 * std::pow(double(N), 1.5));
  const double r1 = dirichlet_series_check(
      [&](std::int64_t n) { return double(t.c_value(n)); },
      [](cplx s) { return zeta::zeta(2.0 * s - 1.0) / zeta::zeta(s); }, cplx(3.0), N);
  CHECK(r1 < 1e-6);
  CHECK(r1 <= 2.0 * tail_c);
  // sum b(n)/n^3 = zeta^4(3)/zeta(5); b(n) ~ d4-ish, tail ~ N^{-1} polylog
  const double r2 = dirichlet_series_check(
      [&](std::int64_t n) { return double(t.b_value(n)); },
      [](cplx s) {
        return std::pow(zeta::zeta(s), 4) / zeta::zeta(2.0 * s - 1.0);
      },
      cplx(3.0), N);
  CHECK(r2 < 1e-4);
  // sum |c(n)|/n^3 = zeta(3) zeta(5) / zeta(6)
  const double r3 = dirichlet_series_check(
      [&](std::int64_t n) { return std::abs(double(t.c_value(n))); },
      [](cplx s) {
        return zeta::zeta(s) * zeta::zeta(2.0 * s - 1.0) / zeta::zeta(2.0 * s);
      },
      cplx(3.0), N);
  CHECK(r3 < 1e-6);
}

TEST_CASE("smoothed_sum basics") {
  SmoothingScheme abel{SmoothingScheme::Kind::abel_exponential, 2, 50.0};
  CHECK(smoothed_sum([](std::int64_t) { return 0.0; }, 1.0, abel, 100) == 0.0);
  // sanity: sum n^{-2} e^{-n/X} approaches zeta(2); the Abel bias here is
  // ~log(X)/X from the Gamma pole against zeta(1+s)
  SmoothingScheme big{SmoothingScheme::Kind::abel_exponential, 2, 2000.0};
  const double v = smoothed_sum([](std::int64_t) { return 1.0; }, 2.0, big, 0);
  CHECK(std::abs(v - kPi * kPi / 6.0) < 1e-2);
  CHECK(std::abs(v - kPi * kPi / 6.0) > 1e-4);
  SmoothingScheme bad{SmoothingScheme::Kind::cesaro, 5, 10.0};
  CHECK_THROWS_AS(smoothed_sum([](std::int64_t) { return 1.0; }, 1.0, bad, 100),
                  numeric_error);
}

TEST_CASE("abel-smoothed c sums: fidelity is monotone in X") {
  const CSeries cs3(1e3);
  const CSeries cs5(1e5);
  auto w = [](std::int64_t n) { return 1.0 / double(n); };
  const double e3 = std::abs(cs3.abel_sum(w) - 0.5);
  const double e5 = std::abs(cs5.abel_sum(w) - 0.5);
  CHECK(e5 < e3);
  CHECK(e5 < 2e-5);
  // cesaro cross-check at lower fidelity (order 2)
  const auto ct = c_table(200000);
  SmoothingScheme ces{SmoothingScheme::Kind::cesaro, 2, 10.0};
  const double v = smoothed_sum([&](std::int64_t n) { return double(ct[n]); }, 1.0, ces,
                                200000);
  CHECK(std::abs(v - 0.5) < 5e-2);
}

TEST_CASE("CSeries agrees with the generic smoothed_sum on a small scale") {
  const CSeries cs(200.0);
  const auto ct = c_table(cs.nmax());
  SmoothingScheme abel{SmoothingScheme::Kind::abel_exponential, 2, 200.0};
  const double generic =
      smoothed_sum([&](std::int64_t n) { return double(ct[n]); }, 1.0, abel, 0);
  const double fast = cs.abel_sum([](std::int64_t n) { return 1.0 / double(n); });
  CHECK(fast == doctest::Approx(generic).epsilon(1e-12));
}
