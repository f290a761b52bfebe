#include <cmath>

#include "doctest.h"
#include "zqlab/quad.hpp"
#include "zqlab/specfun.hpp"

using namespace zqlab;
using namespace zqlab::specfun;

TEST_CASE("gamma basics") {
  CHECK(std::abs(gamma(cplx(0.5)).real() - std::sqrt(kPi)) < 1e-13);
  CHECK(std::abs(gamma(cplx(5.0)).real() - 24.0) < 1e-11);
  CHECK_THROWS_AS(gamma(cplx(-3.0, 0.0)), numeric_error);
}

TEST_CASE("gamma modulus follows the vertical-strip Stirling law") {
  // |Gamma(1/2+30i)| vs sqrt(2 pi) e^{-pi 30/2}; agreement within 1%
  const double mag = std::abs(gamma(cplx(0.5, 30.0)));
  const double stirling = std::sqrt(2.0 * kPi) * std::exp(-kPi * 15.0);
  CHECK(std::abs(mag / stirling - 1.0) < 0.01);
  // frozen reference
  CHECK(mag == doctest::Approx(8.57915721712e-21).epsilon(1e-10));
}

TEST_CASE("gamma reflection and duplication on a complex grid") {
  for (double re : {-1.3, 0.3, 2.7}) {
    for (double im : {0.4, 3.0, 17.0}) {
      const cplx s(re, im);
      CHECK(std::abs(gamma(s) * gamma(1.0 - s) * std::sin(kPi * s) - kPi) < 1e-11 * kPi);
      const cplx lhs = gamma(s) * gamma(s + 0.5);
      const cplx rhs = std::pow(2.0, 1.0 - 2.0 * s) * std::sqrt(kPi) * gamma(2.0 * s);
      CHECK(std::abs(lhs - rhs) < 1e-11 * std::abs(rhs));
    }
  }
}

TEST_CASE("digamma and polygamma against recurrence/known values") {
  CHECK(digamma(1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-13));
  CHECK(digamma(0.5) == doctest::Approx(-kEulerGamma - 2.0 * std::log(2.0)).epsilon(1e-13));
  CHECK(trigamma(1.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
  CHECK(tetragamma(1.0) == doctest::Approx(-2.4041138063191886).epsilon(1e-12));
  // recurrences psi(x+1) = psi(x) + 1/x etc.
  for (double x : {0.3, 1.7, 4.2}) {
    CHECK(digamma(x + 1.0) - digamma(x) == doctest::Approx(1.0 / x).epsilon(1e-12));
    CHECK(trigamma(x + 1.0) - trigamma(x) == doctest::Approx(-1.0 / (x * x)).epsilon(1e-11));
  }
}

TEST_CASE("bessel K: closed forms and integral-representation oracle") {
  // K_{1/2}(x) = sqrt(pi/2x) e^{-x}
  CHECK(bessel_k(0.5, 1.0) ==
        doctest::Approx(std::sqrt(kPi / 2.0) * std::exp(-1.0)).epsilon(1e-12));
  // independent oracle: K_0(1) = Int_0^inf e^{-cosh t} dt
  const double oracle =
      quad::integrate_adaptive([](double t) { return std::exp(-std::cosh(t)); }, 0.0,
                               40.0, 1e-13)
          .real();
  CHECK(std::abs(bessel_k(0.0, 1.0) - oracle) < 1e-10);
  CHECK(bessel_k(0.0, 1.0) == doctest::Approx(0.4210244382407083).epsilon(1e-12));
  // symmetry through the code path
  CHECK(bessel_k(-0.25, 2.0) == bessel_k(0.25, 2.0));
  CHECK_THROWS_AS(bessel_k(0.25, -1.0), numeric_error);
  CHECK_THROWS_AS(bessel_k(0.25, 0.0), numeric_error);
}

TEST_CASE("bessel values against frozen references") {
  CHECK(bessel_y(0.0, 4.0) == doctest::Approx(-0.01694073932506499).epsilon(1e-11));
  CHECK(bessel_k(0.0, 4.0) == doctest::Approx(0.01115967608585302).epsilon(1e-11));
  CHECK(bessel_j(0.0, 4.5) == doctest::Approx(-0.3205425089851214).epsilon(1e-11));
  CHECK(bessel_i(0.0, 1.3) - bessel_i(1.0, 1.3) ==
        doctest::Approx(0.671948482964982).epsilon(1e-12));
}

TEST_CASE("bessel branch seams agree") {
  for (double nu : {0.0, 0.25, 0.75, 1.0, 3.0}) {
    const double xj = 16.0 + std::abs(nu);
    CHECK(std::abs(bessel_j(nu, xj * (1 - 1e-13)) - bessel_j(nu, xj * (1 + 1e-13))) < 1e-10);
    CHECK(std::abs(bessel_y(nu, xj * (1 - 1e-13)) - bessel_y(nu, xj * (1 + 1e-13))) < 1e-10);
    for (double xk : {2.0, 20.0})
      CHECK(std::abs(bessel_k_scaled(nu, xk * (1 - 1e-13)) -
                     bessel_k_scaled(nu, xk * (1 + 1e-13))) < 1e-10);
    CHECK(std::abs(bessel_i_scaled(nu, 30.0 * (1 - 1e-13)) -
                   bessel_i_scaled(nu, 30.0 * (1 + 1e-13))) < 1e-10);
  }
}

TEST_CASE("bessel asymptotic branch agrees with large-argument envelope") {
  // scaled I at a huge argument approaches 1/sqrt(2 pi x)
  const double x = 1e8;
  CHECK(bessel_i_scaled(0.25, x) ==
        doctest::Approx(1.0 / std::sqrt(2.0 * kPi * x)).epsilon(1e-6));
  // J at huge argument stays bounded by its envelope
  const double j = bessel_j(0.0, 3.0e8 + 0.12345);
  CHECK(std::abs(j) <= std::sqrt(2.0 / (kPi * 3.0e8)) * 1.0000001);
}

TEST_CASE("kernel_ky matches its components and rejects bad domain") {
  const double x = 1.0;
  const double v = kernel_ky(x);
  CHECK(v == doctest::Approx(2.0 / kPi * bessel_k(0.0, 4.0) - bessel_y(0.0, 4.0)));
  CHECK_THROWS_AS(kernel_ky(0.0), numeric_error);
}

TEST_CASE("hyp2f1 at anchor points") {
  CHECK(hyp2f1(0.3, 0.9, 1.7, 0.0) == 1.0);
  CHECK(hyp2f1(0.5, 0.5, 1.0, 0.5) == doctest::Approx(1.180340599016096).epsilon(1e-12));
  CHECK(hyp2f1(0.75, 0.75, 1.5, -1.0) == doctest::Approx(0.7607932037115127).epsilon(1e-12));
  CHECK_THROWS_AS(hyp2f1(0.5, 0.5, 1.0, 1.0), numeric_error);
}

TEST_CASE("hyp2f1 quadratic-transformation identity at z = 1/2") {
  // 2 sqrt(x) G(3/4)^2 F(3/4,3/4;3/2;-x) + G(1/4)^2 F(1/4,1/4;1/2;-x)
  //   = 2 pi^{3/2} (1+x)^{-1/4} F(1/2,1/2;1;1/2 + sqrt(x/(1+x))/2)
  const double x = 1.0;  // makes the 2F1 argument exactly 1/2 + sqrt(1/2)/2
  const double g34 = gamma(cplx(0.75)).real(), g14 = gamma(cplx(0.25)).real();
  const double lhs = 2.0 * std::sqrt(x) * g34 * g34 * hyp2f1(0.75, 0.75, 1.5, -x) +
                     g14 * g14 * hyp2f1(0.25, 0.25, 0.5, -x);
  const double arg = 0.5 + 0.5 * std::sqrt(x / (1.0 + x));
  const double rhs = 2.0 * std::pow(kPi, 1.5) * std::pow(1.0 + x, -0.25) *
                     hyp2f1(0.5, 0.5, 1.0, arg);
  CHECK(std::abs(lhs - rhs) < 1e-9 * std::abs(rhs));
}

TEST_CASE("hyp2f1_one_minus handles tiny 1-z stably") {
  const double omz = 1e-12;
  const double v = hyp2f1_one_minus(0.5, 0.5, 1.0, omz);
  // log singularity: F ~ -(1/pi)(log(omz/16))
  CHECK(v == doctest::Approx(-std::log(omz / 16.0) / kPi).epsilon(1e-9));
}

TEST_CASE("hyp1f1 basics and Bessel reductions") {
  CHECK(std::abs(hyp1f1(0.5, 2.0, cplx(0.0)) - 1.0) == 0.0);
  // 1F1(1/2;2;2x) e^{-x} = I0(x) - I1(x)
  const double x = 1.3;
  const cplx v = hyp1f1(0.5, 2.0, cplx(2.0 * x)) * std::exp(-x);
  CHECK(std::abs(v.real() - (bessel_i(0.0, x) - bessel_i(1.0, x))) < 1e-9);
  CHECK(std::abs(v.imag()) < 1e-12);
  // purely imaginary argument: 1F1(1/2;2;iz) - 1F1(1/2;2;-iz) =
  //   2i (J0(z/2) sin(z/2) - J1(z/2) cos(z/2))
  const double z = 5.0;
  const cplx diff = hyp1f1(0.5, 2.0, cplx(0.0, z)) - hyp1f1(0.5, 2.0, cplx(0.0, -z));
  const double rhs = 2.0 * (bessel_j(0.0, z / 2) * std::sin(z / 2) -
                            bessel_j(1.0, z / 2) * std::cos(z / 2));
  CHECK(std::abs(diff - cplx(0.0, rhs)) < 1e-9);
  // large |z| asymptotic branch joins the series branch
  const cplx a = hyp1f1(0.5, 2.0, cplx(0.0, 29.9));
  const cplx b = hyp1f1(0.5, 2.0, cplx(0.0, 30.1));
  CHECK(std::abs(a - b) < 2e-2 * std::abs(a) + 2e-2);  // continuity, coarse
  CHECK_THROWS_AS(hyp1f1(0.5, 2.0, cplx(300.0)), numeric_error);
}

TEST_CASE("mellin_barnes recovers the exponential Mellin pair") {
  MellinBarnesSpec spec;
  spec.numerator_gammas = {{cplx(0.0), 1.0}};  // Gamma(w)
  spec.power = 1.0;                            // t = 1
  spec.line = 0.5;
  spec.height = 40.0;
  spec.steps = 3000;
  const auto r = mellin_barnes(spec);
  CHECK(std::abs(r.value.real() - std::exp(-1.0)) < 1e-9);
  CHECK(std::abs(r.value.imag()) < 1e-12);
}

TEST_CASE("mellin_barnes flags insufficient decay") {
  MellinBarnesSpec spec;
  spec.numerator_gammas = {{cplx(0.0), 1.0}};
  spec.power = 1.0;
  spec.line = 0.5;
  spec.height = 3.0;  // integrand still large at the ends
  spec.steps = 200;
  CHECK_THROWS_AS(mellin_barnes(spec), numeric_error);
}

TEST_CASE("meijer_g24_kbessel at a = b = 0 reduces to 2K1K0 - K0^2") {
  const double z = 1.0;
  const double expect = (2.0 * bessel_k(1.0, 1.0) * bessel_k(0.0, 1.0) -
                         bessel_k(0.0, 1.0) * bessel_k(0.0, 1.0)) /
                        std::sqrt(kPi);
  CHECK(meijer_g24_kbessel(0.0, 0.0, z) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("meijer G^{4,0}_{2,4} contour oracle matches the K-Bessel closed form") {
  const double a = 0.3, b = 0.2;
  for (double z : {1.5, 4.0}) {
    MellinBarnesSpec spec;
    spec.numerator_gammas = {
        {cplx(0.0), 1.0}, {cplx(-a), 1.0}, {cplx(-b), 1.0}, {cplx(-a - b), 1.0}};
    spec.denominator_gammas = {{cplx(-(a + b + 1.0) / 2.0), 1.0},
                               {cplx(-(a + b) / 2.0), 1.0}};
    spec.power = z;
    spec.line = 1.5;
    spec.height = 60.0;
    spec.steps = 6000;
    const double contour = mellin_barnes(spec).value.real();
    CHECK(std::abs(contour - meijer_g24_kbessel(a, b, z)) < 1e-8);
  }
}

TEST_CASE("meijer G^{0,4}_{4,2} is exponentially small at small argument") {
  const double v = meijer_g04_contour(0.0, 0.0, 0.01);
  // e^{-2/sqrt(z)}-type decay: 2/sqrt(0.01) = 20, so the value sits near e^{-20}
  CHECK(std::abs(v) < 1e-7);
  CHECK(std::abs(v) > 1e-11);
}
