#pragma once

// Special-function kernels: complex Gamma, Bessel J/Y/I/K of real order,
// the (2/pi)K0 - Y0 kernel, Gauss/confluent hypergeometric functions, and
// the two Meijer-G shapes needed by the identity verifiers.

#include <complex>
#include <vector>

#include "zqlab/numeric.hpp"

namespace zqlab::specfun {

// log Gamma(z), principal value up to multiples of 2*pi*i (always safe to
// exponentiate or to take real parts of).
cplx log_gamma(cplx z);

// Gamma(z); throws numeric_error at non-positive integers.
cplx gamma(cplx z);

cplx digamma(cplx z);
double digamma(double x);
double trigamma(double x);
double tetragamma(double x);  // psi''(x)

// Bessel functions of real order nu (|nu| <= 4 supported) and x > 0.
double bessel_j(double nu, double x);
double bessel_y(double nu, double x);
double bessel_i(double nu, double x);
double bessel_k(double nu, double x);

// exp(-x) I_nu(x) and exp(x) K_nu(x); stable for arbitrarily large x.
double bessel_i_scaled(double nu, double x);
double bessel_k_scaled(double nu, double x);

// (2/pi) K0(4 sqrt(x)) - Y0(4 sqrt(x))
double kernel_ky(double x);

// Gauss 2F1(a,b;c;z) for z < 1 (power series + Pfaff + 1-z continuation,
// including the logarithmic case c = a+b).  Throws on z >= 1 and on
// parameter regions outside what the verifiers reach.
double hyp2f1(double a, double b, double c, double z);
// Same value parameterized by 1-z, for callers that can form 1-z stably.
double hyp2f1_one_minus(double a, double b, double c, double one_minus_z);

// Confluent 1F1(a;b;z) for complex z, |z| <= 200.
cplx hyp1f1(double a, double b, cplx z);

// Closed K-Bessel form of G^{4,0}_{2,4}((-a-b)/2,(-a-b-1)/2; 0,-a,-b,-a-b | z).
double meijer_g24_kbessel(double a, double b, double z);

// A Gamma-factor Gamma(alpha + beta*w) on the Mellin-Barnes line.
struct GammaFactor {
  cplx alpha;
  double beta = 1.0;
};

struct MellinBarnesSpec {
  std::vector<GammaFactor> numerator_gammas;
  std::vector<GammaFactor> denominator_gammas;
  cplx power;          // integrand carries power^{-w}
  double line = 0.5;   // Re(w) = line
  double height = 60;  // truncate at |Im w| <= height
  int steps = 4000;    // trapezoid node count
};

struct MellinBarnesResult {
  cplx value;
  double error_estimate;
};

// (1/2*pi*i) Int_{line-iT}^{line+iT} prod Gamma(num)/prod Gamma(den) z^{-w} dw.
// Throws numeric_error("insufficient-decay") when the integrand has not
// fallen to 1e-14 of its peak by the truncation height.
MellinBarnesResult mellin_barnes(const MellinBarnesSpec& spec);

// G^{0,4}_{4,2} of Theorems 2-type RG identities, evaluated by contour:
// parameters (1/2,(1-a)/2,(1-b)/2,(1-a-b)/2 ; (1-a-b)/4,(3-a-b)/4) at z.
double meijer_g04_contour(double a, double b, double z);

}  // namespace zqlab::specfun
