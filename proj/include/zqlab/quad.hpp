#pragma once

// Quadrature engines: adaptive Gauss-Kronrod on finite intervals, semi-infinite
// integration with exponential substitution, oscillatory tails by zero-segmented
// acceleration, vertical-line contour integration, and Laurent-coefficient
// extraction by circle integrals.

#include <complex>
#include <functional>
#include <vector>

#include "zqlab/numeric.hpp"

namespace zqlab::quad {

struct QuadratureResult {
  cplx value;
  double error_estimate = 0.0;
  long evaluations = 0;
  double real() const { return value.real(); }
};

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<cplx(cplx)>;

// Adaptive Gauss-Kronrod (G7/K15) bisection.  Endpoint algebraic
// singularities x^alpha, alpha > -1, are fine: the rule never evaluates the
// endpoints.  Throws numeric_error("max-subdivisions") when the budget is
// exhausted before reaching tol.
QuadratureResult integrate_adaptive(const RealFn& f, double a, double b, double tol,
                                    int max_subdivisions = 4000);

// Integral over [a, inf) through the substitution x = a + e^u - 1.  The
// integrand must decay at least like x^{-1-eps}; throws
// numeric_error("nonconvergent-tail") otherwise.
QuadratureResult integrate_semi_infinite(const RealFn& f, double a, double tol);

// Oscillatory tail: integrates [a, inf) where f alternates sign on a grid of
// consecutive zeros a + k*spacing; the alternating sequence of segment
// integrals is accelerated by repeated averaging.
QuadratureResult integrate_oscillatory_tail(const RealFn& f, double a, double spacing,
                                            double tol, int max_segments = 120);

// (1/(2*pi*i)) Int_{c-iT}^{c+iT} f(s) ds by composite trapezoid with `steps`
// intervals.  Throws numeric_error("insufficient-decay") when |f| at the ends
// exceeds 1e-12 of its peak on the line.
QuadratureResult integrate_vertical_line(const ComplexFn& f, double c, double T, int steps);

// Laurent coefficients e_k, lowest <= k <= highest, of f about s0 from an
// M-point trapezoid rule on the circle |s - s0| = radius.
std::vector<cplx> laurent_coefficients(const ComplexFn& f, cplx s0, double radius,
                                       int lowest, int highest, int points = 512);

}  // namespace zqlab::quad
