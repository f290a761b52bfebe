#pragma once

// Complex Riemann zeta machinery: Euler-Maclaurin zeta, Cauchy-circle
// derivatives, the chi factor of the functional equation, refined non-trivial
// zeros with cached zeta'(rho), bracketed zero sums, and the Stieltjes /
// local-derivative constants needed by the residue formulas.

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "zqlab/numeric.hpp"

namespace zqlab::zeta {

// Euler-Maclaurin evaluation; relative error ~1e-13 for |Im s| <= 500,
// -2 <= Re s <= 4.  Throws numeric_error("pole-at-one") for |s-1| < 1e-12.
cplx zeta(cplx s);

// zeta'(s) by a Cauchy circle integral with the pole at s=1 subtracted
// (spectrally accurate).  Throws numeric_error("pole-too-close") when
// |s-1| < 1e-3.
cplx zeta_prime(cplx s);

// d^k/ds^k zeta at s0, same method; order >= 1.
cplx zeta_derivative(cplx s0, int order);

// chi(s) = pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2), so zeta(s) = chi(s) zeta(1-s).
cplx chi_factor(cplx s);

struct ZetaZero {
  int index = 0;
  double gamma = 0.0;       // ordinate
  cplx rho;                 // 1/2 + i*gamma
  cplx zeta_prime;          // zeta'(rho), cached
  double residual = 0.0;    // |zeta(rho)| after refinement
};

struct ZeroTable {
  std::vector<ZetaZero> zeros;  // ascending gamma
  std::string source;
  int count() const { return static_cast<int>(zeros.size()); }
};

struct BracketPolicy {
  enum class Mode { singleton_checked, explicit_brackets };
  double c = 1.0;
  Mode mode = Mode::singleton_checked;
};

struct ZeroSeed {
  int index;
  double gamma;
};

// The 100 bundled seed ordinates (1e-6 accurate; always refined before use).
std::span<const ZeroSeed> bundled_zero_seeds();

// Parse "<index> <gamma>" lines; '#' comments allowed.
std::vector<ZeroSeed> parse_seed_file(const std::string& path);
void write_seed_file(const std::string& path, const ZeroTable& table);

// Newton refinement of t -> zeta(1/2 + i t) from a seed ordinate.  Errors:
// "no-convergence" after 50 iterations, "strayed-off-line" if the root leaves
// the critical line by more than 1e-8, and "converged-outside-window" if the
// limit is farther than 0.4 from the seed.
ZetaZero refine_zero(double seed);

// Refine the first `count` bundled seeds (or the ZQLAB_ZERO_SEEDS file when
// that environment variable is set).  Verifies ordering, the first-ordinate
// sanity window, and the singleton-bracket gap condition at c = 1.
ZeroTable zero_table(int count);

// True iff every consecutive pair in the table satisfies the c-gap condition
// |g1 - g2| >= exp(-c g1/log g1) + exp(-c g2/log g2).
bool singleton_gap_check(const ZeroTable& table, double c);

// Sum over conjugate-paired zeros: Sum_brackets 2*Re(term(rho)).  Brackets are
// singletons after the gap check in singleton_checked mode; in
// explicit_brackets mode, zeros closer than the gap bound are summed
// innermost-first.  Deterministic ascending order.
cplx bracketed_zero_sum(const std::function<cplx(const ZetaZero&)>& term,
                        const ZeroTable& table, const BracketPolicy& policy = {});

struct ResidueConstants {
  double euler_gamma;
  double stieltjes_1;      // gamma_1
  double stieltjes_2;      // gamma_2
  double zeta_prime_2;     // zeta'(2)
  double zeta_dprime_2;    // zeta''(2)
  double zeta_tprime_2;    // zeta'''(2)
  double glaisher_log12;   // 12 log A
  double zeta_prime_m1;    // zeta'(-1), from the functional equation
  double A0, A1, A2, A3;   // d^2 Voronoi main-term constants
};

// gamma by its defining limit (Euler-Maclaurin), gamma_1/gamma_2 by Laurent
// extraction at s=1, zeta derivatives at 2 by differentiated Dirichlet series
// with tail correction, 12 log A through zeta'(-1) via the functional
// equation, A0..A3 assembled from the closed forms.
const ResidueConstants& stieltjes_and_local_derivatives();

}  // namespace zqlab::zeta
