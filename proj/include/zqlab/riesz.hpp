#pragma once

// Oscillation diagnostics for weighted Riesz sums of mu, lambda and d^2:
// finite-range traces against zero-sum predictions, sign-change counts,
// truncated zero-sum magnitudes, and a Kronecker simultaneous-approximation
// search.

#include <optional>
#include <string>
#include <vector>

#include "zqlab/arith.hpp"
#include "zqlab/zeta.hpp"

namespace zqlab::riesz {

enum class Kind { mu, lambda, d2 };

Kind kind_from_string(const std::string& s);
std::string to_string(Kind k);

struct TracePoint {
  double y;
  double normalized_sum;
  double predicted;
};

struct RieszTrace {
  Kind kind;
  double delta;
  std::vector<TracePoint> points;
};

// Exact finite sum from the sieve: sum_{n<=y} a(n) (1-n/y)^delta, with the
// d2 kind using exponent 1+delta.  Throws numeric_error("sieve-limit") when
// y exceeds the table.
double weighted_sum(Kind kind, double y, double delta, const arith::ArithTable& table);

// Bracketed zero sum of the kernels behind the oscillation theorems,
// normalized like the trace (mu/lambda: per sqrt(y); d2: per y^{1/4}).
double zero_main_term(Kind kind, double y, double delta, const zeta::ZeroTable& table);

// Truncation bound for the omitted zero-sum tail beyond the table (the
// kernels decay only polynomially, so the report carries this explicitly).
double zero_main_term_tail_bound(Kind kind, double delta, const zeta::ZeroTable& table);

// The d2 Riesz main term g(y) = sum_j B_{delta,j}(y), with
// B_{delta,j}(y) = A_j Int_0^y (1-x/y)^{1+delta} log^j(x) dx in closed form.
double d2_main_term(double y, double delta);
double d2_beta_term(double y, double delta, int j);  // B_{delta,j}(y)

RieszTrace trace(Kind kind, const std::vector<double>& y_grid, double delta,
                 const arith::ArithTable& atab, const zeta::ZeroTable& ztab);

int sign_changes(const RieszTrace& tr);

struct Lemma4Partial {
  double A;  // sum 1/(|zeta'(rho)| |rho|^{1+delta})
  double B;  // with |zeta(2 rho)|
  double C;  // with |zeta(rho/2)|^4 / |rho|^{2+delta}
};

Lemma4Partial lemma4_partial(double delta, const zeta::ZeroTable& table);

// Search for t in [t_min, t_max] with
// || alpha_n t/(2 pi) - beta_n/(2 pi) || < eps/(2 pi) for all n (distance to
// the nearest integer).  Returns nullopt when no t is found below t_max.
std::optional<double> kronecker_search(const std::vector<double>& alphas,
                                       const std::vector<double>& betas, double eps,
                                       double t_max, double t_min = 0.0);

// CSV: header y,normalized_sum,predicted; 15 significant digits per field.
void write_trace_csv(const RieszTrace& tr, const std::string& path);

std::vector<double> log_spaced_grid(double ymin, double ymax, int points);

}  // namespace zqlab::riesz
