#pragma once

// Exact arithmetic-function tables (lambda, mu, d, d4, spf), the derived
// functions c(n), b(n), kappa_{a,b}, C_{a,b}, Dirichlet-series utilities, and
// smoothed evaluation of conditionally convergent sums.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "zqlab/numeric.hpp"

namespace zqlab::arith {

class ArithTable {
 public:
  // Sieves everything up to N.  Throws numeric_error("limit-too-large") for
  // N > 1e8 and numeric_error for N < 1.
  explicit ArithTable(std::int64_t N);

  std::int64_t limit() const { return limit_; }
  int lambda(std::int64_t n) const { return at(lambda_, n); }
  int moebius(std::int64_t n) const { return at(moebius_, n); }
  std::int64_t d(std::int64_t n) const { return at(d_, n); }
  std::int64_t d4(std::int64_t n) const { return at(d4_, n); }
  std::int64_t spf(std::int64_t n) const { return at(spf_, n); }

  // c(n) = m mu(k) for n = m^2 k, k squarefree; spf-based within the table,
  // trial division beyond it.
  std::int64_t c_value(std::int64_t n) const;
  std::int64_t b_value(std::int64_t n) const;

 private:
  template <typename T>
  T at(const std::vector<T>& v, std::int64_t n) const {
    if (n < 1 || n > limit_) throw numeric_error("ArithTable: index out of range");
    return v[static_cast<std::size_t>(n)];
  }
  std::int64_t limit_;
  std::vector<std::int8_t> lambda_, moebius_;
  std::vector<std::int32_t> d_, d4_, spf_;
};

std::shared_ptr<const ArithTable> shared_table(std::int64_t at_least);

// Trial-division versions, table-free.
std::int64_t c_value(std::int64_t n);
std::int64_t b_value(std::int64_t n);
std::int64_t moebius_value(std::int64_t n);
std::int64_t totient_value(std::int64_t n);

// Dirichlet inverse of Euler's totient by the standard recursion
// f^{-1}(1) = 1, f^{-1}(n) = -sum_{d|n, d<n} f(n/d) f^{-1}(d).
std::int64_t phi_inverse(std::int64_t n);

// sigma_s(n) = sum over divisors e of n of e^s.
double sigma_pow(std::int64_t n, double s);

// kappa_{a,b}(n) = m^{a+b} phi^{-1}(m) when n = m^2, else 0.
double kappa_value(std::int64_t n, double a, double b);

// C_{a,b}(n) = (sigma_a sigma_b * kappa_{a,b})(n).
double cab_value(std::int64_t n, double a, double b);

// h[n] = sum_{d|n} f(d) g(n/d), n = 1..N, via the O(N log N) multiples loop.
std::vector<double> dirichlet_convolve(const std::function<double(std::int64_t)>& f,
                                       const std::function<double(std::int64_t)>& g,
                                       std::int64_t N);

// |sum_{n<=N} coeff(n) n^{-s} - closed_form(s)|
double dirichlet_series_check(const std::function<double(std::int64_t)>& coeff,
                              const std::function<cplx(cplx)>& closed_form, cplx s,
                              std::int64_t N);

struct SmoothingScheme {
  enum class Kind { abel_exponential, cesaro };
  Kind kind = Kind::abel_exponential;
  int cesaro_order = 2;  // 1..3
  double scale = 1e6;    // X >= 1
  std::string label() const;
};

// For abel_exponential: sum coeff(n) e^{-n/X} n^{-weight_exponent}, summed to
// the n where e^{-n/X} < 1e-16.  For cesaro(k): the k-fold averaged partial
// sums at N of coeff(n) n^{-weight_exponent}.
double smoothed_sum(const std::function<double(std::int64_t)>& coeff,
                    double weight_exponent, const SmoothingScheme& scheme,
                    std::int64_t N);

// Abel-smoothed series over c(n) walking the unique decomposition n = m^2 k
// (k squarefree) so only a mu sieve is needed: sum c(n) w(n) e^{-n/X}.
class CSeries {
 public:
  explicit CSeries(double X);
  double abel_sum(const std::function<double(std::int64_t)>& weight) const;
  std::int64_t nmax() const { return nmax_; }
  double scale() const { return X_; }

 private:
  double X_;
  std::int64_t nmax_;
  std::shared_ptr<const std::vector<std::int8_t>> mu_;
};

// c(n) values 1..N as a dense array (for Cesaro cross-checks).
std::vector<std::int32_t> c_table(std::int64_t N);

}  // namespace zqlab::arith
