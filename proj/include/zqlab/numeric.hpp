#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace zqlab {

using cplx = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Thrown by every operation whose numeric preconditions are violated or whose
// internal convergence checks fail.  The message names the failing contract.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Fixed-order pairwise reduction.  Deterministic for a given input order and
// better conditioned than naive left-to-right accumulation.
template <typename T>
T pairwise_sum(std::span<const T> v) {
  const std::size_t n = v.size();
  if (n == 0) return T{};
  if (n <= 8) {
    T s = v[0];
    for (std::size_t i = 1; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(std::span<const T>(v));
}

// Compensated accumulator for long streaming sums (Neumaier variant).
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// sin/cos of a large argument with the range reduction done in long double.
// Keeps the phase error near t*2^-63 instead of t*2^-52.
inline void sincos_reduced(double t, double& s, double& c) {
  constexpr long double two_pi = 6.283185307179586476925286766559006L;
  const long double r = std::fmod(static_cast<long double>(t), two_pi);
  s = static_cast<double>(std::sin(r));
  c = static_cast<double>(std::cos(r));
}

inline bool is_close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace zqlab
