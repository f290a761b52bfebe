#include "zqlab/selfcheck.hpp"

#include <cmath>

#include "zqlab/arith.hpp"
#include "zqlab/identities.hpp"
#include "zqlab/quad.hpp"
#include "zqlab/specfun.hpp"
#include "zqlab/testfunction.hpp"
#include "zqlab/zeta.hpp"

namespace zqlab::selfcheck {

namespace {

void push(std::vector<CheckResult>& out, const std::string& name, double deviation,
          double bound, const std::string& detail = "") {
  out.push_back({name, deviation <= bound, deviation, bound, detail});
}

}  // namespace

std::vector<CheckResult> sieve_checks(bool fast) {
  std::vector<CheckResult> out;
  const std::int64_t N = fast ? 20000 : 100000;
  const auto tbl = arith::shared_table(N);

  // (mu * 1)(n) = [n == 1]
  {
    std::vector<std::int64_t> conv(static_cast<std::size_t>(N) + 1, 0);
    for (std::int64_t d = 1; d <= N; ++d) {
      const int mu = tbl->moebius(d);
      if (mu == 0) continue;
      for (std::int64_t m = d; m <= N; m += d) conv[m] += mu;
    }
    std::int64_t bad = 0;
    for (std::int64_t n = 1; n <= N; ++n)
      if (conv[n] != (n == 1 ? 1 : 0)) ++bad;
    push(out, "sieve: sum_{d|n} mu(d) = [n=1]", static_cast<double>(bad), 0.0);
  }
  // lambda(n) = (-1)^Omega(n) by direct factor counting
  {
    std::int64_t bad = 0;
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(N, 20000); ++n) {
      std::int64_t m = n;
      int omega = 0;
      for (std::int64_t p = 2; p * p <= m; ++p)
        while (m % p == 0) {
          m /= p;
          ++omega;
        }
      if (m > 1) ++omega;
      if (tbl->lambda(n) != (omega % 2 == 0 ? 1 : -1)) ++bad;
    }
    push(out, "sieve: lambda = (-1)^Omega", static_cast<double>(bad), 0.0);
  }
  // c(n) = sum_{d^2 | n} d mu(n/d^2); |c(n)| <= sqrt(n)
  {
    std::int64_t bad = 0;
    double worst = 0.0;
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(N, 20000); ++n) {
      std::int64_t s = 0;
      for (std::int64_t d = 1; d * d <= n; ++d)
        if (n % (d * d) == 0) s += d * tbl->moebius(n / (d * d));
      if (s != tbl->c_value(n)) ++bad;
      worst = std::max(worst, std::abs(static_cast<double>(s)) / std::sqrt(static_cast<double>(n)));
    }
    push(out, "sieve: c(n) = sum_{d^2|n} d mu(n/d^2)", static_cast<double>(bad), 0.0);
    push(out, "sieve: |c(n)| <= sqrt(n)", worst, 1.0);
  }
  // b = a * d4 with a(m^2) = m mu(m)
  {
    const std::int64_t M = fast ? 4000 : 10000;
    std::int64_t bad = 0;
    for (std::int64_t n = 1; n <= M; ++n) {
      std::int64_t s = 0;
      for (std::int64_t d = 1; d * d <= n; ++d)
        if (n % (d * d) == 0) s += d * tbl->moebius(d) * tbl->d4(n / (d * d));
      if (s != tbl->b_value(n)) ++bad;
    }
    push(out, "sieve: b = a * d4", static_cast<double>(bad), 0.0);
  }
  // C_{0,0}(n) = b(n)
  {
    double worst = 0.0;
    for (std::int64_t n = 1; n <= 200; ++n)
      worst = std::max(worst, std::abs(arith::cab_value(n, 0.0, 0.0) -
                                       static_cast<double>(tbl->b_value(n))));
    push(out, "sieve: C_{0,0} = b", worst, 1e-9);
  }
  return out;
}

std::vector<CheckResult> gamma_bessel_checks() {
  using namespace specfun;
  std::vector<CheckResult> out;

  // reflection and duplication on a complex grid
  {
    double worst_r = 0.0, worst_d = 0.0;
    for (double re : {-1.3, 0.3, 1.7, 3.2}) {
      for (double im : {0.0, 0.7, 4.0, 21.0}) {
        const cplx s(re, im);
        const cplx refl = gamma(s) * gamma(1.0 - s) * std::sin(kPi * s);
        worst_r = std::max(worst_r, std::abs(refl - kPi) / kPi);
        const cplx dup = gamma(s) * gamma(s + 0.5) -
                         std::pow(2.0, 1.0 - 2.0 * s) * std::sqrt(kPi) * gamma(2.0 * s);
        worst_d = std::max(worst_d, std::abs(dup) / std::abs(gamma(2.0 * s)));
      }
    }
    push(out, "gamma: reflection", worst_r, 1e-11);
    push(out, "gamma: duplication", worst_d, 1e-11);
  }
  // Bessel Wronskians, derivatives by recurrence
  {
    double worst_jy = 0.0, worst_ik = 0.0;
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
      for (double nu : {0.0, 0.25, 0.5, 1.0}) {
        const double jp = 0.5 * (bessel_j(nu - 1.0, x) - bessel_j(nu + 1.0, x));
        const double yp = 0.5 * (bessel_y(nu - 1.0, x) - bessel_y(nu + 1.0, x));
        const double w1 = bessel_j(nu, x) * yp - jp * bessel_y(nu, x);
        worst_jy = std::max(worst_jy, std::abs(w1 - 2.0 / (kPi * x)));
        const double ip = 0.5 * (bessel_i(nu - 1.0, x) + bessel_i(nu + 1.0, x));
        const double kp = -0.5 * (bessel_k(nu - 1.0, x) + bessel_k(nu + 1.0, x));
        const double w2 = bessel_i(nu, x) * kp - ip * bessel_k(nu, x);
        worst_ik = std::max(worst_ik, std::abs(w2 + 1.0 / x));
      }
    }
    push(out, "bessel: J/Y Wronskian", worst_jy, 1e-9);
    push(out, "bessel: I/K Wronskian", worst_ik, 1e-9);
  }
  // seam agreement between series/quadrature/asymptotic branches
  {
    double worst = 0.0;
    for (double nu : {0.0, 0.25, 1.0}) {
      const double xj = 16.0 + std::abs(nu);
      worst = std::max(worst, std::abs(bessel_j(nu, xj - 1e-9) - bessel_j(nu, xj + 1e-9)));
      worst = std::max(worst, std::abs(bessel_y(nu, xj - 1e-9) - bessel_y(nu, xj + 1e-9)));
      for (double xk : {2.0, 20.0}) {
        worst = std::max(worst, std::abs(bessel_k_scaled(nu, xk - 1e-9) -
                                         bessel_k_scaled(nu, xk + 1e-9)));
      }
      worst = std::max(worst,
                       std::abs(bessel_i_scaled(nu, 30.0 - 1e-9) - bessel_i_scaled(nu, 30.0 + 1e-9)));
    }
    push(out, "bessel: branch seams", worst, 1e-10);
  }
  // kernel_ky Mellin identity (Lemma 5.2 shape) at three abscissae
  {
    double worst = 0.0;
    for (double w : {0.04, 0.06, 0.10}) {
      auto f2 = [w](double v) {
        return 2.0 * std::pow(v, 2.0 * w - 1.0) *
               (2.0 / kPi * bessel_k(0.0, 4.0 * v) - bessel_y(0.0, 4.0 * v));
      };
      const double head = quad::integrate_adaptive(f2, 0.0, 2.0, 1e-13).real();
      const double tail = quad::integrate_oscillatory_tail(f2, 2.0, kPi / 4.0, 1e-11, 160).real();
      const double closed = std::exp(2.0 * log_gamma(cplx(w)).real() -
                                     2.0 * log_gamma(cplx(0.5 - w)).real());
      worst = std::max(worst, std::abs(head + tail - closed));
    }
    push(out, "kernel_ky: Mellin identity", worst, 1e-8);
  }
  return out;
}

std::vector<CheckResult> zeta_checks(bool fast) {
  std::vector<CheckResult> out;
  // functional equation on a 20-point grid
  {
    double worst = 0.0;
    for (double re : {-1.0, -0.25, 0.5, 1.25, 2.0}) {
      for (double im : {1.0, 14.5, 33.0, 60.0}) {
        const cplx s(re, im);
        const cplx lhs = zeta::zeta(s);
        const cplx rhs = zeta::chi_factor(s) * zeta::zeta(1.0 - s);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    push(out, "zeta: functional equation grid", worst, 1e-10);
  }
  // reflection zeta(conj s) = conj zeta(s)
  {
    double worst = 0.0;
    for (double re : {-0.5, 0.5, 1.5}) {
      for (double im : {3.0, 25.0}) {
        const cplx s(re, im);
        worst = std::max(worst, std::abs(zeta::zeta(std::conj(s)) - std::conj(zeta::zeta(s))));
      }
    }
    push(out, "zeta: conjugate reflection", worst, 0.0);
  }
  // known values
  {
    const double basel = std::abs(zeta::zeta(cplx(2.0)).real() - kPi * kPi / 6.0);
    const double neg = std::abs(zeta::zeta(cplx(-1.0)).real() + 1.0 / 12.0);
    push(out, "zeta: zeta(2) = pi^2/6", basel, 1e-12);
    push(out, "zeta: zeta(-1) = -1/12", neg, 1e-13);
  }
  // zero refinement
  {
    const int count = fast ? 25 : 100;
    const auto& table = identities::shared_zero_table(count);
    double worst = 0.0;
    for (int i = 0; i < count; ++i)
      worst = std::max(worst, table.zeros[i].residual);
    push(out, "zeros: refinement residuals", worst, 1e-10);
    push(out, "zeros: singleton gap (c=1)",
         zeta::singleton_gap_check(table, 1.0) ? 0.0 : 1.0, 0.0);
    push(out, "zeros: first ordinate window",
         std::abs(table.zeros[0].gamma - 14.134725), 1e-3);
  }
  // zeta'(rho) against the central finite-difference oracle
  {
    const auto& table = identities::shared_zero_table(5);
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      const cplx rho = table.zeros[i].rho;
      const double h = 1e-5;
      const cplx fd = (zeta::zeta(rho + h) - zeta::zeta(rho - h)) / (2.0 * h);
      worst = std::max(worst, std::abs(fd - table.zeros[i].zeta_prime) /
                                  std::abs(table.zeros[i].zeta_prime));
    }
    push(out, "zeta': circle vs finite difference", worst, 1e-8);
  }
  return out;
}

std::vector<CheckResult> mellin_pair_checks() {
  using identities::TestFunction;
  std::vector<CheckResult> out;
  const TestFunction fns[] = {TestFunction::make_exp(1.0), TestFunction::make_gauss(1.0),
                              TestFunction::make_k0(1.0),
                              TestFunction::make_riesz(10.5, 0.5)};
  for (const auto& tf : fns) {
    double worst = 0.0;
    for (double s : {0.75, 1.5}) worst = std::max(worst, tf.mellin_pair_residual(s));
    push(out, "mellin pair: " + tf.name(), worst, 1e-8);
  }
  return out;
}

std::vector<CheckResult> smoothed_sum_checks(bool fast) {
  std::vector<CheckResult> out;
  if (fast) return out;  // --fast skips the 1e6-scale smoothed sums
  const arith::CSeries cs(1e6);
  const double s1 = cs.abel_sum([](std::int64_t n) { return 1.0 / static_cast<double>(n); });
  push(out, "smoothed: sum c(n)/n = 1/2", std::abs(s1 - 0.5), 2e-3);
  const double s2 = cs.abel_sum(
      [](std::int64_t n) { return std::log(static_cast<double>(n)) / static_cast<double>(n); });
  push(out, "smoothed: sum c(n) log n/n = -gamma/2",
       std::abs(s2 + 0.5 * zeta::stieltjes_and_local_derivatives().euler_gamma), 5e-3);
  return out;
}

std::vector<CheckResult> run_all(bool fast) {
  std::vector<CheckResult> out;
  for (auto&& grp : {sieve_checks(fast), gamma_bessel_checks(), zeta_checks(fast),
                     mellin_pair_checks(), smoothed_sum_checks(fast)})
    out.insert(out.end(), grp.begin(), grp.end());
  return out;
}

}  // namespace zqlab::selfcheck
