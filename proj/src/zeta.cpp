#include "zqlab/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>

#include "zqlab/quad.hpp"
#include "zqlab/specfun.hpp"

namespace zqlab::zeta {

namespace {

// B_{2k}/(2k)! for k = 1..8
constexpr double kB2kFact[8] = {
    1.0 / 12.0,                      // B2/2!
    -1.0 / 720.0,                    // B4/4!
    1.0 / 30240.0,                   // B6/6!
    -1.0 / 1209600.0,                // B8/8!
    1.0 / 47900160.0,                // B10/10!
    -691.0 / 1307674368000.0,        // B12/12!
    1.0 / 74724249600.0,             // B14/14!
    -3617.0 / 10670622842880000.0,   // B16/16!
};

}  // namespace

cplx zeta(cplx s) {
  if (std::abs(s - cplx(1.0, 0.0)) < 1e-12) throw numeric_error("zeta: pole-at-one");
  const double t = std::abs(s.imag());
  const int N = std::max(24, static_cast<int>(std::ceil(1.4 * t)));
  KahanSum re, im;
  for (int n = 1; n < N; ++n) {
    const cplx v = std::exp(-s * std::log(static_cast<double>(n)));
    re.add(v.real());
    im.add(v.imag());
  }
  cplx sum(re.value(), im.value());
  const cplx Nms = std::exp(-s * std::log(static_cast<double>(N)));
  sum += 0.5 * Nms;
  sum += Nms * static_cast<double>(N) / (s - 1.0);
  // Bernoulli corrections: sum_k B_{2k}/(2k)! * (s)_{2k-1} * N^{-s-2k+1}
  cplx poch = s;                       // (s)_1
  cplx npow = Nms / static_cast<double>(N);  // N^{-s-1}
  const double invN2 = 1.0 / (static_cast<double>(N) * N);
  for (int k = 0; k < 8; ++k) {
    if (k > 0) {
      poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
      npow *= invN2;
    }
    sum += kB2kFact[k] * poch * npow;
  }
  return sum;
}

cplx zeta_derivative(cplx s0, int order) {
  if (order < 1) throw numeric_error("zeta_derivative: order >= 1");
  if (std::abs(s0 - cplx(1.0, 0.0)) < 1e-3) throw numeric_error("zeta: pole-too-close");
  // zeta(s) = 1/(s-1) + H(s) with H entire; differentiate H on a small circle.
  const double r = 1e-3;
  const int M = 32;
  KahanSum re, im;
  for (int j = 0; j < M; ++j) {
    const double th = 2.0 * kPi * j / M;
    const cplx e = std::exp(cplx(0.0, th));
    const cplx s = s0 + r * e;
    const cplx h = zeta(s) - 1.0 / (s - 1.0);
    const cplx v = h * std::exp(cplx(0.0, -order * th));
    re.add(v.real());
    im.add(v.imag());
  }
  double fact = 1.0;
  for (int j = 2; j <= order; ++j) fact *= j;
  const cplx hder = cplx(re.value(), im.value()) * fact /
                    (static_cast<double>(M) * std::pow(r, order));
  // d^k/ds^k 1/(s-1) = (-1)^k k! (s-1)^{-k-1}
  const double sgn = (order % 2 == 0) ? 1.0 : -1.0;
  return hder + sgn * fact * std::pow(s0 - 1.0, -(order + 1.0));
}

cplx zeta_prime(cplx s) { return zeta_derivative(s, 1); }

cplx chi_factor(cplx s) {
  // chi(s) = pi^{s-1/2} Gamma((1-s)/2)/Gamma(s/2); compute in log space
  const cplx lg = (s - 0.5) * std::log(kPi) +
                  specfun::log_gamma((1.0 - s) / 2.0) - specfun::log_gamma(s / 2.0);
  return std::exp(lg);
}

ZetaZero refine_zero(double seed) {
  cplx t(seed, 0.0);
  for (int it = 0; it < 50; ++it) {
    const cplx s = cplx(0.5, 0.0) + cplx(0.0, 1.0) * t;
    const cplx z = zeta(s);
    if (std::abs(z) <= 1e-10) {
      if (std::abs(t.imag()) > 1e-8) throw numeric_error("refine_zero: strayed-off-line");
      if (std::abs(t.real() - seed) > 0.4)
        throw numeric_error("refine_zero: converged-outside-window");
      const cplx rho(0.5 - t.imag(), t.real());
      ZetaZero out;
      out.gamma = t.real();
      out.rho = rho;
      out.zeta_prime = zeta_prime(rho);
      out.residual = std::abs(z);
      return out;
    }
    const cplx zp = zeta_prime(s);
    t -= z / (cplx(0.0, 1.0) * zp);
    if (std::abs(t.real() - seed) > 2.0) throw numeric_error("refine_zero: no-convergence");
  }
  throw numeric_error("refine_zero: no-convergence");
}

namespace {

std::vector<ZeroSeed> active_seeds() {
  if (const char* env = std::getenv("ZQLAB_ZERO_SEEDS")) {
    return parse_seed_file(env);
  }
  auto s = bundled_zero_seeds();
  return {s.begin(), s.end()};
}

}  // namespace

std::vector<ZeroSeed> parse_seed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw numeric_error("zero seed file not readable: " + path);
  std::vector<ZeroSeed> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    int idx;
    double g;
    if (std::sscanf(line.c_str(), "%d %lf", &idx, &g) == 2) out.push_back({idx, g});
  }
  if (out.empty()) throw numeric_error("zero seed file has no records: " + path);
  return out;
}

void write_seed_file(const std::string& path, const ZeroTable& table) {
  std::ofstream out(path);
  if (!out) throw numeric_error("cannot write seed file: " + path);
  double worst = 0.0;
  for (const auto& z : table.zeros) worst = std::max(worst, z.residual);
  char buf[128];
  std::snprintf(buf, sizeof buf, "# refined ordinates; max |zeta(rho)| = %.3e\n", worst);
  out << buf;
  for (const auto& z : table.zeros) {
    std::snprintf(buf, sizeof buf, "%d %.12f\n", z.index, z.gamma);
    out << buf;
  }
}

ZeroTable zero_table(int count) {
  const auto seeds = active_seeds();
  if (count < 1 || count > static_cast<int>(seeds.size()))
    throw numeric_error("zero_table: count exceeds bundled seeds");
  ZeroTable table;
  table.source = "bundled seeds refined to |zeta(rho)| <= 1e-10";
  table.zeros.reserve(count);
  for (int i = 0; i < count; ++i) {
    ZetaZero z = refine_zero(seeds[i].gamma);
    z.index = seeds[i].index;
    table.zeros.push_back(z);
  }
  for (int i = 1; i < count; ++i)
    if (!(table.zeros[i].gamma > table.zeros[i - 1].gamma))
      throw numeric_error("zero_table: ordinates not strictly increasing");
  if (table.zeros[0].gamma < 14.0 || table.zeros[0].gamma > 14.3)
    throw numeric_error("zero_table: first ordinate outside sanity window");
  if (!singleton_gap_check(table, 1.0))
    throw numeric_error("zero_table: singleton gap condition failed");
  return table;
}

bool singleton_gap_check(const ZeroTable& table, double c) {
  for (std::size_t i = 0; i + 1 < table.zeros.size(); ++i) {
    const double g1 = table.zeros[i].gamma;
    const double g2 = table.zeros[i + 1].gamma;
    const double bound = std::exp(-c * g1 / std::log(g1)) + std::exp(-c * g2 / std::log(g2));
    if (std::abs(g2 - g1) < bound) return false;
  }
  return true;
}

cplx bracketed_zero_sum(const std::function<cplx(const ZetaZero&)>& term,
                        const ZeroTable& table, const BracketPolicy& policy) {
  const auto& zs = table.zeros;
  auto gap_ok = [&](std::size_t i) {
    const double g1 = zs[i].gamma, g2 = zs[i + 1].gamma;
    return std::abs(g2 - g1) >=
           std::exp(-policy.c * g1 / std::log(g1)) + std::exp(-policy.c * g2 / std::log(g2));
  };
  std::vector<double> contributions;
  contributions.reserve(zs.size());
  if (policy.mode == BracketPolicy::Mode::singleton_checked) {
    for (std::size_t i = 0; i + 1 < zs.size(); ++i)
      if (!gap_ok(i)) throw numeric_error("bracketed_zero_sum: bracket not a singleton");
    for (const auto& z : zs) contributions.push_back(2.0 * term(z).real());
  } else {
    std::size_t i = 0;
    while (i < zs.size()) {
      std::size_t j = i;
      while (j + 1 < zs.size() && !gap_ok(j)) ++j;
      KahanSum bracket;  // innermost-first within the bracket
      for (std::size_t k = i; k <= j; ++k) bracket.add(2.0 * term(zs[k]).real());
      contributions.push_back(bracket.value());
      i = j + 1;
    }
  }
  return cplx(pairwise_sum<double>(contributions), 0.0);
}

namespace {

double euler_gamma_by_limit() {
  const int N = 200000;
  KahanSum h;
  for (int k = 1; k <= N; ++k) h.add(1.0 / k);
  const double n = N;
  return h.value() - std::log(n) - 0.5 / n + 1.0 / (12.0 * n * n) -
         1.0 / (120.0 * n * n * n * n);
}

// zeta^{(j)}(2) via the differentiated Dirichlet series with Euler-Maclaurin
// tail correction: sum_{n>=N} ln^j(n)/n^2 = I_j(N) + f(N)/2 - f'(N)/12.
double zeta_deriv_at_2(int j) {
  const int N = 200000;
  KahanSum s;
  for (int n = 2; n < N; ++n) {
    const double ln = std::log(static_cast<double>(n));
    s.add(std::pow(ln, j) / (static_cast<double>(n) * n));
  }
  const double x = N;
  const double lx = std::log(x);
  // I_j = ln^j(N)/N + j I_{j-1}, I_0 = 1/N
  double I = 1.0 / x;
  for (int i = 1; i <= j; ++i) I = std::pow(lx, i) / x + i * I;
  const double f = std::pow(lx, j) / (x * x);
  const double fp = (j * std::pow(lx, j - 1) - 2.0 * std::pow(lx, j)) / (x * x * x);
  const double tail = I + 0.5 * f - fp / 12.0;
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  return sign * (s.value() + tail);
}

ResidueConstants compute_constants() {
  ResidueConstants rc{};
  rc.euler_gamma = euler_gamma_by_limit();
  // Stieltjes constants from zeta's Laurent expansion at 1:
  // zeta(s) = 1/(s-1) + sum_k (-1)^k gamma_k (s-1)^k / k!
  const auto coef = quad::laurent_coefficients([](cplx s) { return zeta(s); },
                                               cplx(1.0, 0.0), 0.1, -1, 2);
  rc.stieltjes_1 = -coef[2].real();
  rc.stieltjes_2 = 2.0 * coef[3].real();
  rc.zeta_prime_2 = zeta_deriv_at_2(1);
  rc.zeta_dprime_2 = zeta_deriv_at_2(2);
  rc.zeta_tprime_2 = zeta_deriv_at_2(3);
  // zeta'(-1) = chi'(-1) zeta(2) - chi(-1) zeta'(2),
  // chi'(-1) = chi(-1) (ln pi - psi(1)/2 - psi(-1/2)/2), chi(-1) = -1/(2 pi^2)
  const double chi_m1 = -1.0 / (2.0 * kPi * kPi);
  const double dlogchi =
      std::log(kPi) - 0.5 * specfun::digamma(1.0) - 0.5 * specfun::digamma(-0.5);
  const double zeta2 = kPi * kPi / 6.0;
  rc.zeta_prime_m1 = chi_m1 * (dlogchi * zeta2 - rc.zeta_prime_2);
  rc.glaisher_log12 = 1.0 - 12.0 * rc.zeta_prime_m1;  // 12 log A = 1 - 12 zeta'(-1)
  const double g = rc.euler_gamma, g1 = rc.stieltjes_1, g2 = rc.stieltjes_2;
  const double zp = rc.zeta_prime_2, zpp = rc.zeta_dprime_2, zppp = rc.zeta_tprime_2;
  const double p2 = kPi * kPi, p4 = p2 * p2, p6 = p4 * p2, p8 = p4 * p4;
  rc.A0 = (24 * g * g * g * p6 - 72 * g * p6 * g1 + 12 * p6 * g2 - 432 * g * g * p4 * zp +
           288 * p4 * g1 * zp + 3456 * g * p2 * zp * zp - 10368 * zp * zp * zp -
           288 * g * p4 * zpp + 1728 * p2 * zp * zpp - 48 * p4 * zppp) / p8;
  rc.A1 = (36 * g * g * p6 - 24 * p6 * g1 - 288 * g * p4 * zp + 864 * p2 * zp * zp -
           72 * p4 * zpp) / p8;
  rc.A2 = (12 * g * p6 - 36 * p4 * zp) / p8;
  rc.A3 = 1.0 / p2;
  return rc;
}

}  // namespace

const ResidueConstants& stieltjes_and_local_derivatives() {
  static const ResidueConstants rc = compute_constants();
  return rc;
}

}  // namespace zqlab::zeta
