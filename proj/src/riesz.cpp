#include "zqlab/riesz.hpp"

#include <cmath>
#include <fstream>

#include "zqlab/specfun.hpp"

namespace zqlab::riesz {

using specfun::log_gamma;

Kind kind_from_string(const std::string& s) {
  if (s == "mu") return Kind::mu;
  if (s == "lambda") return Kind::lambda;
  if (s == "d2") return Kind::d2;
  throw numeric_error("unknown riesz kind: " + s);
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::mu: return "mu";
    case Kind::lambda: return "lambda";
    case Kind::d2: return "d2";
  }
  return "?";
}

double weighted_sum(Kind kind, double y, double delta, const arith::ArithTable& table) {
  if (!(y >= 1.0)) throw numeric_error("weighted_sum: y >= 1 required");
  if (!(delta > 0.0)) throw numeric_error("weighted_sum: delta > 0 required");
  if (y > static_cast<double>(table.limit())) throw numeric_error("weighted_sum: sieve-limit");
  const double expo = (kind == Kind::d2) ? 1.0 + delta : delta;
  const auto ny = static_cast<std::int64_t>(std::floor(y));
  KahanSum s;
  for (std::int64_t n = 1; n <= ny; ++n) {
    const double w = std::pow(1.0 - static_cast<double>(n) / y, expo);
    switch (kind) {
      case Kind::mu: s.add(table.moebius(n) * w); break;
      case Kind::lambda: s.add(table.lambda(n) * w); break;
      case Kind::d2: {
        const double dn = static_cast<double>(table.d(n));
        s.add(dn * dn * w);
        break;
      }
    }
  }
  return s.value();
}

double zero_main_term(Kind kind, double y, double delta, const zeta::ZeroTable& table) {
  if (table.zeros.empty()) return 0.0;
  const double ly = std::log(y);
  auto term = [&](const zeta::ZetaZero& z) -> cplx {
    const cplx rho = z.rho;
    if (kind == Kind::d2) {
      // zeta^4(rho/2) Gamma(2+delta) Gamma(rho/2) / (2 zeta'(rho) Gamma(2+delta+rho/2)) y^{i gamma/2}
      const cplx phase = std::exp(cplx(0.0, 0.5 * z.gamma * ly));
      return std::pow(zeta::zeta(rho / 2.0), 4) *
             std::exp(log_gamma(cplx(2.0 + delta)) + log_gamma(rho / 2.0) -
                      log_gamma(2.0 + delta + rho / 2.0)) *
             phase / (2.0 * z.zeta_prime);
    }
    const cplx phase = std::exp(cplx(0.0, z.gamma * ly));
    cplx t = std::exp(log_gamma(cplx(1.0 + delta)) + log_gamma(rho) -
                      log_gamma(1.0 + delta + rho)) *
             phase / z.zeta_prime;
    if (kind == Kind::lambda) t *= zeta::zeta(2.0 * rho);
    return t;
  };
  return zeta::bracketed_zero_sum(term, table).real();
}

double zero_main_term_tail_bound(Kind kind, double delta, const zeta::ZeroTable& table) {
  // kernels decay like |rho|^{-(1+delta)} (mu/lambda) or |rho|^{-(2+delta)}
  // with a zeta^4 numerator growing ~ |rho| (d2); bound the tail by the last
  // included magnitude times the integrated zero density to twice the height.
  if (table.zeros.empty()) return 0.0;
  const auto& last = table.zeros.back();
  const double g = last.gamma;
  const double dens = std::log(g / (2.0 * kPi)) / (2.0 * kPi);  // zeros per unit height
  double last_mag;
  if (kind == Kind::d2) {
    last_mag = std::pow(std::abs(zeta::zeta(last.rho / 2.0)), 4) *
               std::exp(log_gamma(cplx(2.0 + delta)).real() +
                        log_gamma(last.rho / 2.0).real() -
                        log_gamma(2.0 + delta + last.rho / 2.0).real()) /
               (0.5 * std::abs(last.zeta_prime));
  } else {
    last_mag = std::exp(log_gamma(cplx(1.0 + delta)).real() + log_gamma(last.rho).real() -
                        log_gamma(1.0 + delta + last.rho).real()) /
               std::abs(last.zeta_prime) * 2.0;
    if (kind == Kind::lambda) last_mag *= std::abs(zeta::zeta(2.0 * last.rho));
  }
  const double p = (kind == Kind::d2) ? 1.0 + delta : delta;  // net polynomial decay rate
  return last_mag * dens * g / std::max(p, 0.05);
}

namespace {

// moments m_i = Int_0^1 (1-t)^{1+delta} t^{s-1} log^i t dt at s = 1, i = 0..3,
// i.e. derivatives of the Beta function B(s, 2+delta) at s = 1.
void beta_log_moments(double delta, double m[4]) {
  const double c = 2.0 + delta;
  const double m0 = 1.0 / c;  // B(1, c)
  const double D = specfun::digamma(1.0) - specfun::digamma(1.0 + c);
  const double T = specfun::trigamma(1.0) - specfun::trigamma(1.0 + c);
  const double Q = specfun::tetragamma(1.0) - specfun::tetragamma(1.0 + c);
  m[0] = m0;
  m[1] = m0 * D;
  m[2] = m0 * (D * D + T);
  m[3] = m0 * (D * D * D + 3.0 * D * T + Q);
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

double d2_beta_term(double y, double delta, int j) {
  if (j < 0 || j > 3) throw numeric_error("d2_beta_term: j in 0..3");
  const auto& rc = zeta::stieltjes_and_local_derivatives();
  const double A[4] = {rc.A0, rc.A1, rc.A2, rc.A3};
  double m[4];
  beta_log_moments(delta, m);
  // Int_0^y (1-x/y)^{1+delta} log^j x dx = y sum_i C(j,i) log^{j-i}(y) m_i
  const double ly = std::log(y);
  double s = 0.0;
  for (int i = 0; i <= j; ++i) s += binom(j, i) * std::pow(ly, j - i) * m[i];
  return A[j] * y * s;
}

double d2_main_term(double y, double delta) {
  double g = 0.0;
  for (int j = 0; j < 4; ++j) g += d2_beta_term(y, delta, j);
  return g;
}

RieszTrace trace(Kind kind, const std::vector<double>& y_grid, double delta,
                 const arith::ArithTable& atab, const zeta::ZeroTable& ztab) {
  RieszTrace tr;
  tr.kind = kind;
  tr.delta = delta;
  tr.points.reserve(y_grid.size());
  double prev = 0.0;
  for (double y : y_grid) {
    if (y <= prev) throw numeric_error("trace: y grid must be strictly increasing");
    prev = y;
    const double S = weighted_sum(kind, y, delta, atab);
    double normalized;
    if (kind == Kind::d2) {
      normalized = (S - d2_main_term(y, delta)) / std::pow(y, 0.25);
    } else {
      normalized = S / std::sqrt(y);
    }
    tr.points.push_back({y, normalized, zero_main_term(kind, y, delta, ztab)});
  }
  return tr;
}

int sign_changes(const RieszTrace& tr) {
  int count = 0;
  int last = 0;
  for (const auto& p : tr.points) {
    const int s = (p.normalized_sum > 0) - (p.normalized_sum < 0);
    if (s != 0) {
      if (last != 0 && s != last) ++count;
      last = s;
    }
  }
  return count;
}

Lemma4Partial lemma4_partial(double delta, const zeta::ZeroTable& table) {
  if (!(delta > 0)) throw numeric_error("lemma4_partial: delta > 0 required");
  KahanSum A, B, C;
  for (const auto& z : table.zeros) {
    const double arho = std::abs(z.rho);
    const double azp = std::abs(z.zeta_prime);
    // conjugate pairs contribute equally
    A.add(2.0 / (azp * std::pow(arho, 1.0 + delta)));
    B.add(2.0 * std::abs(zeta::zeta(2.0 * z.rho)) / (azp * std::pow(arho, 1.0 + delta)));
    C.add(2.0 * std::pow(std::abs(zeta::zeta(z.rho / 2.0)), 4) /
          (azp * std::pow(arho, 2.0 + delta)));
  }
  return {A.value(), B.value(), C.value()};
}

std::optional<double> kronecker_search(const std::vector<double>& alphas,
                                       const std::vector<double>& betas, double eps,
                                       double t_max, double t_min) {
  if (alphas.empty() || alphas.size() != betas.size())
    throw numeric_error("kronecker_search: alphas/betas size mismatch");
  if (!(eps > 0)) throw numeric_error("kronecker_search: eps > 0 required");
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j)
      if (alphas[i] == alphas[j]) throw numeric_error("kronecker_search: alphas not distinct");
  double amax = 0.0;
  for (double a : alphas) amax = std::max(amax, std::abs(a));
  const double target = eps / (2.0 * kPi);
  auto dist = [&](double t, std::size_t i) {
    const double v = (alphas[i] * t - betas[i]) / (2.0 * kPi);
    return std::abs(v - std::nearbyint(v));
  };
  auto ok = [&](double t, double slack) {
    for (std::size_t i = 0; i < alphas.size(); ++i)
      if (dist(t, i) >= target * slack) return false;
    return true;
  };
  const double step = (amax > 0) ? eps / (2.0 * amax) : t_max;
  for (double t = t_min; t <= t_max; t += step) {
    if (!ok(t, 2.0)) continue;
    // refine locally
    for (double u = t - step; u <= t + step; u += step / 64.0)
      if (u >= t_min && ok(u, 1.0)) return u;
  }
  return std::nullopt;
}

void write_trace_csv(const RieszTrace& tr, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw numeric_error("cannot write trace csv: " + path);
  out << "y,normalized_sum,predicted\n";
  char buf[160];
  for (const auto& p : tr.points) {
    std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g\n", p.y, p.normalized_sum,
                  p.predicted);
    out << buf;
  }
}

std::vector<double> log_spaced_grid(double ymin, double ymax, int points) {
  if (points < 1 || !(ymin > 0) || !(ymin < ymax))
    throw numeric_error("log_spaced_grid: bad arguments");
  std::vector<double> g(points);
  if (points == 1) {
    g[0] = ymin;
    return g;
  }
  const double l0 = std::log(ymin), l1 = std::log(ymax);
  for (int i = 0; i < points; ++i)
    g[i] = std::exp(l0 + (l1 - l0) * i / (points - 1));
  return g;
}

}  // namespace zqlab::riesz
