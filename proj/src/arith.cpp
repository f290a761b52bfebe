#include "zqlab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace zqlab::arith {

namespace {

std::vector<std::int8_t> moebius_sieve(std::int64_t N) {
  std::vector<std::int32_t> spf(N + 1, 0);
  std::vector<std::int8_t> mu(N + 1, 0);
  mu[1] = 1;
  std::vector<std::int32_t> primes;
  for (std::int64_t i = 2; i <= N; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::int32_t>(i);
      primes.push_back(static_cast<std::int32_t>(i));
    }
    for (std::int32_t p : primes) {
      if (p > spf[i] || i * p > N) break;
      spf[i * p] = p;
    }
  }
  for (std::int64_t i = 2; i <= N; ++i) {
    const std::int64_t p = spf[i];
    const std::int64_t m = i / p;
    mu[i] = (m % p == 0) ? 0 : static_cast<std::int8_t>(-mu[m]);
  }
  return mu;
}

}  // namespace

ArithTable::ArithTable(std::int64_t N) : limit_(N) {
  if (N < 1) throw numeric_error("build_tables: N >= 1 required");
  if (N > 100000000) throw numeric_error("build_tables: limit-too-large");
  const std::size_t sz = static_cast<std::size_t>(N) + 1;
  lambda_.assign(sz, 0);
  moebius_.assign(sz, 0);
  d_.assign(sz, 0);
  d4_.assign(sz, 0);
  spf_.assign(sz, 0);
  lambda_[1] = 1;
  moebius_[1] = 1;
  d_[1] = 1;
  d4_[1] = 1;
  if (N == 1) return;
  std::vector<std::int32_t> primes;
  for (std::int64_t i = 2; i <= N; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::int32_t>(i);
      primes.push_back(static_cast<std::int32_t>(i));
    }
    for (std::int32_t p : primes) {
      if (p > spf_[i] || i * p > N) break;
      spf_[i * p] = p;
    }
  }
  for (std::int64_t i = 2; i <= N; ++i) {
    const std::int64_t p = spf_[i];
    std::int64_t rest = i, e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    lambda_[i] = static_cast<std::int8_t>((e % 2 == 0) ? lambda_[rest] : -lambda_[rest]);
    moebius_[i] = (e > 1) ? 0 : static_cast<std::int8_t>(-moebius_[rest]);
    d_[i] = static_cast<std::int32_t>(d_[rest] * (e + 1));
    // d4(p^e) = C(e+3, 3)
    d4_[i] = static_cast<std::int32_t>(d4_[rest] * ((e + 1) * (e + 2) * (e + 3) / 6));
  }
}

namespace {

struct Factor {
  std::int64_t p;
  int e;
};

std::vector<Factor> factorize(std::int64_t n) {
  std::vector<Factor> fs;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fs.push_back({p, e});
    }
  }
  if (n > 1) fs.push_back({n, 1});
  return fs;
}

std::int64_t c_from_factors(const std::vector<Factor>& fs) {
  std::int64_t m = 1, mu = 1;
  for (const auto& f : fs) {
    for (int i = 0; i < f.e / 2; ++i) m *= f.p;
    if (f.e % 2) mu = -mu;
  }
  return m * mu;
}

std::int64_t b_from_factors(const std::vector<Factor>& fs) {
  std::int64_t b = 1;
  for (const auto& f : fs) {
    const std::int64_t k = f.e;
    const std::int64_t c1 = (k + 1) * (k + 2) * (k + 3) / 6;  // C(k+3,3)
    const std::int64_t c2 = (k - 1) * k * (k + 1) / 6;        // C(k+1,3)
    b *= c1 - f.p * c2;
  }
  return b;
}

}  // namespace

std::int64_t ArithTable::c_value(std::int64_t n) const {
  if (n < 1) throw numeric_error("c_value: n >= 1 required");
  if (n > limit_) return arith::c_value(n);
  std::int64_t m = 1, mu = 1, rest = n;
  while (rest > 1) {
    const std::int64_t p = spf_[rest];
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) m *= p;
    if (e % 2) mu = -mu;
  }
  return m * mu;
}

std::int64_t ArithTable::b_value(std::int64_t n) const {
  if (n < 1) throw numeric_error("b_value: n >= 1 required");
  if (n > limit_) return arith::b_value(n);
  std::int64_t b = 1, rest = n;
  while (rest > 1) {
    const std::int64_t p = spf_[rest];
    std::int64_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    b *= (e + 1) * (e + 2) * (e + 3) / 6 - p * ((e - 1) * e * (e + 1) / 6);
  }
  return b;
}

std::int64_t c_value(std::int64_t n) {
  if (n < 1) throw numeric_error("c_value: n >= 1 required");
  return c_from_factors(factorize(n));
}

std::int64_t b_value(std::int64_t n) {
  if (n < 1) throw numeric_error("b_value: n >= 1 required");
  return b_from_factors(factorize(n));
}

std::int64_t moebius_value(std::int64_t n) {
  if (n < 1) throw numeric_error("moebius_value: n >= 1 required");
  std::int64_t mu = 1;
  for (const auto& f : factorize(n)) {
    if (f.e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::int64_t totient_value(std::int64_t n) {
  std::int64_t phi = n;
  for (const auto& f : factorize(n)) phi -= phi / f.p;
  return phi;
}

std::int64_t phi_inverse(std::int64_t n) {
  if (n < 1) throw numeric_error("phi_inverse: n >= 1 required");
  static std::map<std::int64_t, std::int64_t> memo{{1, 1}};
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  std::function<std::int64_t(std::int64_t)> rec = [&](std::int64_t m) -> std::int64_t {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    std::int64_t s = 0;
    for (std::int64_t d = 1; d * d <= m; ++d) {
      if (m % d != 0) continue;
      if (d < m) s += totient_value(m / d) * rec(d);
      const std::int64_t q = m / d;
      if (q != d && q < m) s += totient_value(m / q) * rec(q);
    }
    const std::int64_t v = -s;  // f(1) = phi(1) = 1
    memo[m] = v;
    return v;
  };
  return rec(n);
}

double sigma_pow(std::int64_t n, double s) {
  if (n < 1) throw numeric_error("sigma_pow: n >= 1 required");
  KahanSum acc;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    acc.add(std::pow(static_cast<double>(d), s));
    const std::int64_t q = n / d;
    if (q != d) acc.add(std::pow(static_cast<double>(q), s));
  }
  return acc.value();
}

double kappa_value(std::int64_t n, double a, double b) {
  if (n < 1) throw numeric_error("kappa_value: n >= 1 required");
  const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  const std::int64_t m = (r * r == n) ? r : ((r + 1) * (r + 1) == n ? r + 1 : 0);
  if (m == 0) return 0.0;
  return std::pow(static_cast<double>(m), a + b) *
         static_cast<double>(phi_inverse(m));
}

double cab_value(std::int64_t n, double a, double b) {
  if (n < 1) throw numeric_error("cab_value: n >= 1 required");
  double s = 0.0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::int64_t q = n / d;
    s += sigma_pow(d, a) * sigma_pow(d, b) * kappa_value(q, a, b);
    if (q != d) s += sigma_pow(q, a) * sigma_pow(q, b) * kappa_value(d, a, b);
  }
  return s;
}

std::vector<double> dirichlet_convolve(const std::function<double(std::int64_t)>& f,
                                       const std::function<double(std::int64_t)>& g,
                                       std::int64_t N) {
  if (N < 1) throw numeric_error("dirichlet_convolve: N >= 1 required");
  std::vector<double> gv(static_cast<std::size_t>(N) + 1);
  for (std::int64_t m = 1; m <= N; ++m) gv[m] = g(m);
  std::vector<double> h(static_cast<std::size_t>(N) + 1, 0.0);
  for (std::int64_t d = 1; d <= N; ++d) {
    const double fd = f(d);
    if (fd == 0.0) continue;
    for (std::int64_t m = d; m <= N; m += d) h[m] += fd * gv[m / d];
  }
  return h;
}

double dirichlet_series_check(const std::function<double(std::int64_t)>& coeff,
                              const std::function<cplx(cplx)>& closed_form, cplx s,
                              std::int64_t N) {
  KahanSum re, im;
  for (std::int64_t n = 1; n <= N; ++n) {
    const double c = coeff(n);
    if (c == 0.0) continue;
    const cplx v = c * std::exp(-s * std::log(static_cast<double>(n)));
    re.add(v.real());
    im.add(v.imag());
  }
  return std::abs(cplx(re.value(), im.value()) - closed_form(s));
}

std::string SmoothingScheme::label() const {
  if (kind == Kind::abel_exponential) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "abel(X=%.6g)", scale);
    return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "cesaro(order=%d)", cesaro_order);
  return buf;
}

namespace {

void validate(const SmoothingScheme& s) {
  if (s.kind == SmoothingScheme::Kind::cesaro &&
      (s.cesaro_order < 1 || s.cesaro_order > 3))
    throw numeric_error("SmoothingScheme: cesaro order must be 1..3");
  if (s.scale < 1.0) throw numeric_error("SmoothingScheme: scale X >= 1 required");
}

constexpr double kAbelCutFactor = 36.8414;  // 16 ln 10: e^{-n/X} < 1e-16 beyond n = cX

}  // namespace

double smoothed_sum(const std::function<double(std::int64_t)>& coeff,
                    double weight_exponent, const SmoothingScheme& scheme,
                    std::int64_t N) {
  validate(scheme);
  if (scheme.kind == SmoothingScheme::Kind::abel_exponential) {
    const double X = scheme.scale;
    const auto nmax = static_cast<std::int64_t>(std::ceil(kAbelCutFactor * X));
    KahanSum acc;
    for (std::int64_t n = 1; n <= nmax; ++n) {
      const double c = coeff(n);
      if (c == 0.0) continue;
      acc.add(c * std::exp(-static_cast<double>(n) / X) *
              std::pow(static_cast<double>(n), -weight_exponent));
    }
    return acc.value();
  }
  // k-fold averaged partial sums at N
  if (N < 1) throw numeric_error("smoothed_sum: N >= 1 required for cesaro");
  std::vector<double> s(static_cast<std::size_t>(N));
  double run = 0.0;
  for (std::int64_t n = 1; n <= N; ++n) {
    run += coeff(n) * std::pow(static_cast<double>(n), -weight_exponent);
    s[n - 1] = run;
  }
  for (int round = 0; round < scheme.cesaro_order; ++round) {
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      acc += s[i];
      s[i] = acc / static_cast<double>(i + 1);
    }
  }
  return s.back();
}

// ---------------------------------------------------------------------------
// CSeries
// ---------------------------------------------------------------------------

namespace {

std::shared_ptr<const std::vector<std::int8_t>> shared_mu(std::int64_t at_least) {
  static std::mutex mtx;
  static std::shared_ptr<const std::vector<std::int8_t>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  if (!cache || static_cast<std::int64_t>(cache->size()) < at_least + 1)
    cache = std::make_shared<const std::vector<std::int8_t>>(moebius_sieve(at_least));
  return cache;
}

}  // namespace

CSeries::CSeries(double X) : X_(X) {
  if (X < 1.0) throw numeric_error("CSeries: X >= 1 required");
  nmax_ = static_cast<std::int64_t>(std::ceil(kAbelCutFactor * X));
  if (nmax_ > 400000000) throw numeric_error("CSeries: limit-too-large");
  mu_ = shared_mu(nmax_);
}

double CSeries::abel_sum(const std::function<double(std::int64_t)>& weight) const {
  const auto& mu = *mu_;
  const double invX = 1.0 / X_;
  std::vector<double> per_m;
  for (std::int64_t m = 1; m * m <= nmax_; ++m) {
    const std::int64_t m2 = m * m;
    const std::int64_t kmax = nmax_ / m2;
    KahanSum s;
    for (std::int64_t k = 1; k <= kmax; ++k) {
      const int mk = mu[static_cast<std::size_t>(k)];
      if (mk == 0) continue;
      const std::int64_t n = m2 * k;
      s.add(mk * weight(n) * std::exp(-static_cast<double>(n) * invX));
    }
    per_m.push_back(static_cast<double>(m) * s.value());
  }
  return pairwise_sum<double>(per_m);
}

std::vector<std::int32_t> c_table(std::int64_t N) {
  if (N < 1) throw numeric_error("c_table: N >= 1 required");
  const auto mu = shared_mu(N);
  std::vector<std::int32_t> c(static_cast<std::size_t>(N) + 1, 0);
  for (std::int64_t m = 1; m * m <= N; ++m) {
    const std::int64_t m2 = m * m;
    for (std::int64_t k = 1; k * m2 <= N; ++k) {
      const int mk = (*mu)[static_cast<std::size_t>(k)];
      if (mk != 0) c[static_cast<std::size_t>(m2 * k)] = static_cast<std::int32_t>(m * mk);
    }
  }
  return c;
}

std::shared_ptr<const ArithTable> shared_table(std::int64_t at_least) {
  static std::mutex mtx;
  static std::shared_ptr<const ArithTable> cache;
  std::lock_guard<std::mutex> lock(mtx);
  if (!cache || cache->limit() < at_least)
    cache = std::make_shared<const ArithTable>(at_least);
  return cache;
}

}  // namespace zqlab::arith
