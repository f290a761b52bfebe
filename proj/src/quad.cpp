#include "zqlab/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

namespace zqlab::quad {

namespace {

// Gauss-Kronrod 7-15 nodes on [-1,1] (symmetric; nonnegative half listed).
constexpr std::array<double, 8> kXgk = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr std::array<double, 4> kWg = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gk15(const RealFn& f, double a, double b, long& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  evals += 15;
  double kron = 0.0, gauss = 0.0;
  for (int i = 0; i < 7; ++i) kron += kWgk[i] * (fv[i] + fv[14 - i]);
  kron += kWgk[7] * fv[7];
  for (int i = 0; i < 3; ++i) gauss += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  gauss += kWg[3] * fv[7];
  kron *= h;
  gauss *= h;
  double err = std::abs(kron - gauss);
  err = std::min(err, std::pow(200.0 * err, 1.5) + 1e-300);
  return {a, b, kron, err};
}

}  // namespace

QuadratureResult integrate_adaptive(const RealFn& f, double a, double b, double tol,
                                    int max_subdivisions) {
  if (!(a < b)) throw numeric_error("integrate_adaptive: requires a < b");
  long evals = 0;
  std::priority_queue<Interval> q;
  q.push(gk15(f, a, b, evals));
  double total = q.top().value, toterr = q.top().error;
  int splits = 0;
  while (toterr > tol && !q.empty()) {
    if (++splits > max_subdivisions)
      throw numeric_error("integrate_adaptive: max-subdivisions");
    Interval worst = q.top();
    q.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval at rounding resolution; accept as-is
      q.push({worst.a, worst.b, worst.value, 0.0});
      toterr -= worst.error;
      continue;
    }
    Interval l = gk15(f, worst.a, mid, evals);
    Interval r = gk15(f, mid, worst.b, evals);
    total += l.value + r.value - worst.value;
    toterr += l.error + r.error - worst.error;
    q.push(l);
    q.push(r);
  }
  return {cplx(total, 0.0), toterr, evals};
}

QuadratureResult integrate_semi_infinite(const RealFn& f, double a, double tol) {
  // x = a + e^u - 1, dx = e^u du; u = 0 hits x = a exactly and u -> inf covers
  // the tail, so [a, inf) maps onto u in [0, inf).
  auto g = [&](double u) {
    const double eu = std::exp(u);
    const double val = f(a + eu - 1.0);
    return (val == 0.0) ? 0.0 : val * eu;  // avoid 0 * inf in far tails
  };
  // [0,1] in u goes through u = v^2, which regularizes x^alpha endpoint
  // singularities of f at x = a (alpha > -1).
  QuadratureResult head = integrate_adaptive(
      [&](double v) { return g(v * v) * 2.0 * v; }, 0.0, 1.0, 0.25 * tol);
  double u_hi = 1.0;
  QuadratureResult core = integrate_adaptive(g, 1.0, 4.0, 0.25 * tol);
  u_hi = 4.0;
  long evals = core.evaluations + head.evaluations;
  double total = core.real() + head.real();
  double err = core.error_estimate + head.error_estimate;
  // extend in octaves until the last block is negligible
  for (int block = 0; block < 40; ++block) {
    const double next = u_hi + 2.0;
    QuadratureResult piece = integrate_adaptive(g, u_hi, next, 0.25 * tol);
    evals += piece.evaluations;
    total += piece.real();
    err += piece.error_estimate;
    u_hi = next;
    if (std::abs(piece.real()) < 0.25 * tol &&
        std::abs(piece.real()) < 1e-12 * (std::abs(total) + 1.0))
      return {cplx(total, 0.0), err + std::abs(piece.real()), evals};
    if (u_hi > 700.0) break;
  }
  throw numeric_error("integrate_semi_infinite: nonconvergent-tail");
}

QuadratureResult integrate_oscillatory_tail(const RealFn& f, double a, double spacing,
                                            double tol, int max_segments) {
  if (!(spacing > 0)) throw numeric_error("integrate_oscillatory_tail: bad spacing");
  long evals = 0;
  std::vector<double> partial;  // partial sums of segment integrals
  partial.reserve(max_segments);
  double run = 0.0;
  for (int k = 0; k < max_segments; ++k) {
    const double lo = a + k * spacing;
    const double hi = lo + spacing;
    QuadratureResult seg = integrate_adaptive(f, lo, hi, std::max(tol * 1e-3, 1e-15));
    evals += seg.evaluations;
    run += seg.real();
    partial.push_back(run);
    if (k > 8 && std::abs(seg.real()) < tol * 1e-3) break;  // already absolutely tiny
  }
  // repeated averaging of the partial-sum sequence (Euler-type acceleration)
  std::vector<double> s = partial;
  double prev_head = s.back(), head = s.back();
  int rounds = 0;
  while (s.size() > 2 && rounds < 60) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    s.pop_back();
    prev_head = head;
    head = s.front();
    ++rounds;
    if (rounds > 4 && std::abs(head - prev_head) < 0.2 * tol) break;
  }
  return {cplx(head, 0.0), std::abs(head - prev_head), evals};
}

QuadratureResult integrate_vertical_line(const ComplexFn& f, double c, double T, int steps) {
  if (steps < 8) throw numeric_error("integrate_vertical_line: too few steps");
  const double h = 2.0 * T / steps;
  KahanSum re, im, abs_outer;
  double peak = 0.0, edge = 0.0;
  for (int j = 0; j <= steps; ++j) {
    const double t = -T + j * h;
    const cplx v = f(cplx(c, t));
    const double w = (j == 0 || j == steps) ? 0.5 : 1.0;
    re.add(w * v.real());
    im.add(w * v.imag());
    const double m = std::abs(v);
    peak = std::max(peak, m);
    if (j == 0 || j == steps) edge = std::max(edge, m);
    if (std::abs(t) > 0.5 * T) abs_outer.add(w * m);
  }
  if (peak > 0 && edge > 1e-12 * peak)
    throw numeric_error("integrate_vertical_line: insufficient-decay");
  // ds = i dt, so (1/2pi i) Int f ds = (1/2pi) Int f dt
  const cplx val = cplx(re.value(), im.value()) * h / (2.0 * kPi);
  const double err = edge * T + abs_outer.value() * h * 1e-12;
  return {val, err, steps + 1};
}

std::vector<cplx> laurent_coefficients(const ComplexFn& f, cplx s0, double radius,
                                       int lowest, int highest, int points) {
  if (lowest > highest) throw numeric_error("laurent_coefficients: bad order range");
  std::vector<cplx> ring(points);
  for (int j = 0; j < points; ++j) {
    const double th = 2.0 * kPi * j / points;
    const cplx s = s0 + radius * cplx(std::cos(th), std::sin(th));
    const cplx v = f(s);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw numeric_error("laurent_coefficients: radius-hits-singularity");
    ring[j] = v;
  }
  std::vector<cplx> out;
  out.reserve(highest - lowest + 1);
  for (int k = lowest; k <= highest; ++k) {
    KahanSum re, im;
    for (int j = 0; j < points; ++j) {
      const double th = 2.0 * kPi * j / points;
      // e_k = (1/2pi) Int f(s0 + r e^{i th}) r^{-k} e^{-i k th} dth
      const cplx v = ring[j] * std::exp(cplx(0.0, -k * th));
      re.add(v.real());
      im.add(v.imag());
    }
    out.push_back(cplx(re.value(), im.value()) / static_cast<double>(points) *
                  std::pow(radius, -k));
  }
  return out;
}

}  // namespace zqlab::quad
