#include "zqlab/testfunction.hpp"

#include <cmath>

#include "zqlab/quad.hpp"
#include "zqlab/specfun.hpp"

namespace zqlab::identities {

TestFunction TestFunction::make_exp(double y) {
  if (!(y > 0)) throw numeric_error("TestFunction: y > 0 required");
  return {Kind::exp, y, 0.0, 8.0};
}
TestFunction TestFunction::make_gauss(double y) {
  if (!(y > 0)) throw numeric_error("TestFunction: y > 0 required");
  return {Kind::gauss, y, 0.0, 8.0};
}
TestFunction TestFunction::make_k0(double y) {
  if (!(y > 0)) throw numeric_error("TestFunction: y > 0 required");
  return {Kind::k0, y, 0.0, 8.0};
}
TestFunction TestFunction::make_riesz(double y, double k) {
  if (!(y > 0) || !(k > 0)) throw numeric_error("TestFunction: y, k > 0 required");
  return {Kind::riesz, y, k, k};
}

std::string TestFunction::name() const {
  char buf[64];
  switch (kind_) {
    case Kind::exp: std::snprintf(buf, sizeof buf, "exp(y=%g)", y_); break;
    case Kind::gauss: std::snprintf(buf, sizeof buf, "gauss(y=%g)", y_); break;
    case Kind::k0: std::snprintf(buf, sizeof buf, "k0(y=%g)", y_); break;
    case Kind::riesz: std::snprintf(buf, sizeof buf, "riesz(y=%g,k=%g)", y_, k_); break;
  }
  return buf;
}

double TestFunction::phi(double x) const {
  switch (kind_) {
    case Kind::exp: return std::exp(-x * y_);
    case Kind::gauss: return std::exp(-x * x * y_);
    case Kind::k0: return x > 0 ? specfun::bessel_k(0.0, x * y_) : 0.0;
    case Kind::riesz: return x < y_ ? std::pow(1.0 - x / y_, k_) : 0.0;
  }
  return 0.0;
}

cplx TestFunction::mellin(cplx s) const {
  using specfun::log_gamma;
  switch (kind_) {
    case Kind::exp:
      return std::exp(log_gamma(s) - s * std::log(y_));
    case Kind::gauss:
      return 0.5 * std::exp(log_gamma(s / 2.0) - 0.5 * s * std::log(y_));
    case Kind::k0:
      // 2^{s-2} Gamma^2(s/2) y^{-s}
      return std::exp((s - 2.0) * std::log(2.0) + 2.0 * log_gamma(s / 2.0) -
                      s * std::log(y_));
    case Kind::riesz:
      // y^s Gamma(s) Gamma(k+1) / Gamma(s+k+1)
      return std::exp(s * std::log(y_) + log_gamma(s) + log_gamma(cplx(k_ + 1.0)) -
                      log_gamma(s + k_ + 1.0));
  }
  return 0.0;
}

double TestFunction::mellin_pair_residual(double s) const {
  auto f = [&](double x) { return std::pow(x, s - 1.0) * phi(x); };
  double integral;
  if (kind_ == Kind::riesz) {
    integral = quad::integrate_adaptive(f, 0.0, y_, 1e-12).real();
  } else {
    integral = quad::integrate_semi_infinite(f, 0.0, 1e-12).real();
  }
  return std::abs(integral - mellin(cplx(s, 0.0)));
}

}  // namespace zqlab::identities
