#pragma once

// The (phi, Phi) Mellin pairs used to exercise the summation formulas.

#include <string>

#include "zqlab/numeric.hpp"

namespace zqlab::identities {

class TestFunction {
 public:
  enum class Kind { exp, gauss, k0, riesz };

  static TestFunction make_exp(double y);
  static TestFunction make_gauss(double y);
  static TestFunction make_k0(double y);
  static TestFunction make_riesz(double y, double k);

  Kind kind() const { return kind_; }
  std::string name() const;
  double phi(double x) const;
  cplx mellin(cplx s) const;  // Phi(s)
  double decay_exponent() const { return delta_; }
  double y() const { return y_; }
  double riesz_order() const { return k_; }

  // |Int_0^inf x^{s-1} phi(x) dx - Phi(s)| by quadrature.
  double mellin_pair_residual(double s) const;

 private:
  TestFunction(Kind kind, double y, double k, double delta)
      : kind_(kind), y_(y), k_(k), delta_(delta) {}
  Kind kind_;
  double y_;
  double k_;
  double delta_;
};

}  // namespace zqlab::identities
