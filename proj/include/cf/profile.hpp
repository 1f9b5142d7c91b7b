#pragma once

#include <functional>
#include <string>

namespace cf {

/// Lipschitz profile R -> C_R of an instance: the constant in
/// rho(x*, (x + t h)*) <= C_R^2 t for h <= x <= R h.
/// Nondecreasing, right-continuous, C(1) = 1.
class LipschitzProfile {
 public:
  LipschitzProfile(std::string name, std::function<double(double)> fn, double at_infinity,
                   bool exact_xh);

  /// C == 1 everywhere.
  static LipschitzProfile exact();
  /// 1 + sqrt(1 - 1/R), the Legendre-Fenchel profile; C(inf) = 2.
  static LipschitzProfile legendre_fenchel();

  /// Throws InvalidParameters for R < 1.
  double operator()(double ratio) const;
  double at_infinity() const { return at_infinity_; }
  bool exact_xh() const { return exact_xh_; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::function<double(double)> fn_;
  double at_infinity_;
  bool exact_xh_;
};

}  // namespace cf
