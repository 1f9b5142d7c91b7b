#include "cf/profile.hpp"

#include <cmath>
#include <utility>

#include "cf/common.hpp"

namespace cf {

LipschitzProfile::LipschitzProfile(std::string name, std::function<double(double)> fn,
                                   double at_infinity, bool exact_xh)
    : name_(std::move(name)), fn_(std::move(fn)), at_infinity_(at_infinity), exact_xh_(exact_xh) {}

LipschitzProfile LipschitzProfile::exact() {
  return LipschitzProfile("exact", [](double) { return 1.0; }, 1.0, true);
}

LipschitzProfile LipschitzProfile::legendre_fenchel() {
  return LipschitzProfile(
      "legendre-fenchel", [](double r) { return 1.0 + std::sqrt(1.0 - 1.0 / r); }, 2.0, false);
}

double LipschitzProfile::operator()(double ratio) const {
  if (!(ratio >= 1.0)) {
    throw InvalidParameters("Lipschitz profile evaluated at R < 1");
  }
  if (std::isinf(ratio)) return at_infinity_;
  return fn_(ratio);
}

}  // namespace cf
