#include "cf/report.hpp"

#include <limits>

namespace cf {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kFails:
      return "fails";
    case Verdict::kHorizonLimited:
      return "horizon-limited";
    case Verdict::kNotApplicable:
      return "not-applicable";
  }
  return "unknown";
}

double ConditionReport::parameter(std::string_view name) const {
  for (const auto& [key, value] : parameters) {
    if (key == name) return value;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace cf
