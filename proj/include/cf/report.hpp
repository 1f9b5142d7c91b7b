#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cf {

enum class Verdict { kHolds, kFails, kHorizonLimited, kNotApplicable };

std::string_view to_string(Verdict v);

/// Outcome of one convergence criterion: the parameters it was evaluated
/// with, the verdict, and the numeric witnesses that back it.
struct ConditionReport {
  struct Certificate {
    long index = 0;
    double value = 0.0;
    std::string label;
  };

  std::string criterion;
  std::vector<std::pair<std::string, double>> parameters;
  Verdict verdict = Verdict::kNotApplicable;
  std::vector<Certificate> certificates;
  std::string note;

  bool holds() const { return verdict == Verdict::kHolds; }

  ConditionReport& param(std::string name, double value) {
    parameters.emplace_back(std::move(name), value);
    return *this;
  }
  ConditionReport& witness(long index, double value, std::string label = {}) {
    certificates.push_back({index, value, std::move(label)});
    return *this;
  }
  /// First parameter with the given name, or NaN.
  double parameter(std::string_view name) const;
};

}  // namespace cf
