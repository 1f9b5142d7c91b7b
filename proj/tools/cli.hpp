#pragma once

// Command-line front end, callable in-process so tests can drive it.

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInvariant = 3;

/// Runs the tool; trace data goes to out (or --output), summaries to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

using Params = std::map<std::string, double>;

struct Example {
  std::string name;
  std::string summary;
  // returns true when the documented verdict is reproduced
  std::function<bool(const Params&, std::ostream&)> run;
};

const std::vector<Example>& example_registry();

/// Random property runs; returns the number of violations.
long fuzz(const std::string& kind, long count, std::ostream& log);

}  // namespace cf::cli
