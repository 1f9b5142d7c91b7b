#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cf/fn_cf.hpp"
#include "cf/io.hpp"
#include "cf/scalar.hpp"
#include "cf/set_cf.hpp"
#include "cf/checks.hpp"

namespace cf::cli {

namespace {

using io::Json;

struct RunOptions {
  std::string terms;
  bool constant = false;
  bool periodic = false;
  std::size_t max_iter = 100;
  double tol = 1e-10;
  std::vector<std::string> checks;
  std::string output;
  std::string format = "csv";
  std::string h_sp;  // func-a only
  bool hull = false; // set only
};

/// Thrown for internal invariant violations (exit 3).
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class V, class Parse>
TermSequence<V> read_terms(const RunOptions& o, Parse parse) {
  if (o.terms.empty()) throw InvalidInput("--terms is required");
  if (o.constant && o.periodic) throw InvalidInput("--const and --periodic are exclusive");
  const Json j = io::parse_inline_or_file(o.terms);
  if (o.constant) {
    if (j.is_array()) {
      if (j.size() != 1) throw InvalidInput("--const takes a single term");
      return TermSequence<V>::constant(parse(j[0], "terms[0]"));
    }
    return TermSequence<V>::constant(parse(j, "terms"));
  }
  if (!j.is_array() || j.empty()) throw InvalidInput("terms: expected a nonempty array (or --const)");
  std::vector<V> ts;
  for (std::size_t i = 0; i < j.size(); ++i) ts.push_back(parse(j[i], "terms[" + std::to_string(i) + "]"));
  if (o.periodic) return TermSequence<V>::periodic(std::move(ts));
  return TermSequence<V>::finite(std::move(ts));
}

// Terms whose bounds enter the uniform criteria: one period, or all of a finite list.
template <class V>
std::vector<V> defining_terms(const TermSequence<V>& terms) {
  std::vector<V> out;
  const std::size_t n = terms.is_periodic() ? terms.period() : *terms.size();
  for (std::size_t i = 1; i <= n; ++i) out.push_back(terms.at(i));
  return out;
}

template <class S>
using Extra = std::function<std::optional<ConditionReport>(const std::string&, const ApproximantTrace<typename S::value_type>&)>;

template <class S>
ConditionReport run_check(const S& s, const std::string& name, const TermSequence<typename S::value_type>& terms,
                          const ApproximantTrace<typename S::value_type>& trace, const Extra<S>& extra) {
  if (name == "monotone") return check_monotone(s, trace, 1e-9);
  if (name == "urr" || name == "uniform-simple") {
    double r = kInf;
    double big_r = 0.0;
    for (const auto& x : defining_terms(terms)) {
      r = std::min(r, s.lower_ratio(x));
      big_r = std::max(big_r, s.upper_ratio(x));
    }
    return name == "urr" ? check_urr(r, big_r, s.profile()) : check_uniform_simple(r, big_r, s.profile());
  }
  if (extra) {
    if (auto rep = extra(name, trace)) return *rep;
  }
  throw InvalidInput("unknown check '" + name + "' for this instance");
}

std::string csv_trace_header() { return "n,gap,norm,inradius,residual\n"; }

template <class S>
int run_instance(const S& s, const char* label, const TermSequence<typename S::value_type>& terms,
                 const RunOptions& o, std::function<Json(const typename S::value_type&)> emit,
                 const Extra<S>& extra, std::ostream& out, std::ostream& err) {
  std::size_t max_n = o.max_iter;
  if (auto total = terms.size()) max_n = std::min(max_n, *total);
  const auto trace = approximant_trace(s, terms, max_n, o.tol);
  const bool constant = terms.is_periodic() && terms.period() == 1;

  std::vector<ConditionReport> reports;
  for (const auto& name : o.checks) {
    ConditionReport rep = run_check(s, name, terms, trace, extra);
    // the monotonicity of approximants is a theorem, not a hypothesis
    if (rep.criterion == "monotone" && rep.verdict == Verdict::kFails) {
      throw InvariantViolation("approximants are not monotone");
    }
    reports.push_back(std::move(rep));
  }

  Json rows = Json::array();
  std::ostringstream csv;
  csv << csv_trace_header();
  for (const auto& e : trace.entries) {
    const double residual = constant ? fixed_point_residual(s, e.z, terms.at(1)) : std::numeric_limits<double>::quiet_NaN();
    const double lower = s.lower_ratio(e.z);
    csv << e.n << ',' << io::format_double(e.gap) << ',' << io::format_double(e.norm) << ','
        << io::format_double(lower) << ',' << io::format_double(residual) << '\n';
    rows.push_back({{"n", e.n}, {"gap", io::number_json(e.gap)}, {"norm", io::number_json(e.norm)},
                    {"inradius", io::number_json(lower)}, {"residual", io::number_json(residual)}});
  }
  const auto& last = trace.limit_estimate ? *trace.limit_estimate : trace.entries.back().z;
  Json reps = Json::array();
  for (const auto& r : reports) reps.push_back(io::report_to_json(r));

  std::string body;
  if (o.format == "json") {
    Json doc{{"instance", label}, {"verdict", to_string(trace.verdict)}, {"rows", rows},
             {"limit", emit(last)}, {"events", trace.events}, {"reports", reps}};
    body = doc.dump(1) + "\n";
  } else {
    body = csv.str();
  }
  if (o.output.empty()) {
    out << body;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw InvalidInput("cannot write " + o.output);
    f << body;
    std::ofstream rf(o.output + ".report.json", std::ios::binary);
    if (!rf) throw InvalidInput("cannot write " + o.output + ".report.json");
    rf << reps.dump(1) << "\n";
  }
  err << "verdict: " << to_string(trace.verdict) << "\n";
  err << "limit: " << emit(last).dump() << "\n";
  for (const auto& r : reports) err << "check " << r.criterion << ": " << to_string(r.verdict) << "\n";
  return kExitOk;
}

void add_run_options(CLI::App* sub, RunOptions& o) {
  sub->add_option("--terms", o.terms, "JSON term list (or single term with --const), inline or a file path");
  sub->add_flag("--const", o.constant, "constant sequence of the single term");
  sub->add_flag("--periodic", o.periodic, "repeat the term list");
  sub->add_option("--max-iter", o.max_iter, "number of approximants")->check(CLI::Range(2, 100000));
  sub->add_option("--tol", o.tol, "convergence tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--check", o.checks, "comma separated checks")->delimiter(',');
  sub->add_option("--output", o.output, "trace file; reports go to <output>.report.json");
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

int cmd_scalar(const RunOptions& o, std::ostream& out, std::ostream& err) {
  const auto terms = read_terms<double>(o, [](const Json& j, const std::string& w) {
    const double x = io::number_from(j, w);
    if (!(x >= 0.0)) throw InvalidInput(w + ": scalar terms must be >= 0");
    return x;
  });
  Extra<ScalarInstance> extra = [&](const std::string& name, const ApproximantTrace<double>&) -> std::optional<ConditionReport> {
    if (name == "seidel-stern") return seidel_stern_verdict(terms, o.max_iter);
    return std::nullopt;
  };
  return run_instance(ScalarInstance{}, "scalar", terms, o, [](double v) { return io::number_json(v); }, extra, out, err);
}

int cmd_set(const RunOptions& o, std::ostream& out, std::ostream& err) {
  const auto terms = read_terms<ConvexBody2>(o, [](const Json& j, const std::string& w) { return io::body_from_json(j, w); });
  const bool constant = terms.is_periodic() && terms.period() == 1;
  Extra<SetInstance> extra = [&](const std::string& name, const ApproximantTrace<ConvexBody2>&) -> std::optional<ConditionReport> {
    if (name != "nec-suf" && name != "constant-theorem") return std::nullopt;
    if (!constant) throw InvalidInput("check '" + name + "' needs --const");
    if (name == "nec-suf") return check_nec_suf(terms.at(1), 20);
    return check_constant_theorem(terms.at(1));
  };
  if (o.hull) {
    Extra<HullSetInstance> none;
    return run_instance(HullSetInstance{}, "set-hull", terms, o, io::body_to_json, none, out, err);
  }
  return run_instance(SetInstance{}, "set", terms, o, io::body_to_json, extra, out, err);
}

int cmd_lf(const RunOptions& o, std::ostream& out, std::ostream& err) {
  const auto terms = read_terms<ConvexFn1>(o, [](const Json& j, const std::string& w) { return io::fn_from_json(j, w); });
  const bool constant = terms.is_periodic() && terms.period() == 1;
  Extra<LFInstance> extra = [&](const std::string& name, const ApproximantTrace<ConvexFn1>&) -> std::optional<ConditionReport> {
    if (name != "legendre-theorem") return std::nullopt;
    if (!constant) throw InvalidInput("check 'legendre-theorem' needs --const");
    return check_legendre_theorem(terms.at(1));
  };
  return run_instance(LFInstance{}, "func-lf", terms, o, io::fn_to_json, extra, out, err);
}

int cmd_a(const RunOptions& o, std::ostream& out, std::ostream& err) {
  const AInstance inst = o.h_sp.empty() ? AInstance{} : AInstance(io::fn_from_json(io::parse_inline_or_file(o.h_sp), "h-sp"));
  const auto terms = read_terms<ConvexFn1>(o, [&](const Json& j, const std::string& w) {
    ConvexFn1 f = io::fn_from_json(j, w);
    try {
      inst.validate(f);
    } catch (const InvalidInput& e) {
      throw InvalidInput(w + ": " + e.what());
    }
    return f;
  });
  Extra<AInstance> none;
  return run_instance(inst, "func-a", terms, o, io::fn_to_json, none, out, err);
}

int cmd_examples(bool list, const std::string& name, const std::vector<std::string>& kv, std::ostream& out,
                 std::ostream& err) {
  const auto& reg = example_registry();
  if (list || name.empty()) {
    for (const auto& e : reg) out << e.name << "\t" << e.summary << "\n";
    return kExitOk;
  }
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const Example& e) { return e.name == name; });
  if (it == reg.end()) throw InvalidInput("unknown example '" + name + "' (see --list)");
  Params params;
  for (const auto& item : kv) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidInput("example parameter '" + item + "' is not key=value");
    try {
      params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InvalidInput("example parameter '" + item + "' has a non-numeric value");
    }
  }
  const bool ok = it->run(params, out);
  err << name << ": " << (ok ? "expected verdict reproduced" : "EXPECTED VERDICT NOT REPRODUCED") << "\n";
  return ok ? kExitOk : kExitInvariant;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fractions in ordered semigroups with an order-reversing involution", "cf"};
  app.require_subcommand(1);
  RunOptions o;
  auto* scalar = app.add_subcommand("scalar", "positive reals, x* = 1/x");
  auto* set = app.add_subcommand("set", "planar convex bodies, polar and Minkowski sum");
  auto* lf = app.add_subcommand("func-lf", "convex functions, conjugate and pointwise sum");
  auto* fa = app.add_subcommand("func-a", "convex functions, A-transform and pointwise sum");
  for (auto* sub : {scalar, set, lf, fa}) add_run_options(sub, o);
  set->add_flag("--hull", o.hull, "add by convex hull of the union instead of Minkowski sum");
  fa->add_option("--h-sp", o.h_sp, "self-polar reference function for the metric (default |x|)");

  auto* ex = app.add_subcommand("examples", "named worked examples");
  bool list = false;
  std::string ex_name;
  std::vector<std::string> ex_params;
  ex->add_flag("--list", list, "list the registry");
  ex->add_option("--run", ex_name, "run one example and assert its verdict");
  ex->add_option("params", ex_params, "key=value parameters, e.g. r=3");

  auto* fz = app.add_subcommand("fuzz", "random property runs (seed from CF_SEED)");
  std::string kind = "all";
  long count = 100;
  fz->add_option("--kind", kind, "set-polar, lf, a-xh, monotone or all")
      ->check(CLI::IsMember({"set-polar", "lf", "a-xh", "monotone", "all"}));
  fz->add_option("--count", count, "cases per property")->check(CLI::Range(1L, 100000L));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (scalar->parsed()) return cmd_scalar(o, out, err);
    if (set->parsed()) return cmd_set(o, out, err);
    if (lf->parsed()) return cmd_lf(o, out, err);
    if (fa->parsed()) return cmd_a(o, out, err);
    if (ex->parsed()) return cmd_examples(list, ex_name, ex_params, out, err);
    if (fz->parsed()) {
      const long bad = fuzz(kind, count, out);
      err << "violations: " << bad << "\n";
      return bad == 0 ? kExitOk : kExitInvariant;
    }
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidParameters& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitInvalid;
}

}  // namespace cf::cli
