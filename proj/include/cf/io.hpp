#pragma once

// JSON and CSV plumbing for terms, traces and reports.  Infinite values are
// written as the strings "inf" / "-inf"; every emitted body or function
// parses back to an identical value.

#include <string>

#include <json.hpp>

#include "cf/body2.hpp"
#include "cf/fn1.hpp"
#include "cf/report.hpp"

namespace cf::io {

using Json = nlohmann::json;

/// %.17g, or inf / -inf / nan.
std::string format_double(double v);
Json number_json(double v);
/// A JSON number or one of "inf", "-inf", "+inf".  `where` names the field in errors.
double number_from(const Json& j, const std::string& where);

/// {"polygon": {"vertices": [[x, y], ...], "rays": [...], "halfplanes": [[nx, ny, c], ...]}}
/// | {"ball": r, "sides": n} | {"segment": [[x1, y1], [x2, y2]]} | {"strip": a}.
/// "halfplanes" is optional; when present the stored representation is kept verbatim.
ConvexBody2 body_from_json(const Json& j, const std::string& where = "body");
Json body_to_json(const ConvexBody2& k);

/// {"pl": {"points": [[x, fx], ...], "left_slope": s | "inf", "right_slope": s | "inf"}}
/// | {"quad": c} | {"hp": p, "grid": n, "extent": e}
/// | {"plq": {"lo": ., "hi": ., "knots": [...], "pieces": [[a, b, c], ...]}}.
ConvexFn1 fn_from_json(const Json& j, const std::string& where = "function");
/// Always the exact "plq" form.
Json fn_to_json(const ConvexFn1& f);

Json report_to_json(const ConditionReport& r);

/// Parses text as JSON; when it is not JSON but names a readable file, parses the file.
Json parse_inline_or_file(const std::string& text);

}  // namespace cf::io
