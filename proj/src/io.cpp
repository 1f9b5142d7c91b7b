#include "cf/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cf::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InvalidInput(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

Vec2 vec_from(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected [x, y]");
  return {number_from(j[0], where + "[0]"), number_from(j[1], where + "[1]")};
}

std::vector<Vec2> vecs_from(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of [x, y]");
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vec_from(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json vecs_json(const std::vector<Vec2>& vs) {
  Json out = Json::array();
  for (const Vec2 v : vs) out.push_back({v.x, v.y});
  return out;
}

// Wraps library validation errors with the JSON location.
template <class F>
auto located(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json number_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from(const Json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  fail(where, "expected a number or \"inf\"");
}

ConvexBody2 body_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || j.size() == 0) fail(where, "expected an object with one of polygon, ball, segment, strip");
  if (j.contains("polygon")) {
    const Json& p = j.at("polygon");
    const std::string w = where + ".polygon";
    const auto vs = p.contains("vertices") ? vecs_from(p.at("vertices"), w + ".vertices") : std::vector<Vec2>{};
    const auto rs = p.contains("rays") ? vecs_from(p.at("rays"), w + ".rays") : std::vector<Vec2>{};
    if (!p.contains("halfplanes")) return located(w, [&] { return ConvexBody2::from_generators(vs, rs); });
    const Json& hj = p.at("halfplanes");
    if (!hj.is_array()) fail(w + ".halfplanes", "expected an array of [nx, ny, c]");
    std::vector<Halfplane> hs;
    for (std::size_t i = 0; i < hj.size(); ++i) {
      const std::string wi = w + ".halfplanes[" + std::to_string(i) + "]";
      if (!hj[i].is_array() || hj[i].size() != 3) fail(wi, "expected [nx, ny, c]");
      hs.push_back({{number_from(hj[i][0], wi), number_from(hj[i][1], wi)}, number_from(hj[i][2], wi)});
    }
    return located(w, [&] { return ConvexBody2::from_representation(vs, rs, hs); });
  }
  if (j.contains("ball")) {
    const double r = number_from(j.at("ball"), where + ".ball");
    const int sides = j.contains("sides") ? j.at("sides").get<int>() : 256;
    if (!(r >= 0.0) || std::isinf(r)) fail(where + ".ball", "radius must be finite and >= 0");
    if (sides < 3) fail(where + ".sides", "need at least 3 sides");
    if (r == 0.0) return ConvexBody2::origin();
    return ball_ngon(r, sides);
  }
  if (j.contains("segment")) {
    const Json& s = j.at("segment");
    if (!s.is_array() || s.size() != 2) fail(where + ".segment", "expected [[x1, y1], [x2, y2]]");
    const Vec2 p = vec_from(s[0], where + ".segment[0]");
    const Vec2 q = vec_from(s[1], where + ".segment[1]");
    return located(where + ".segment", [&] { return segment(p, q); });
  }
  if (j.contains("strip")) {
    const double a = number_from(j.at("strip"), where + ".strip");
    return located(where + ".strip", [&] { return strip(a); });
  }
  fail(where, "unknown body kind (polygon, ball, segment, strip)");
}

Json body_to_json(const ConvexBody2& k) {
  Json hs = Json::array();
  for (const auto& h : k.halfplanes()) hs.push_back({h.normal.x, h.normal.y, h.offset});
  return {{"polygon", {{"vertices", vecs_json(k.vertices())}, {"rays", vecs_json(k.rays())}, {"halfplanes", hs}}}};
}

ConvexFn1 fn_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || j.size() == 0) fail(where, "expected an object with one of pl, quad, hp, plq");
  if (j.contains("pl")) {
    const Json& p = j.at("pl");
    const std::string w = where + ".pl";
    const Json& pts = field(p, "points", w);
    if (!pts.is_array() || pts.empty()) fail(w + ".points", "expected a nonempty array of [x, f(x)]");
    std::vector<std::pair<double, double>> xs;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vec2 v = vec_from(pts[i], w + ".points[" + std::to_string(i) + "]");
      xs.emplace_back(v.x, v.y);
    }
    // "inf" closes the domain on either side, whatever its sign
    const double ls = number_from(field(p, "left_slope", w), w + ".left_slope");
    const double rs = number_from(field(p, "right_slope", w), w + ".right_slope");
    return located(w, [&] { return ConvexFn1::pl(xs, ls, rs); });
  }
  if (j.contains("quad")) {
    const double c = number_from(j.at("quad"), where + ".quad");
    return located(where + ".quad", [&] { return ConvexFn1::quadratic(c); });
  }
  if (j.contains("hp")) {
    const double p = number_from(j.at("hp"), where + ".hp");
    const int n = j.contains("grid") ? j.at("grid").get<int>() : 8192;
    const double e = j.contains("extent") ? number_from(j.at("extent"), where + ".extent") : 4.0;
    return located(where + ".hp", [&] { return hp_construct(p, n, e).fn; });
  }
  if (j.contains("plq")) {
    const Json& p = j.at("plq");
    const std::string w = where + ".plq";
    const double lo = number_from(field(p, "lo", w), w + ".lo");
    const double hi = number_from(field(p, "hi", w), w + ".hi");
    std::vector<double> knots;
    const Json& kj = field(p, "knots", w);
    if (!kj.is_array()) fail(w + ".knots", "expected an array");
    for (std::size_t i = 0; i < kj.size(); ++i) knots.push_back(number_from(kj[i], w + ".knots"));
    std::vector<Quad> pieces;
    const Json& pj = field(p, "pieces", w);
    if (!pj.is_array()) fail(w + ".pieces", "expected an array of [a, b, c]");
    for (std::size_t i = 0; i < pj.size(); ++i) {
      const std::string wi = w + ".pieces[" + std::to_string(i) + "]";
      if (!pj[i].is_array() || pj[i].size() != 3) fail(wi, "expected [a, b, c]");
      pieces.push_back({number_from(pj[i][0], wi), number_from(pj[i][1], wi), number_from(pj[i][2], wi)});
    }
    return located(w, [&] { return ConvexFn1::from_pieces(lo, hi, std::move(knots), std::move(pieces)); });
  }
  fail(where, "unknown function kind (pl, quad, hp, plq)");
}

Json fn_to_json(const ConvexFn1& f) {
  Json ps = Json::array();
  for (const auto& q : f.pieces()) ps.push_back({q.a, q.b, q.c});
  return {{"plq", {{"lo", number_json(f.lo())}, {"hi", number_json(f.hi())}, {"knots", f.knots()}, {"pieces", ps}}}};
}

Json report_to_json(const ConditionReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = number_json(v);
  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    certs.push_back({{"index", c.index}, {"value", number_json(c.value)}, {"label", c.label}});
  }
  Json out{{"criterion", r.criterion}, {"verdict", std::string(to_string(r.verdict))},
           {"parameters", params}, {"certificates", certs}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json parse_inline_or_file(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& inline_err) {
    std::ifstream in(text);
    if (!in) throw InvalidInput(std::string("terms are neither JSON nor a readable file: ") + inline_err.what());
    try {
      return Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw InvalidInput(text + ": " + e.what());
    }
  }
}

}  // namespace cf::io
