#pragma once

#include <json.hpp>

#include <cstdio>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "certifier.hpp"
#include "geometry.hpp"

namespace intdist {

using json = nlohmann::ordered_json;

// 17 significant digits; glibc printf rounds the exact binary value half-to-even.
inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw UsageError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw UsageError(where + ": missing field '" + key + "'");
  return *it;
}

inline double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw UsageError(where + ": expected a number");
  return j.get<double>();
}

inline Vec vector_of(const json& j, const std::string& where) {
  if (!j.is_array()) throw UsageError(where + ": expected an array of numbers");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline json vec_json(const Vec& v) {
  json a = json::array();
  for (double x : v) a.push_back(x);
  return a;
}

}  // namespace detail

inline json to_json(const ComponentUnion& P) {
  json j;
  j["dimension"] = P.dimension;
  j["components"] = json::array();
  for (const auto& c : P.components) {
    json cj;
    cj["center"] = detail::vec_json(c.center);
    cj["ball_diameter"] = c.ball_diameter;
    cj["slabs"] = json::array();
    for (const auto& s : c.slabs) cj["slabs"].push_back({{"normal", detail::vec_json(s.normal)}, {"half_width", s.half_width}});
    j["components"].push_back(cj);
  }
  j["shells"] = json::array();
  for (const auto& s : P.shells)
    j["shells"].push_back({{"center", detail::vec_json(s.center)}, {"r_inner", s.r_inner}, {"r_outer", s.r_outer}});
  return j;
}

// Schema errors name the offending path, e.g. components[2].slabs[0].normal.
inline ComponentUnion union_from_json(const json& j) {
  using namespace detail;
  ComponentUnion P;
  const json& dim = field(j, "dimension", "$");
  if (!dim.is_number_integer() || dim.get<long>() < 1) throw UsageError("$.dimension: expected a positive integer");
  P.dimension = dim.get<unsigned>();
  if (j.contains("components")) {
    const json& cs = j["components"];
    if (!cs.is_array()) throw UsageError("$.components: expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string w = "$.components[" + std::to_string(i) + "]";
      Component c;
      c.center = vector_of(field(cs[i], "center", w), w + ".center");
      c.ball_diameter = number(field(cs[i], "ball_diameter", w), w + ".ball_diameter");
      if (cs[i].contains("slabs")) {
        const json& ss = cs[i]["slabs"];
        if (!ss.is_array()) throw UsageError(w + ".slabs: expected an array");
        for (std::size_t k = 0; k < ss.size(); ++k) {
          const std::string ws = w + ".slabs[" + std::to_string(k) + "]";
          c.slabs.push_back({vector_of(field(ss[k], "normal", ws), ws + ".normal"),
                             number(field(ss[k], "half_width", ws), ws + ".half_width")});
        }
      }
      P.components.push_back(std::move(c));
    }
  }
  if (j.contains("shells")) {
    const json& ss = j["shells"];
    if (!ss.is_array()) throw UsageError("$.shells: expected an array");
    for (std::size_t i = 0; i < ss.size(); ++i) {
      const std::string w = "$.shells[" + std::to_string(i) + "]";
      P.shells.push_back({vector_of(field(ss[i], "center", w), w + ".center"), number(field(ss[i], "r_inner", w), w + ".r_inner"),
                          number(field(ss[i], "r_outer", w), w + ".r_outer")});
    }
  }
  try {
    validate(P);
  } catch (const DomainError& e) {
    throw UsageError(std::string("invalid union: ") + e.what());
  }
  return P;
}

inline json parse_json(std::istream& in, const std::string& name) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(name + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline ComponentUnion union_from_string(const std::string& s) {
  std::istringstream in(s);
  return union_from_json(parse_json(in, "input"));
}

inline json to_json(const Certificate& c) {
  json j;
  j["verdict"] = to_string(c.verdict);
  j["method"] = to_string(c.method);
  j["tol"] = c.tol;
  j["bits"] = c.bits;
  j["ledger"] = json::array();
  for (const auto& r : c.ledger) {
    json rj;
    rj["i"] = r.i;
    rj["j"] = r.j;
    rj["dist_lower"] = r.dist_lower;
    rj["dist_upper"] = r.dist_upper;
    rj["diam_lower"] = r.diam_lower;
    rj["diam_upper"] = r.diam_upper;
    rj["blocking"] = r.blocking ? json(*r.blocking) : json(nullptr);
    rj["rule"] = r.rule;
    j["ledger"].push_back(rj);
  }
  if (c.witness) {
    j["witness"] = {{"x", detail::vec_json(c.witness->x)},
                    {"y", detail::vec_json(c.witness->y)},
                    {"distance", c.witness->distance},
                    {"integer", c.witness->integer}};
  } else {
    j["witness"] = nullptr;
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline json to_json(const IntervalSet1D& s) {
  json a = json::array();
  for (const auto& I : s.intervals) a.push_back({{"a", I.a.get_str()}, {"b", I.b.get_str()}, {"a_approx", I.a.get_d()}, {"b_approx", I.b.get_d()}});
  return {{"intervals", a}};
}

inline json to_json(const Line& L) { return {{"base", detail::vec_json(L.base)}, {"direction", detail::vec_json(L.direction)}}; }

}  // namespace intdist
