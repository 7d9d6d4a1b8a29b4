// Copyright 2026 The hcone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hcone/json.hpp"

#include <string>

#include "hcone/errors.hpp"

namespace hcone {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

json to_json(const HVector& h) {
  json out = json::array();
  for (const auto& x : h.entries()) out.push_back(x.str());
  return out;
}

json to_json(const ExtremalPoint& p) {
  switch (p.kind()) {
    case PointKind::kMax:
      return {{"kind", "max"}, {"d", p.degree()}};
    case PointKind::kTower:
      return {{"kind", "tower"}, {"d", p.degree()}};
    case PointKind::kGlued:
      return {{"kind", "glued"}, {"d", p.degree()}, {"inner", to_json(p.inner())}};
  }
  throw InternalError("unknown point kind");
}

json to_json(const Staircase& s) { return {{"rows", s.rows()}}; }

json to_json(const LexSegment& seg) {
  return {{"staircase", to_json(seg.staircase)}, {"generators", seg.generators}};
}

json to_json(Grading g, const Decomposition& dec) {
  json out = json::array();
  for (const auto& t : dec.terms) {
    out.push_back({{"coeff", to_json(t.coeff)},
                   {"point", to_json(t.point)},
                   {"name", t.point.name()},
                   {"expansion", to_json(expand(g, t.point))}});
  }
  return out;
}

json to_json(Grading g, const MembershipCertificate& cert) {
  if (cert.member) {
    return {{"member", true}, {"terms", to_json(g, cert.decomposition)}};
  }
  return {{"member", false},
          {"witness",
           {{"step", cert.witness.step},
            {"degree", cert.witness.degree},
            {"depth", cert.witness.depth}}}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational string or integer, got " + j.dump());
}

ExtremalPoint point_from_json(Grading g, const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("d") ||
      !j["kind"].is_string() || !j["d"].is_number_integer()) {
    throw ParseError("malformed extremal point " + j.dump());
  }
  const auto kind = j["kind"].get<std::string>();
  const auto d = j["d"].get<std::int64_t>();
  if (kind == "max") return ExtremalPoint::max(d);
  if (kind == "tower") return ExtremalPoint::tower(g, d);
  if (kind == "glued") {
    if (!j.contains("inner")) throw ParseError("glued point without inner");
    return ExtremalPoint::glued(g, d, point_from_json(g, j["inner"]));
  }
  throw ParseError("unknown point kind '" + kind + "'");
}

Decomposition decomposition_from_json(Grading g, const json& j) {
  if (!j.is_array()) throw ParseError("decomposition must be a JSON array");
  Decomposition dec;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("point")) {
      throw ParseError("malformed term " + term.dump());
    }
    dec.terms.push_back(
        {rational_from_json(term["coeff"]), point_from_json(g, term["point"])});
  }
  return dec;
}

}  // namespace hcone
