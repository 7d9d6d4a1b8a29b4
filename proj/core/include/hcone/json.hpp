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

#ifndef HCONE_JSON_HPP_
#define HCONE_JSON_HPP_

#include <nlohmann/json.hpp>

#include "hcone/decompose.hpp"
#include "hcone/diagram.hpp"
#include "hcone/generators.hpp"
#include "hcone/hvector.hpp"
#include "hcone/rational.hpp"

namespace hcone {

// Rationals are encoded as strings ("1/2", "3") so no precision is lost.

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const HVector& h);
nlohmann::json to_json(const ExtremalPoint& p);
nlohmann::json to_json(const Staircase& s);
nlohmann::json to_json(const LexSegment& seg);
nlohmann::json to_json(Grading g, const Decomposition& dec);
nlohmann::json to_json(Grading g, const MembershipCertificate& cert);

/// Accepts a string "p/q" or an integer. Throws ParseError otherwise.
Rational rational_from_json(const nlohmann::json& j);
/// {"kind":"max"|"tower"|"glued","d":int,"inner":<point>}, validated
/// against g. Throws ParseError on shape errors, DomainError on bad points.
ExtremalPoint point_from_json(Grading g, const nlohmann::json& j);
/// Inverse of to_json(g, dec); expansions, when present, are ignored.
Decomposition decomposition_from_json(Grading g, const nlohmann::json& j);

}  // namespace hcone

#endif  // HCONE_JSON_HPP_
