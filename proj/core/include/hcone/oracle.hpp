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

#ifndef HCONE_ORACLE_HPP_
#define HCONE_ORACLE_HPP_

#include <cstdint>
#include <optional>

#include "hcone/diagram.hpp"
#include "hcone/generators.hpp"
#include "hcone/hvector.hpp"
#include "hcone/lp.hpp"

namespace hcone {

struct OracleVerdict {
  bool member = false;
  std::optional<HDiagram> witness;  // set when member
};

/// LP over the diagram variables h_i^j (j <= s_i) with conditions (1), (2),
/// non-negativity and degree sums equal to h. Independent of the flowchart.
OracleVerdict membership_oracle(Grading g, const HVector& h,
                                LpBackend backend = LpBackend::kAuto);

/// The diagram system itself, exposed for tests and benchmarks. Variable
/// order is by row, then by degree within the row.
LinearSystem diagram_system(Grading g, const HVector& h);

struct ConeVerdict {
  bool member = false;
  Decomposition witness;  // canonical, set when member
};

/// Feasibility of h = sum q_v expand(v), q_v >= 0, over Ex(deg h).
ConeVerdict cone_membership_via_ex(Grading g, const HVector& h,
                                   LpBackend backend = LpBackend::kAuto);

/// True when expand(p) is not a convex combination of the other points of
/// Ex(d). Throws DomainError when p is not in the catalogue.
bool is_extremal_oracle(Grading g, std::int64_t d, const ExtremalPoint& p,
                        LpBackend backend = LpBackend::kAuto);

/// Same test for an arbitrary candidate vector v of degree at most d. Points
/// of Ex(d) equal to v are left out of the hull.
bool is_extremal_candidate(Grading g, std::int64_t d, const HVector& v,
                           LpBackend backend = LpBackend::kAuto);

}  // namespace hcone

#endif  // HCONE_ORACLE_HPP_
