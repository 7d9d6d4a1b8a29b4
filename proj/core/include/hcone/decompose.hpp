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

#ifndef HCONE_DECOMPOSE_HPP_
#define HCONE_DECOMPOSE_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "hcone/generators.hpp"
#include "hcone/hvector.hpp"
#include "hcone/rational.hpp"

namespace hcone {

/// Height budget of a recursion level; nullopt is the unbounded top level.
using Budget = std::optional<Rational>;

struct StripResult {
  Rational q;
  HVector remainder;
};

/// Subtracts the largest multiple q <= budget of s^d that keeps h >= 0:
/// q = min(budget, min_{j<=d} h_j / s_j), and q = 0 when d < 0.
StripResult strip_max(Grading g, const HVector& h, std::int64_t d,
                      const Budget& budget = std::nullopt);

/// h_d > 0 while some lower entry vanishes.
bool is_reduced(Grading g, const HVector& h, std::int64_t d);

/// Where the decomposition state machine rejected its input.
struct NotMemberWitness {
  /// reduced_top_level | tower_negative | column_removal_negative |
  /// cut_negative | reassemble_negative
  std::string step;
  std::int64_t degree = 0;
  std::int64_t depth = 0;
};

struct MembershipCertificate {
  bool member = false;
  Decomposition decomposition;  // meaningful iff member
  NotMemberWitness witness;     // meaningful iff !member
};

struct DecomposeStats {
  std::int64_t steps = 0;
};

/// Runs the flowchart decomposition. A Member result is always a positive,
/// totally ordered combination of extremal points that reconstructs h
/// exactly; anything else raises InternalError.
MembershipCertificate decompose(Grading g, const HVector& h,
                                DecomposeStats* stats = nullptr);

/// Positive coefficients, every point in Ex(degree(target)), exact sum.
bool validate_decomposition(Grading g, const HVector& target,
                            const Decomposition& dec);

/// The expansions are pairwise comparable in the pointwise order.
bool chain_check(Grading g, const Decomposition& dec);

}  // namespace hcone

#endif  // HCONE_DECOMPOSE_HPP_
