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

#ifndef HCONE_DIAGRAM_HPP_
#define HCONE_DIAGRAM_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hcone/generators.hpp"
#include "hcone/hvector.hpp"
#include "hcone/rational.hpp"

namespace hcone {

/// Weakly decreasing row lengths of a monomial order ideal in k[x,y]; row b
/// holds x^a y^b for 0 <= a < rows[b]. Box (a, b) sits in degree a + n*b.
class Staircase {
 public:
  Staircase() = default;
  /// Throws DomainError unless the lengths are positive and weakly decreasing.
  explicit Staircase(std::vector<std::int64_t> rows);

  const std::vector<std::int64_t>& rows() const { return rows_; }
  std::int64_t box_count() const;
  bool contains(std::int64_t a, std::int64_t b) const;

  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  std::vector<std::int64_t> rows_;
};

/// Per-row contributions h_i^j. rows[k] (row j = k+1) starts at degree n*k:
/// rows[k][c] is the entry at degree n*k + c, i.e. column c.
struct HDiagram {
  Grading grading{1};
  std::vector<std::vector<Rational>> rows;

  /// h_i^j with the row given 1-based as in the literature; zero outside.
  Rational at(std::int64_t degree, std::int64_t j) const;
  /// Column sums per degree (throws if an entry is negative).
  HVector summed() const;
};

enum class DiagramViolation {
  kNone,
  kNegativeEntry,
  kRowBound,        // more rows than s_d
  kRowIncrease,     // condition (1): h_i^j >= h_{i+1}^j
  kColumnIncrease,  // condition (2): h_i^j >= h_{i+n}^{j+1}
  kSumMismatch,
};

struct DiagramCheck {
  DiagramViolation violation = DiagramViolation::kNone;
  std::int64_t degree = -1;
  std::int64_t row = -1;  // 1-based

  bool ok() const { return violation == DiagramViolation::kNone; }
  std::string message() const;
};

/// Validates conditions (1), (2), the row bound and the degree sums against
/// target. Reports the first violation in scan order.
DiagramCheck check_hdiagram(const HDiagram& diag, const HVector& target);

struct Level {
  Rational height;
  Staircase staircase;
};

/// Slices the box stack at its distinct cell heights, bottom level first.
/// Footprints are nested and sum(height * staircase_hvector) = summed().
std::vector<Level> extract_levels(const HDiagram& diag);

/// h_i = #{b : 0 <= i - n*b < rows[b]}.
HVector staircase_hvector(Grading g, const Staircase& s);

struct LexSegment {
  Staircase staircase;
  /// Minimal monomial generators of the ideal, e.g. "x^3*y".
  std::vector<std::string> generators;
};

/// The lex-segment staircase with h-vector h: in each degree keep the h_i
/// monomials x^{i-nb} y^b with the largest b. Throws DomainError for
/// non-integer entries, entries above s_i, or a selection that is not an
/// order ideal (with the witness monomial).
LexSegment lex_segment(Grading g, const HVector& h);

/// "x^4", "x^3*y", "y", "1".
std::string format_monomial(std::int64_t a, std::int64_t b);

enum class RenderFormat { kAscii, kSvg };

/// Parses "ascii" / "svg"; throws ParseError otherwise.
RenderFormat parse_render_format(const std::string& name);

/// Boxes labelled by degree, top row first. ASCII right-aligns labels in
/// fixed-width cells separated by one space.
std::string render_staircase(Grading g, const Staircase& s, RenderFormat fmt);

/// ASCII: one line per level, bottom first: "level 1 (h=1/3): [0][1] / [3]".
/// SVG: the level staircases stacked with level 1 at the bottom.
std::string render_hdiagram(const HDiagram& diag,
                            RenderFormat fmt = RenderFormat::kAscii);

/// Stacks the lex staircases of the decomposition's points, each blown up to
/// its coefficient. A chain gives nested staircases, so the result is valid.
HDiagram diagram_from_decomposition(Grading g, const Decomposition& dec);

}  // namespace hcone

#endif  // HCONE_DIAGRAM_HPP_
