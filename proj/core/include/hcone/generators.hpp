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

#ifndef HCONE_GENERATORS_HPP_
#define HCONE_GENERATORS_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hcone/hvector.hpp"
#include "hcone/rational.hpp"

namespace hcone {

/// s_i = floor(i/n) + 1, the largest possible entry in degree i; 1 for i < 0.
std::int64_t s_coeff(Grading g, std::int64_t i);

/// The maximal h-vector of degree d: (s_0, ..., s_d).
HVector s_vector(Grading g, std::int64_t d);

/// The tower of degree d = n*m + r: entry i is 1 iff (i mod n) <= r.
/// Its staircase is the (r+1) x (m+1) rectangle.
HVector t_vector(Grading g, std::int64_t d);

/// Glue h to the right of the tower t^d:
///   t^d + (0^{r+1}, h_0, ..., h_{nm-r-3}, 0^{r+2}).
/// Requires r != n-1 and degree(h) <= d - 2r - 3.
HVector star(Grading g, std::int64_t d, const HVector& h);

enum class PointKind { kMax, kTower, kGlued };

/// Name of a generator of an extremal ray: s^d, t^d or t^d * inner.
///
/// Values are canonical: a tower of degree <= n-1 is stored as Max, so
/// structural equality coincides with equality of expansions.
class ExtremalPoint {
 public:
  static ExtremalPoint max(std::int64_t d);
  static ExtremalPoint tower(Grading g, std::int64_t d);
  static ExtremalPoint glued(Grading g, std::int64_t d, ExtremalPoint inner);

  PointKind kind() const { return kind_; }
  std::int64_t degree() const { return degree_; }
  /// Only meaningful for kGlued.
  const ExtremalPoint& inner() const { return *inner_; }

  /// "s^7", "t^4", "t^9*t^4*s^0".
  std::string name() const;

  friend bool operator==(const ExtremalPoint& a, const ExtremalPoint& b);
  friend std::strong_ordering operator<=>(const ExtremalPoint& a,
                                          const ExtremalPoint& b);

 private:
  ExtremalPoint(PointKind kind, std::int64_t degree,
                std::shared_ptr<const ExtremalPoint> inner)
      : kind_(kind), degree_(degree), inner_(std::move(inner)) {}

  PointKind kind_;
  std::int64_t degree_;
  std::shared_ptr<const ExtremalPoint> inner_;
};

/// Throws DomainError unless p is a valid point under grading g.
void validate_point(Grading g, const ExtremalPoint& p);

/// The h-vector a point names. Always starts with 1.
HVector expand(Grading g, const ExtremalPoint& p);

/// The extremal points of the cone in degrees <= d, deduplicated by
/// expansion, listed by ascending degree (s^d, t^d, then glued points).
std::vector<ExtremalPoint> enumerate_ex(Grading g, std::int64_t d);

struct Term {
  Rational coeff;
  ExtremalPoint point;
};

/// A positive rational combination of extremal points.
struct Decomposition {
  std::vector<Term> terms;
};

/// Merge equal points, drop zero terms and order terms by descending degree,
/// then descending expansion (the largest point of a chain comes first).
Decomposition canonicalize(Grading g, const Decomposition& dec);

/// Sum of coeff * expand(point). Throws DomainError on negative coefficients.
HVector reconstruct(Grading g, const Decomposition& dec);

/// "1/3*s^7 + 1/2*t^6*s^3 + s^1"; the empty combination prints as "0".
std::string format_decomposition(const Decomposition& dec);

/// The all-ones tower t^{nm-1} written as sum_{l=1}^{m} q_l * s^{nl-1},
/// with q_m = 1/m and q_l = 1/l - sum_{k>l} q_k (so q_l = 1/(l(l+1))).
Decomposition tower_decomposition(Grading g, std::int64_t m);

}  // namespace hcone

#endif  // HCONE_GENERATORS_HPP_
