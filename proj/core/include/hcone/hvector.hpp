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

#ifndef HCONE_HVECTOR_HPP_
#define HCONE_HVECTOR_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hcone/rational.hpp"

namespace hcone {

/// Weight of y in k[x,y] with deg(x) = 1, deg(y) = n.
class Grading {
 public:
  explicit Grading(std::int64_t n);
  std::int64_t n() const { return n_; }

  friend bool operator==(Grading, Grading) = default;

 private:
  std::int64_t n_;
};

/// Finite sequence of non-negative rationals indexed by degree. Trailing
/// zeros are trimmed, so (h_0,..,h_e,0,..) and (h_0,..,h_e) are the same
/// value and the zero vector is the empty sequence.
class HVector {
 public:
  HVector() = default;
  explicit HVector(std::vector<Rational> entries);
  HVector(std::initializer_list<Rational> entries);

  /// Entry at degree i; zero outside 0..degree().
  const Rational& operator[](std::int64_t i) const;
  /// Highest degree with a nonzero entry, or -1 for the zero vector.
  std::int64_t degree() const {
    return static_cast<std::int64_t>(entries_.size()) - 1;
  }
  std::size_t size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  std::span<const Rational> entries() const { return entries_; }

  friend bool operator==(const HVector&, const HVector&) = default;
  friend auto operator<=>(const HVector&, const HVector&) = default;

 private:
  std::vector<Rational> entries_;
};

/// Componentwise a_i <= b_i after zero-padding.
bool leq_pointwise(const HVector& a, const HVector& b);

/// Exact sum of coeff * vector; throws DomainError on a negative coefficient.
HVector linear_combine(std::span<const std::pair<Rational, HVector>> terms);

/// Comma-separated rationals ("3,3,2" / "1/2, 0") or a JSON array of
/// strings and integers. Throws ParseError naming the offending token.
HVector parse_hvector(std::string_view text);

/// "(3,3,2)"; the zero vector prints as "()".
std::string format_hvector(const HVector& h);
/// "3,3,2" -- the form accepted back by parse_hvector and the CLI.
std::string format_hvector_list(const HVector& h);

}  // namespace hcone

#endif  // HCONE_HVECTOR_HPP_
