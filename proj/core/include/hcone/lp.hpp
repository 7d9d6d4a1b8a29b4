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

#ifndef HCONE_LP_HPP_
#define HCONE_LP_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "hcone/rational.hpp"

namespace hcone {

enum class Relation { kGreaterEqual, kEqual };

/// coeffs . x  (>= | =)  rhs
struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::kGreaterEqual;
  Rational rhs;
};

/// Exact linear feasibility problem. Variables are free unless flagged in
/// `nonnegative` (empty means all free).
struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<Constraint> constraints;
  std::vector<bool> nonnegative;

  /// Adds sum_k coeff_k * x_{index_k}  rel  rhs.
  void add(std::span<const std::pair<std::size_t, Rational>> terms,
           Relation relation, const Rational& rhs);
};

enum class LpBackend { kAuto, kFourierMotzkin, kSimplex };

struct Feasibility {
  bool feasible = false;
  std::vector<Rational> witness;  // satisfies every constraint when feasible
  LpBackend backend = LpBackend::kAuto;
};

/// Decides feasibility exactly. kAuto uses Fourier-Motzkin for systems with
/// at most 40 variables, falling back to the simplex method when elimination
/// grows past its row cap; larger systems go straight to the simplex method.
/// Witnesses are verified by substitution before they are returned.
/// Throws DomainError when a constraint row does not match num_vars.
Feasibility lp_feasible(const LinearSystem& sys,
                        LpBackend backend = LpBackend::kAuto);

bool satisfies(const LinearSystem& sys, std::span<const Rational> x);

}  // namespace hcone

#endif  // HCONE_LP_HPP_
