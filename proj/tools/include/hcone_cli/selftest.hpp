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

#ifndef HCONE_CLI_SELFTEST_HPP_
#define HCONE_CLI_SELFTEST_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hcone/diagram.hpp"
#include "hcone/lp.hpp"

namespace hcone::cli {

struct SelftestBounds {
  std::int64_t n_max = 3;
  std::int64_t d_max = 5;
  std::int64_t entry_max = 3;
  std::uint64_t seed = 0;
  std::int64_t random_cases = 200;
};

/// Number of integer vectors the exhaustive sweeps visit.
std::int64_t exhaustive_case_count(const SelftestBounds& b);

struct PropertyResult {
  std::string name;
  std::int64_t cases = 0;
  std::vector<std::string> failures;  // one reproduction command each
  std::int64_t failure_count = 0;     // failures may be truncated
};

struct SelftestReport {
  SelftestBounds bounds;
  std::vector<PropertyResult> properties;

  bool passed() const;
  std::string text(bool color) const;
  std::string json() const;
};

/// Deterministic in bounds (including the seed).
SelftestReport run_selftest(const SelftestBounds& bounds);

/// A valid diagram: a positive rational combination (denominators <= den_max)
/// of staircase indicators with n <= n_max and top degree <= d_max.
HDiagram random_hdiagram(std::mt19937_64& rng, std::int64_t n_max,
                         std::int64_t d_max, std::int64_t den_max);

/// Small integer system with at most max_vars variables.
LinearSystem random_system(std::mt19937_64& rng, std::size_t max_vars);

}  // namespace hcone::cli

#endif  // HCONE_CLI_SELFTEST_HPP_
