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

#ifndef HCONE_TESTS_SUPPORT_HPP_
#define HCONE_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "hcone/hvector.hpp"

namespace hcone::testing {

inline HVector H(std::string_view text) { return parse_hvector(text); }

/// Every integer vector of degree exactly d with entries in 0..entry_max.
inline void for_each_vector(std::int64_t d, std::int64_t entry_max,
                            const std::function<void(const HVector&)>& f) {
  std::vector<std::int64_t> e(static_cast<std::size_t>(d + 1), 0);
  e.back() = 1;
  while (true) {
    f(HVector(std::vector<Rational>(e.begin(), e.end())));
    std::size_t k = 0;
    for (; k < e.size(); ++k) {
      if (++e[k] <= entry_max) break;
      e[k] = k + 1 == e.size() ? 1 : 0;
    }
    if (k == e.size()) return;
  }
}

}  // namespace hcone::testing

#endif  // HCONE_TESTS_SUPPORT_HPP_
