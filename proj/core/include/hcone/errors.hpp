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

#ifndef HCONE_ERRORS_HPP_
#define HCONE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hcone {

// Malformed textual or JSON input. The message names the offending token.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematically invalid argument: negative coefficient, glue outside
// its admissible range, an h-vector that is not an O-sequence, ...
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal invariant failed (e.g. a decomposition that does not
// reconstruct its target). Never a property of the input alone.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hcone

#endif  // HCONE_ERRORS_HPP_
