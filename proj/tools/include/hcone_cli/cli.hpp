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

#ifndef HCONE_CLI_CLI_HPP_
#define HCONE_CLI_CLI_HPP_

#include <string>
#include <vector>

namespace hcone::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNotMember = 1,
  kUsage = 2,
  kInternal = 3,
};

struct RunOptions {
  bool color = false;  // ANSI styling in text reports
};

struct RunResult {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Runs one command line. args excludes the program name. Never throws.
RunResult run(const std::vector<std::string>& args, const RunOptions& opts = {});

}  // namespace hcone::cli

#endif  // HCONE_CLI_CLI_HPP_
