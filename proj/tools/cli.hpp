// Copyright 2026 The cjwe Authors.
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

#ifndef CJWE_TOOLS_CLI_HPP
#define CJWE_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cjwe::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kBudgetExceeded = 3,
  kPrecondition = 4,
};

/// Runs one command line (without the program name). Output is written to
/// `out` only after the command has completed; diagnostics go to `err`.
/// Process-wide limits and thread counts are restored on return.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cjwe::cli

#endif  // CJWE_TOOLS_CLI_HPP
