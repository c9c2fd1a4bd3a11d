// Copyright 2026 The lexsynth Authors
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

#ifndef LEXSYNTH_TOOLS_CLI_HPP_
#define LEXSYNTH_TOOLS_CLI_HPP_

#include <iosfwd>

namespace lexsynth::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDataFormatError = 2,
  kValidationError = 3,
};

/// Runs one subcommand. Reports go to `out`, diagnostics to `err`; corpus
/// data is only ever written to files, and only when the command succeeds.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lexsynth::cli

#endif  // LEXSYNTH_TOOLS_CLI_HPP_
