// Copyright 2026 The nkstar Authors
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

#ifndef NKSTAR_CLI_HPP
#define NKSTAR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nkstar {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitError = 2,
  kExitSkippedBudget = 3,
  kExitInternal = 4,
};

/// Runs one command. `args` excludes the program name. Documents go to
/// `out`; human-oriented messages (help, progress) go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nkstar

#endif  // NKSTAR_CLI_HPP
