// Copyright 2026 The symnash Authors. All rights reserved.
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

#ifndef SYMNASH_CLI_H_
#define SYMNASH_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace symnash {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitFalse = 1,     // verification or property check failed
  kExitInput = 2,     // malformed input or unsupported game
  kExitInternal = 3,  // an internal contract was breached
};

// Runs one command line (without the program name), writing results to
// `out` and diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace symnash

#endif  // SYMNASH_CLI_H_
