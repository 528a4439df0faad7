// Copyright 2026 The antimagic Authors
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

#ifndef ANTIMAGIC_CLI_H_
#define ANTIMAGIC_CLI_H_

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace antimagic::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kCoverageOrCapacity = 3,
};

// Runs one command. args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// "a..b" or a single integer; throws FormatError otherwise.
std::pair<int, int> ParseRange(const std::string& text);

}  // namespace antimagic::cli

#endif  // ANTIMAGIC_CLI_H_
