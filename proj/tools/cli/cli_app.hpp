// Copyright 2026 The dicke4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DICKE4_TOOLS_CLI_APP_HPP_
#define DICKE4_TOOLS_CLI_APP_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace dicke4::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).  Output goes to
/// `out` unless --out is given; diagnostics go to `err`.  Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rounds to 15 significant digits and prints the shortest decimal that
/// reads back to the rounded value.  Magnitudes below 1e-13 and -0 print as 0.
std::string format_number(double x);

}  // namespace dicke4::cli

#endif  // DICKE4_TOOLS_CLI_APP_HPP_
