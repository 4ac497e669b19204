// Copyright 2026 The ncseries Authors
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

#ifndef NCSERIES_CLI_HPP
#define NCSERIES_CLI_HPP

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncs {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUnknownName = 2;
inline constexpr int kExitUsage = 64;

/// Runs the command line `argv[0..argc)` writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience for tests: args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Names accepted by `expand`.
std::vector<std::string> expandable_series_names();

}  // namespace ncs

#endif  // NCSERIES_CLI_HPP
