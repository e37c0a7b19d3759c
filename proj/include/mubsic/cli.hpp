// Copyright 2026 The mubsic Authors
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

#ifndef MUBSIC_CLI_HPP
#define MUBSIC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mubsic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command.  `args` excludes the program name.  The default
/// verification tolerance (1e-10) can be overridden by the MUBSIC_TOL
/// environment variable and per command by --tol.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mubsic::cli

#endif  // MUBSIC_CLI_HPP
