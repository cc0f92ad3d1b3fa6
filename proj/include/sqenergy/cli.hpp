// Copyright 2026 The sqenergy Authors
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

#ifndef SQENERGY_CLI_HPP
#define SQENERGY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sqenergy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // violation or cross-check failure
inline constexpr int kExitUsage = 2;    // usage, parse or precondition error

// args excludes the program name. Reports go to `out` (or --out), all
// diagnostics to `err`; `in` is read when analyze has no --in/--graph.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace sqenergy::cli

#endif  // SQENERGY_CLI_HPP
