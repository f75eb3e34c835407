// Copyright 2026 The paulilogic Authors
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

#ifndef PAULILOGIC_TOOLS_CLI_H
#define PAULILOGIC_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace paulilogic {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

/// Runs one `paulilogic` command. `args` excludes the program name. Normal
/// output goes to `out` (or the --out file), diagnostics to `err`.
///
/// Returns 0 on success, 1 on a domain error (bad axioms, size mismatch,
/// unreadable input, failed oracle comparison) and 2 on a usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace paulilogic

#endif
