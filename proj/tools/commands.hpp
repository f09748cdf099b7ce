// Copyright 2026 The semspace Authors
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

#pragma once

#include <ostream>

#include "cli_args.hpp"

namespace semspace::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,       // unreadable input, unwritable output, partial corpus
  kExitNumeric = 3,  // numerical failure or internal error
  kExitData = 4,     // malformed data file or word not in the space
};

int exit_code_for(semspace_status status);

/// Runs one parsed command. Data goes to `out` (or the -o file);
/// diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, reading SEMSPACE_RULES from the environment.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semspace::cli
