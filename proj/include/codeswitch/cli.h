// Copyright 2026 The codeswitch Authors
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

#ifndef CODESWITCH_CLI_H
#define CODESWITCH_CLI_H

#include <ostream>

namespace codeswitch {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    /// A check reported failure (verify, simulate, reproduce).
    kExitCheckFailed = 1,
    /// convert exhausted its retry budget.
    kExitSearchExhausted = 2,
    kExitUsage = 64,
    kExitMalformedFile = 65,
    /// Unexpected failure inside the library.
    kExitInternal = 70,
    kExitIo = 74,
};

/// Entry point of the `codeswitch` tool, with injectable streams for testing.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace codeswitch

#endif
