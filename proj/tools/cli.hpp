// Copyright 2026 The wernerest Authors
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

#ifndef WERNEREST_TOOLS_CLI_HPP
#define WERNEREST_TOOLS_CLI_HPP

#include <iosfwd>

namespace wernerest::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 2,
    kDomainError = 3,
    kIoError = 4,
    kValidationFailed = 5,
};

/// Entry point of the wernerest command. Results go to `out` unless --out
/// names a file; diagnostics and summaries go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wernerest::cli

#endif
