// Copyright 2026 The selfdual Authors.
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

#ifndef SELFDUAL_CLI_H_
#define SELFDUAL_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace selfdual {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// Runs one command line (without the program name). The payload, or a
// {"error": ..., "detail": ...} object on failure, goes to `out`; help text
// goes to `out` as well. Returns the process exit status.
int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace selfdual

#endif  // SELFDUAL_CLI_H_
