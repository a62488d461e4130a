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

#ifndef SELFDUAL_CODE_IO_H_
#define SELFDUAL_CODE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "selfdual/linear_code.h"

namespace selfdual {

// Code JSON: {"p":..,"m":..,"n":..,"k":..,"gen":[[..],..]} with entries in
// canonical integer encoding. Writing emits the canonical (RREF) generator in
// compact form, so writing a parsed canonical file reproduces it byte for
// byte.
std::string WriteCodeJson(const LinearCode& code);

// Throws kParseError (with the offending field or byte offset) or
// kFieldMismatch when an entry is not an element of F_q.
LinearCode ReadCodeJson(std::string_view text);

LinearCode ReadCodeFile(const std::filesystem::path& path);
void WriteCodeFile(const std::filesystem::path& path, const LinearCode& code);

}  // namespace selfdual

#endif  // SELFDUAL_CODE_IO_H_
