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

#include "selfdual/rational.h"

#include <charconv>

#include "selfdual/error.h"

namespace selfdual {
namespace {

std::int64_t ParseInt(const std::string& s, const std::string& whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::kParseError, "not a rational number: " + whole);
  }
  return v;
}

}  // namespace

std::string ToString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational ParseRational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(ParseInt(text, text));
  const std::int64_t num = ParseInt(text.substr(0, slash), text);
  const std::int64_t den = ParseInt(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::kParseError, "zero denominator: " + text);
  return Rational(num, den);
}

}  // namespace selfdual
