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

#ifndef SELFDUAL_RATIONAL_H_
#define SELFDUAL_RATIONAL_H_

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace selfdual {

using Rational = boost::rational<std::int64_t>;

// "a/b", or "a" when the denominator is 1.
std::string ToString(const Rational& r);

// Accepts "a", "-a", or "a/b". Throws kParseError.
Rational ParseRational(const std::string& text);

}  // namespace selfdual

#endif  // SELFDUAL_RATIONAL_H_
