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

#ifndef SELFDUAL_RANDOM_H_
#define SELFDUAL_RANDOM_H_

#include <cstdint>
#include <random>

namespace selfdual {

// mt19937_64 output is fixed by the standard; the distributions are not, so
// reductions are done by hand to keep seeded output identical everywhere.
using Rng = std::mt19937_64;

inline std::uint64_t UniformBelow(Rng& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace selfdual

#endif  // SELFDUAL_RANDOM_H_
