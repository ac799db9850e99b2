// Copyright 2026 The kip Authors
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

#ifndef KIP_TOOLS_CLI_GENERATOR_H_
#define KIP_TOOLS_CLI_GENERATOR_H_

#include <cstddef>
#include <cstdint>

#include "kip/instance.h"
#include "kip/rat.h"

namespace kip::cli {

// Random instance family. Draws come from std::mt19937_64 seeded with `seed`
// (its output sequence is fixed by the C++ standard) in the order: profits,
// costs, then weights row by row. Each draw is uniform on [1, max] by
// rejection sampling on the raw 64-bit output, so files are identical across
// platforms and standard libraries.
//
//   B   = round(budget_frac * sum_i c_i)
//   C_j = round(cap_frac * sum_i w_ji)
//
// with ties rounded up.
struct GeneratorParams {
  std::size_t n = 10;
  std::size_t t = 1;
  std::uint64_t seed = 1;
  std::uint64_t pmax = 100;
  std::uint64_t wmax = 100;
  std::uint64_t cmax = 100;
  Rat budget_frac = Rat(1, 2);
  Rat cap_frac = Rat(1, 2);
};

// Throws kInvalidParameter for t == 0, a zero maximum or a negative fraction.
Instance GenerateInstance(const GeneratorParams& params);

}  // namespace kip::cli

#endif  // KIP_TOOLS_CLI_GENERATOR_H_
