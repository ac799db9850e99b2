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

#ifndef KIP_SOLUTION_H_
#define KIP_SOLUTION_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "kip/dual.h"
#include "kip/instance.h"
#include "kip/rat.h"

namespace kip {

// Which bound a Solution certifies.
enum class Guarantee {
  kExactOptF,            // f_value == OPT_F
  kOnePlusEpsOptF,       // f_value <= (1 + eps) OPT_F
  kTwoPlusEpsOptI,       // K(x) <= f_value <= (2 + eps) OPT_I
  kOnePlusTPlusEpsOptI,  // K(x) <= f_value <= (1 + t + eps) OPT_I
};

std::string_view GuaranteeName(Guarantee g);

struct SolveStats {
  std::uint64_t dp_states = 0;
  std::uint64_t dp_tables = 0;
  std::uint64_t candidates = 0;
  std::uint64_t grid_size = 0;
  std::uint64_t grid_evaluations = 0;
};

struct Solution {
  // Interdiction in the caller's (original) item indices.
  InterdictionVector x;
  // Exact F(x) of the returned interdiction.
  Rat f_value = 0;
  Guarantee guarantee = Guarantee::kExactOptF;
  Rat eps = 0;
  std::optional<Rat> eps_internal;
  std::optional<Rat> z_star;
  std::optional<DualPoint> alpha_star;
  // f_value minus the largest surviving profit: a lower bound on K(x).
  Rat additive_cert = 0;
  SolveStats stats;
};

}  // namespace kip

#endif  // KIP_SOLUTION_H_
