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

#ifndef KIP_ORACLES_H_
#define KIP_ORACLES_H_

#include <cstddef>
#include <vector>

#include "kip/instance.h"
#include "kip/rat.h"

namespace kip {

// Brute-force ground truth for small instances. Every routine enumerates all
// 2^n interdictions and throws kInstanceTooLarge beyond its size limit.

inline constexpr std::size_t kDefaultOracleMaxN = 20;
inline constexpr std::size_t kDefaultVertexEnumMaxN = 8;
inline constexpr std::size_t kMaxOptimalInterdictions = 1'000'000;

struct OptIResult {
  Int opt_i;
  // Every budget-feasible x with K(x) == opt_i, in increasing mask order.
  std::vector<InterdictionVector> optimal;
};

OptIResult BruteForceOptI(const Instance& inst,
                          std::size_t max_n = kDefaultOracleMaxN);

struct OptFResult {
  Rat opt_f;
  InterdictionVector x;
};

// min F(x) over budget-feasible x: greedy LP for t == 1, vertex enumeration
// for t >= 2. The first minimizer in mask order is returned.
OptFResult BruteForceOptF(const Instance& inst,
                          std::size_t max_n = kDefaultOracleMaxN);

// Over all OPT_I-attaining x, the minimum of the largest surviving profit.
Int PStar(const Instance& inst, std::size_t max_n = kDefaultOracleMaxN);
Int PStar(const Instance& inst, const OptIResult& opt_i);

// Exact LP optimum of the follower relaxation by enumerating basic points:
// up to t fractional coordinates, all others fixed to 0 or 1, the fractional
// ones solved from as many binding capacity rows. Supports t <= 3.
FracPacking VertexEnumLp(const Instance& inst, const InterdictionVector& x,
                         std::size_t max_n = kDefaultVertexEnumMaxN);

struct OracleReport {
  Int opt_i;
  Rat opt_f;
  Int p_star;
  std::vector<InterdictionVector> optimal;
};

OracleReport RunOracles(const Instance& inst,
                        std::size_t max_n = kDefaultOracleMaxN);

}  // namespace kip

#endif  // KIP_ORACLES_H_
