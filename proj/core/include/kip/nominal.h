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

#ifndef KIP_NOMINAL_H_
#define KIP_NOMINAL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "kip/instance.h"
#include "kip/rat.h"

namespace kip {

// Follower-side knapsack primitives.

struct KnapsackAnswer {
  Rat value = 0;
  std::vector<bool> chosen;
};

inline constexpr std::uint64_t kDefaultBudgetStateLimit = 200'000'000;
inline constexpr std::uint64_t kDefaultCapacityStateLimit = 10'000'000;

// max sum of profits over selections with total cost <= budget, by the
// O(n * budget) dynamic program. When selecting and skipping an item reach
// the same optimum the item is selected.
KnapsackAnswer KnapsackMaxBudget(
    std::span<const Rat> profits, std::span<const Int> costs,
    const Int& budget,
    std::uint64_t state_limit = kDefaultBudgetStateLimit);

// F(x) for a single capacity constraint: greedy by profit/weight ratio over
// the non-interdicted items, zero-weight items first, ties by lower index.
// At most one coordinate of the result is fractional.
FracPacking FractionalKnapsack(const Instance& inst,
                               const InterdictionVector& x);

// K(x): the integer follower optimum after interdicting x, by a DP over the
// capacity lattice. The lattice size (product of C_j + 1) is capped by
// `state_limit` when t >= 2.
KnapsackAnswer IntegerKnapsackK(
    const Instance& inst, const InterdictionVector& x,
    std::uint64_t state_limit = kDefaultCapacityStateLimit);

// Drops every fractional coordinate of a vertex packing.
KnapsackAnswer RoundDownPacking(const FracPacking& fp,
                                std::span<const Int> profits);

}  // namespace kip

#endif  // KIP_NOMINAL_H_
