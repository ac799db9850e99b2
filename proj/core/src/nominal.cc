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

#include "kip/nominal.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "kip/error.h"

namespace kip {
namespace {

constexpr std::int64_t kInt64Headroom = std::numeric_limits<std::int64_t>::max() / 4;

bool SumFitsInt64(std::span<const Int> values) {
  Int sum = 0;
  for (const auto& v : values) sum += v;
  return sum < kInt64Headroom;
}

template <typename V>
V Convert(const Int& v);

template <>
std::int64_t Convert<std::int64_t>(const Int& v) {
  return static_cast<std::int64_t>(*ToUint64(v));
}

template <>
Int Convert<Int>(const Int& v) {
  return v;
}

template <typename V>
Int ToInt(const V& v) {
  if constexpr (std::is_same_v<V, Int>) {
    return v;
  } else {
    return Int(std::to_string(v), 10);
  }
}

// Suffix table best[i][b] = max profit from items i..n-1 within budget b.
template <typename V>
KnapsackAnswer SolveBudgetDp(std::span<const Int> scaled,
                             std::span<const std::uint64_t> costs,
                             std::uint64_t budget, const Int& scale) {
  const std::size_t n = scaled.size();
  const std::size_t width = budget + 1;
  std::vector<V> profit(n);
  for (std::size_t i = 0; i < n; ++i) profit[i] = Convert<V>(scaled[i]);

  std::vector<V> best((n + 1) * width, V(0));
  for (std::size_t i = n; i-- > 0;) {
    const V* next = &best[(i + 1) * width];
    V* row = &best[i * width];
    for (std::uint64_t b = 0; b <= budget; ++b) {
      row[b] = next[b];
      if (costs[i] <= b) {
        V with = profit[i] + next[b - costs[i]];
        if (with > row[b]) row[b] = with;
      }
    }
  }

  KnapsackAnswer answer;
  answer.chosen.assign(n, false);
  std::uint64_t b = budget;
  for (std::size_t i = 0; i < n; ++i) {
    if (costs[i] <= b &&
        profit[i] + best[(i + 1) * width + (b - costs[i])] == best[i * width + b]) {
      answer.chosen[i] = true;
      b -= costs[i];
    }
  }
  answer.value = Rat(ToInt(best[budget]), scale);
  answer.value.canonicalize();
  return answer;
}

template <typename V>
KnapsackAnswer SolveCapacityDp(std::span<const Int> profits,
                               std::span<const std::uint64_t> offsets,
                               const std::vector<std::vector<std::uint64_t>>& item_weights,
                               std::span<const std::uint64_t> radix,
                               std::span<const std::uint64_t> strides,
                               std::uint64_t states) {
  const std::size_t m = profits.size();
  std::vector<V> dp(states, V(0));
  std::vector<bool> take(m * states, false);
  const std::size_t t = radix.size();
  for (std::size_t k = 0; k < m; ++k) {
    const V profit = Convert<V>(profits[k]);
    if (profit == V(0)) continue;
    for (std::uint64_t s = states; s-- > 0;) {
      bool fits = true;
      for (std::size_t j = 0; j < t && fits; ++j) {
        fits = (s / strides[j]) % radix[j] >= item_weights[k][j];
      }
      if (!fits) continue;
      V with = dp[s - offsets[k]] + profit;
      if (with > dp[s]) {
        dp[s] = with;
        take[k * states + s] = true;
      }
    }
  }
  KnapsackAnswer answer;
  answer.chosen.assign(m, false);
  std::uint64_t s = states - 1;
  for (std::size_t k = m; k-- > 0;) {
    if (take[k * states + s]) {
      answer.chosen[k] = true;
      s -= offsets[k];
    }
  }
  answer.value = Rat(ToInt(dp[states - 1]));
  return answer;
}

}  // namespace

KnapsackAnswer KnapsackMaxBudget(std::span<const Rat> profits,
                                 std::span<const Int> costs, const Int& budget,
                                 std::uint64_t state_limit) {
  if (profits.size() != costs.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "profits and costs differ");
  }
  const std::size_t n = profits.size();
  Int scale = 1;
  for (const auto& p : profits) {
    if (sgn(p) < 0) throw Error(ErrorCode::kNegativeValue, "knapsack profit");
    scale = Lcm(scale, p.get_den());
  }
  std::vector<Int> scaled(n);
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = profits[i].get_num() * (scale / profits[i].get_den());
  }

  Int total_cost = 0;
  for (const auto& c : costs) total_cost += c;
  const Int effective = std::min(budget, total_cost);
  auto b = ToUint64(effective);
  if (!b || Int(Int(n + 1) * (effective + 1)) > Int(std::to_string(state_limit), 10)) {
    throw Error(ErrorCode::kValueTooLarge,
                "budget DP exceeds the state limit");
  }
  // Costs above the effective budget are never affordable.
  std::vector<std::uint64_t> small_costs(n);
  for (std::size_t i = 0; i < n; ++i) {
    small_costs[i] = costs[i] > effective ? *b + 1 : *ToUint64(costs[i]);
  }
  if (SumFitsInt64(scaled)) {
    return SolveBudgetDp<std::int64_t>(scaled, small_costs, *b, scale);
  }
  return SolveBudgetDp<Int>(scaled, small_costs, *b, scale);
}

FracPacking FractionalKnapsack(const Instance& inst,
                               const InterdictionVector& x) {
  if (inst.t != 1) {
    throw Error(ErrorCode::kDimensionMismatch,
                "fractional knapsack needs exactly one capacity constraint");
  }
  if (x.size() != inst.n) {
    throw Error(ErrorCode::kDimensionMismatch, "interdiction length != n");
  }
  const auto& w = inst.weights[0];
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (!x[i] && sgn(inst.profits[i]) > 0) order.push_back(i);
  }
  // Descending p/w with zero weights as +infinity; stable keeps lower index
  // first among equal ratios.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool za = sgn(w[a]) == 0;
    const bool zb = sgn(w[b]) == 0;
    if (za || zb) return za && !zb;
    return inst.profits[a] * w[b] > inst.profits[b] * w[a];
  });

  FracPacking fp;
  fp.y.assign(inst.n, Rat(0));
  Int remaining = inst.capacities[0];
  for (std::size_t i : order) {
    if (w[i] <= remaining) {
      fp.y[i] = 1;
      remaining -= w[i];
      fp.value += inst.profits[i];
    } else {
      if (sgn(remaining) > 0) {
        fp.y[i] = MakeRat(remaining, w[i]);
        fp.value += fp.y[i] * inst.profits[i];
        fp.frac_support.push_back(i);
      }
      break;
    }
  }
  return fp;
}

KnapsackAnswer IntegerKnapsackK(const Instance& inst,
                                const InterdictionVector& x,
                                std::uint64_t state_limit) {
  if (x.size() != inst.n) {
    throw Error(ErrorCode::kDimensionMismatch, "interdiction length != n");
  }
  std::vector<std::uint64_t> radix(inst.t), strides(inst.t);
  Int states_exact = 1;
  for (std::size_t j = 0; j < inst.t; ++j) {
    states_exact *= inst.capacities[j] + 1;
  }
  const bool limited = inst.t >= 2;
  if (!ToUint64(states_exact) ||
      (limited && states_exact > Int(std::to_string(state_limit), 10))) {
    throw Error(ErrorCode::kCapacityProductTooLarge,
                "capacity lattice has " + states_exact.get_str() + " states");
  }
  std::uint64_t states = *ToUint64(states_exact);
  std::uint64_t stride = 1;
  for (std::size_t j = 0; j < inst.t; ++j) {
    radix[j] = *ToUint64(inst.capacities[j]) + 1;
    strides[j] = stride;
    stride *= radix[j];
  }

  // Only available items that fit on their own matter.
  std::vector<std::size_t> items;
  std::vector<Int> profits;
  std::vector<std::uint64_t> offsets;
  std::vector<std::vector<std::uint64_t>> item_weights;
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (x[i] || sgn(inst.profits[i]) == 0) continue;
    bool fits = true;
    std::vector<std::uint64_t> wi(inst.t);
    std::uint64_t offset = 0;
    for (std::size_t j = 0; j < inst.t && fits; ++j) {
      fits = inst.weights[j][i] <= inst.capacities[j];
      if (fits) {
        wi[j] = *ToUint64(inst.weights[j][i]);
        offset += wi[j] * strides[j];
      }
    }
    if (!fits) continue;
    items.push_back(i);
    profits.push_back(inst.profits[i]);
    offsets.push_back(offset);
    item_weights.push_back(std::move(wi));
  }

  KnapsackAnswer reduced =
      SumFitsInt64(profits)
          ? SolveCapacityDp<std::int64_t>(profits, offsets, item_weights,
                                          radix, strides, states)
          : SolveCapacityDp<Int>(profits, offsets, item_weights, radix,
                                 strides, states);
  KnapsackAnswer answer;
  answer.value = reduced.value;
  answer.chosen.assign(inst.n, false);
  for (std::size_t k = 0; k < items.size(); ++k) {
    answer.chosen[items[k]] = reduced.chosen[k];
  }
  return answer;
}

KnapsackAnswer RoundDownPacking(const FracPacking& fp,
                                std::span<const Int> profits) {
  if (profits.size() != fp.y.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "packing length != n");
  }
  KnapsackAnswer answer;
  answer.chosen.assign(fp.y.size(), false);
  for (std::size_t i = 0; i < fp.y.size(); ++i) {
    if (fp.y[i] == 1) {
      answer.chosen[i] = true;
      answer.value += profits[i];
    }
  }
  return answer;
}

}  // namespace kip
