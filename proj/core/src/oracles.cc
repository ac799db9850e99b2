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

#include "kip/oracles.h"

#include <algorithm>
#include <optional>
#include <string>

#include "kip/error.h"
#include "kip/linalg.h"
#include "kip/nominal.h"

namespace kip {
namespace {

void CheckSize(const Instance& inst, std::size_t max_n) {
  if (inst.n > max_n || inst.n >= 63) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "n = " + std::to_string(inst.n) + " exceeds the oracle limit " +
                    std::to_string(max_n));
  }
}

// Calls visit(x) for every budget-feasible interdiction in mask order.
template <typename Visit>
void ForEachFeasible(const Instance& inst, Visit&& visit) {
  const unsigned long long masks = 1ull << inst.n;
  for (unsigned long long mask = 0; mask < masks; ++mask) {
    InterdictionVector x = InterdictionVector::FromMask(mask, inst.n, inst.costs);
    if (x.Feasible(inst.budget)) visit(std::move(x));
  }
}

void Combinations(std::size_t m, std::size_t k,
                  std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> comb(k);
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == k) {
      out.push_back(comb);
      return;
    }
    for (std::size_t v = start; v + (k - depth) <= m; ++v) {
      comb[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

OptIResult BruteForceOptI(const Instance& inst, std::size_t max_n) {
  CheckSize(inst, max_n);
  OptIResult result;
  std::optional<Int> best;
  ForEachFeasible(inst, [&](InterdictionVector x) {
    const Rat k = IntegerKnapsackK(inst, x).value;
    const Int value = k.get_num();
    if (!best || value < *best) {
      best = value;
      result.optimal.clear();
    }
    if (value == *best) {
      if (result.optimal.size() >= kMaxOptimalInterdictions) {
        throw Error(ErrorCode::kInstanceTooLarge,
                    "too many optimal interdictions to list");
      }
      result.optimal.push_back(std::move(x));
    }
  });
  result.opt_i = *best;
  return result;
}

OptFResult BruteForceOptF(const Instance& inst, std::size_t max_n) {
  CheckSize(inst, max_n);
  std::optional<OptFResult> best;
  ForEachFeasible(inst, [&](InterdictionVector x) {
    Rat value = inst.t == 1 ? FractionalKnapsack(inst, x).value
                            : VertexEnumLp(inst, x, max_n).value;
    if (!best || value < best->opt_f) {
      best = OptFResult{std::move(value), std::move(x)};
    }
  });
  return *best;
}

Int PStar(const Instance& inst, std::size_t max_n) {
  return PStar(inst, BruteForceOptI(inst, max_n));
}

Int PStar(const Instance& inst, const OptIResult& opt_i) {
  std::optional<Int> best;
  for (const auto& x : opt_i.optimal) {
    Int largest = 0;
    for (std::size_t i = 0; i < inst.n; ++i) {
      if (!x[i] && inst.profits[i] > largest) largest = inst.profits[i];
    }
    if (!best || largest < *best) best = largest;
  }
  return best.value_or(Int(0));
}

FracPacking VertexEnumLp(const Instance& inst, const InterdictionVector& x,
                         std::size_t max_n) {
  if (inst.n > max_n || inst.t > 3) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "vertex enumeration supports n <= " + std::to_string(max_n) +
                    " and t <= 3");
  }
  if (x.size() != inst.n) {
    throw Error(ErrorCode::kDimensionMismatch, "interdiction length != n");
  }
  const std::size_t t = inst.t;
  std::vector<std::size_t> avail;
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (!x[i]) avail.push_back(i);
  }

  FracPacking best;
  best.y.assign(inst.n, Rat(0));
  bool have_best = false;

  for (std::size_t k = 0; k <= std::min(t, avail.size()); ++k) {
    std::vector<std::vector<std::size_t>> supports, row_sets;
    Combinations(avail.size(), k, supports);
    Combinations(t, k, row_sets);
    for (const auto& support_pos : supports) {
      std::vector<std::size_t> support;
      std::vector<bool> in_support(inst.n, false);
      for (std::size_t pos : support_pos) {
        support.push_back(avail[pos]);
        in_support[avail[pos]] = true;
      }
      std::vector<std::size_t> fixed;
      for (std::size_t i : avail) {
        if (!in_support[i]) fixed.push_back(i);
      }
      for (const auto& rows : row_sets) {
        RatMatrix m(k, std::vector<Rat>(k));
        for (std::size_t r = 0; r < k; ++r) {
          for (std::size_t s = 0; s < k; ++s) {
            m[r][s] = inst.weights[rows[r]][support[s]];
          }
        }
        auto inverse = Invert(std::move(m));
        if (!inverse) continue;

        const unsigned long long assignments = 1ull << fixed.size();
        for (unsigned long long mask = 0; mask < assignments; ++mask) {
          std::vector<Int> residual = inst.capacities;
          Int fixed_profit = 0;
          bool ok = true;
          for (std::size_t f = 0; f < fixed.size() && ok; ++f) {
            if (!((mask >> f) & 1ull)) continue;
            fixed_profit += inst.profits[fixed[f]];
            for (std::size_t j = 0; j < t; ++j) {
              residual[j] -= inst.weights[j][fixed[f]];
              if (sgn(residual[j]) < 0) ok = false;
            }
          }
          if (!ok) continue;

          std::vector<Rat> ys(k);
          for (std::size_t s = 0; s < k && ok; ++s) {
            for (std::size_t r = 0; r < k; ++r) {
              ys[s] += (*inverse)[s][r] * residual[rows[r]];
            }
            ok = sgn(ys[s]) >= 0 && ys[s] <= 1;
          }
          if (!ok) continue;
          for (std::size_t j = 0; j < t && ok; ++j) {
            Rat load = 0;
            for (std::size_t s = 0; s < k; ++s) {
              load += ys[s] * inst.weights[j][support[s]];
            }
            ok = load <= residual[j];
          }
          if (!ok) continue;

          Rat value = fixed_profit;
          for (std::size_t s = 0; s < k; ++s) {
            value += ys[s] * inst.profits[support[s]];
          }
          if (have_best && value <= best.value) continue;
          have_best = true;
          best.value = value;
          best.y.assign(inst.n, Rat(0));
          best.frac_support.clear();
          for (std::size_t f = 0; f < fixed.size(); ++f) {
            if ((mask >> f) & 1ull) best.y[fixed[f]] = 1;
          }
          for (std::size_t s = 0; s < k; ++s) {
            best.y[support[s]] = ys[s];
            if (sgn(ys[s]) > 0 && ys[s] < 1) best.frac_support.push_back(support[s]);
          }
          std::sort(best.frac_support.begin(), best.frac_support.end());
        }
      }
    }
  }
  return best;
}

OracleReport RunOracles(const Instance& inst, std::size_t max_n) {
  OptIResult opt_i = BruteForceOptI(inst, max_n);
  OracleReport report;
  report.opt_i = opt_i.opt_i;
  report.opt_f = BruteForceOptF(inst, max_n).opt_f;
  report.p_star = PStar(inst, opt_i);
  report.optimal = std::move(opt_i.optimal);
  return report;
}

}  // namespace kip
