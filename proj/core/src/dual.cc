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

#include "kip/dual.h"

#include <algorithm>
#include <optional>

#include "kip/error.h"
#include "kip/linalg.h"
#include "kip/nominal.h"
#include "kip/parallel.h"

namespace kip {
namespace {

void CheckDimensions(const Instance& inst, const InterdictionVector& x,
                     const DualPoint& a) {
  if (x.size() != inst.n) {
    throw Error(ErrorCode::kDimensionMismatch, "interdiction length != n");
  }
  if (a.alpha.size() != inst.t) {
    throw Error(ErrorCode::kDimensionMismatch, "dual point length != t");
  }
}

Rat CapacityTerm(const Instance& inst, const DualPoint& a) {
  Rat sum = 0;
  for (std::size_t j = 0; j < inst.t; ++j) sum += a.alpha[j] * inst.capacities[j];
  return sum;
}

CandidateSet Normalize(std::vector<DualPoint> points, std::size_t t) {
  points.push_back(DualPoint{std::vector<Rat>(t, Rat(0))});
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return CandidateSet{std::move(points)};
}

// Advances a k-combination of [0, m) in lexicographic order.
bool NextCombination(std::vector<std::size_t>& comb, std::size_t m) {
  const std::size_t k = comb.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (comb[pos] < m - k + pos) {
      ++comb[pos];
      for (std::size_t q = pos + 1; q < k; ++q) comb[q] = comb[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool DualPoint::operator<(const DualPoint& other) const {
  return std::lexicographical_compare(alpha.begin(), alpha.end(),
                                      other.alpha.begin(), other.alpha.end());
}

Rat ReducedProfit(const Instance& inst, std::size_t i, const DualPoint& a) {
  Rat r = inst.profits[i];
  for (std::size_t j = 0; j < inst.t; ++j) r -= a.alpha[j] * inst.weights[j][i];
  return sgn(r) > 0 ? r : Rat(0);
}

Rat FAlpha(const Instance& inst, const InterdictionVector& x,
           const DualPoint& a) {
  CheckDimensions(inst, x, a);
  Rat sum = 0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (!x[i]) sum += ReducedProfit(inst, i, a);
  }
  return sum;
}

Rat DualObjective(const Instance& inst, const InterdictionVector& x,
                  const DualPoint& a) {
  return CapacityTerm(inst, a) + FAlpha(inst, x, a);
}

CandidateSet CandidateAlphas1d(const Instance& inst) {
  if (inst.t != 1) {
    throw Error(ErrorCode::kDimensionMismatch,
                "one-dimensional candidates need t == 1");
  }
  std::vector<DualPoint> points;
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (sgn(inst.weights[0][i]) > 0) {
      points.push_back(DualPoint{{MakeRat(inst.profits[i], inst.weights[0][i])}});
    }
  }
  return Normalize(std::move(points), 1);
}

CandidateSet CandidateAlphasMulti(const Instance& inst) {
  const std::size_t t = inst.t;
  const std::size_t planes = inst.n + t;
  std::vector<DualPoint> points;
  std::vector<std::size_t> comb(t);
  for (std::size_t k = 0; k < t; ++k) comb[k] = k;
  do {
    RatMatrix a(t, std::vector<Rat>(t));
    std::vector<Rat> b(t);
    for (std::size_t r = 0; r < t; ++r) {
      const std::size_t h = comb[r];
      if (h < inst.n) {
        for (std::size_t j = 0; j < t; ++j) a[r][j] = inst.weights[j][h];
        b[r] = inst.profits[h];
      } else {
        a[r][h - inst.n] = 1;
      }
    }
    auto solution = SolveLinearSystem(std::move(a), std::move(b));
    if (!solution) continue;
    if (std::all_of(solution->begin(), solution->end(),
                    [](const Rat& v) { return sgn(v) >= 0; })) {
      points.push_back(DualPoint{std::move(*solution)});
    }
  } while (NextCombination(comb, planes));
  return Normalize(std::move(points), t);
}

CandidateSet CandidateAlphas(const Instance& inst) {
  return inst.t == 1 ? CandidateAlphas1d(inst) : CandidateAlphasMulti(inst);
}

GValue GExact(const Instance& inst, const DualPoint& a) {
  if (a.alpha.size() != inst.t) {
    throw Error(ErrorCode::kDimensionMismatch, "dual point length != t");
  }
  std::vector<Rat> reduced(inst.n);
  Rat total = 0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    reduced[i] = ReducedProfit(inst, i, a);
    total += reduced[i];
  }
  KnapsackAnswer best = KnapsackMaxBudget(reduced, inst.costs, inst.budget);
  return GValue{CapacityTerm(inst, a) + total - best.value,
                InterdictionVector(std::move(best.chosen), inst.costs)};
}

DualOptimum OptFExact(const Instance& inst, unsigned workers) {
  const CandidateSet candidates = CandidateAlphas(inst);
  std::vector<std::optional<GValue>> values(candidates.size());
  internal::ParallelFor(candidates.size(), workers, [&](std::size_t k) {
    values[k] = GExact(inst, candidates.points[k]);
  });
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k]->value < values[best]->value) best = k;
  }
  return DualOptimum{values[best]->value, values[best]->x,
                     candidates.points[best], best, candidates.size()};
}

Rat FExact(const Instance& inst, const InterdictionVector& x) {
  if (inst.t == 1) return FractionalKnapsack(inst, x).value;
  return FExact(inst, x, CandidateAlphasMulti(inst));
}

Rat FExact(const Instance& inst, const InterdictionVector& x,
           const CandidateSet& candidates) {
  if (inst.t == 1) return FractionalKnapsack(inst, x).value;
  std::optional<Rat> best;
  for (const auto& a : candidates.points) {
    Rat v = DualObjective(inst, x, a);
    if (!best || v < *best) best = std::move(v);
  }
  return *best;
}

}  // namespace kip
