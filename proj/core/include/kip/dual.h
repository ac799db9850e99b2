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

#ifndef KIP_DUAL_H_
#define KIP_DUAL_H_

#include <cstddef>
#include <vector>

#include "kip/instance.h"
#include "kip/rat.h"

namespace kip {

// Dual multipliers, one per capacity constraint. The multipliers of the
// interdiction constraints are eliminated in closed form and never stored.
struct DualPoint {
  std::vector<Rat> alpha;

  bool operator==(const DualPoint& other) const { return alpha == other.alpha; }
  // Lexicographic.
  bool operator<(const DualPoint& other) const;
};

// Sorted, duplicate-free, always contains the origin.
struct CandidateSet {
  std::vector<DualPoint> points;

  std::size_t size() const { return points.size(); }
};

// max(0, p_i - w_i . alpha).
Rat ReducedProfit(const Instance& inst, std::size_t i, const DualPoint& a);

// sum over non-interdicted i of max(0, p_i - w_i . alpha).
Rat FAlpha(const Instance& inst, const InterdictionVector& x,
           const DualPoint& a);

// alpha . C + FAlpha(x); an upper bound on F(x) for every alpha >= 0.
Rat DualObjective(const Instance& inst, const InterdictionVector& x,
                  const DualPoint& a);

// {0} together with every finite breakpoint p_i / w_i. Requires t == 1.
CandidateSet CandidateAlphas1d(const Instance& inst);

// Every non-negative point where t of the hyperplanes p_i = w_i . alpha and
// alpha_j = 0 meet. Singular systems are skipped.
CandidateSet CandidateAlphasMulti(const Instance& inst);

// Dispatches on t.
CandidateSet CandidateAlphas(const Instance& inst);

struct GValue {
  Rat value;
  InterdictionVector x;
};

// g(alpha) = alpha . C + min{FAlpha(x) : c . x <= B}, through a max-profit
// knapsack over the reduced profits: the selected items are interdicted.
GValue GExact(const Instance& inst, const DualPoint& a);

struct DualOptimum {
  Rat value;
  InterdictionVector x;
  DualPoint alpha;
  std::size_t candidate_index = 0;
  std::size_t candidates = 0;
};

// Exact OPT_F as the minimum of g over the candidate set; ties go to the
// first candidate in sorted order. `inst` must be preprocessed.
DualOptimum OptFExact(const Instance& inst, unsigned workers = 1);

// F(x): the greedy LP for t == 1, the candidate-set minimum of the dual
// objective otherwise.
Rat FExact(const Instance& inst, const InterdictionVector& x);
Rat FExact(const Instance& inst, const InterdictionVector& x,
           const CandidateSet& candidates);

}  // namespace kip

#endif  // KIP_DUAL_H_
