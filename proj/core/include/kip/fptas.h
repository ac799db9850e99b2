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

#ifndef KIP_FPTAS_H_
#define KIP_FPTAS_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "kip/dual.h"
#include "kip/instance.h"
#include "kip/rat.h"
#include "kip/solution.h"

namespace kip {

// Approximation scheme for OPT_F by rounding reduced profits to multiples of
// delta = eps * z / n for a guessed optimum z, with a binary search over a
// geometric grid of guesses.

// A rational eps' > 0 with (1 + eps')^2 <= 1 + eps, within 1e-6 of
// sqrt(1 + eps) - 1 from below. Throws kNonpositiveEps for eps <= 0.
Rat EpsSplit(const Rat& eps);

// One guess z with its rounding unit and DP width.
struct ZPoint {
  Rat eps;
  Rat z;
  Rat delta;
  // Largest k with k * delta <= (1 + eps) z, i.e. floor(n (1 + eps) / eps).
  std::uint64_t kmax = 0;

  static ZPoint Make(std::size_t n, const Rat& eps, const Rat& z);
};

// Guesses z_j = (1 + eps)^j for j in [0, J], where J is the first index with
// z_J >= sum of profits. Requires n >= 1 and positive total profit. On a
// preprocessed instance every item fits alone, so a positive OPT_F is at
// least 1 and z_0 = 1 never overshoots it.
class ZGrid {
 public:
  ZGrid(const Instance& inst, Rat eps_internal);

  const Rat& eps() const { return eps_; }
  std::size_t J() const { return J_; }
  Rat z(std::size_t j) const;
  ZPoint point(std::size_t j) const;

 private:
  std::size_t n_;
  Rat eps_;
  std::size_t J_ = 0;
};

// u_i = ceil(max(0, p_i - w_i . alpha) / delta).
std::vector<Int> UnitCosts(const Instance& inst, const DualPoint& a,
                           const Rat& delta);

// f(i, k): minimum interdiction budget so that the rounded surviving mass of
// items i..n-1 is at most k units. Rows are 0-based, row n is the base case.
class DpTable {
 public:
  static constexpr std::uint64_t kInfinity =
      std::numeric_limits<std::uint64_t>::max();

  // Throws kValueTooLarge if the total cost does not fit in 63 bits.
  static DpTable Build(std::span<const Int> units, std::span<const Int> costs,
                       std::uint64_t kmax);

  std::size_t n() const { return n_; }
  std::uint64_t kmax() const { return kmax_; }
  std::uint64_t f(std::size_t i, std::uint64_t k) const {
    return f_[i * (kmax_ + 1) + k];
  }
  // Number of non-base states, n * (kmax + 1).
  std::uint64_t states() const { return n_ * (kmax_ + 1); }

  // Smallest k with f(0, k) <= budget, if any.
  std::optional<std::uint64_t> SmallestFeasible(const Int& budget) const;

  // Interdiction realizing f(0, k). Ties prefer interdicting.
  std::vector<bool> Traceback(std::uint64_t k) const;

 private:
  std::size_t n_ = 0;
  std::uint64_t kmax_ = 0;
  std::vector<std::uint64_t> f_;
  std::vector<bool> interdict_;
  std::vector<std::uint64_t> units_;
};

DpTable DpMinBudget(std::span<const Int> units, std::span<const Int> costs,
                    std::uint64_t kmax);

struct GTilde {
  Rat value;
  InterdictionVector x;
};

// Rounded dual value at one alpha, or nullopt (reject) when every interdiction
// within budget has rounded mass above (1 + eps) z.
std::optional<GTilde> GTildeAt(const Instance& inst, const DualPoint& a,
                               const ZPoint& point);

struct AcceptResult {
  bool pass = false;
  // The g~ minimizer over the candidates, ties by candidate index; absent
  // when every candidate rejected.
  std::optional<GTilde> best;
  std::optional<std::size_t> best_index;
  std::uint64_t dp_states = 0;
  std::uint64_t dp_tables = 0;
};

// Evaluates g~ at every candidate and accepts z when the minimum is at most
// (1 + eps) z.
AcceptResult AcceptTest(const Instance& inst, const ZPoint& point,
                        const CandidateSet& candidates, unsigned workers = 1);

struct SearchResult {
  std::size_t j = 0;
  Rat z_star;
  Rat value;
  InterdictionVector x;
  DualPoint alpha;
  SolveStats stats;
};

// Binary search for the smallest accepted grid index. Requires a
// preprocessed instance with positive total profit. Throws
// kInternalInvariantViolation if the top of the grid is rejected.
SearchResult SearchZ(const Instance& inst, const Rat& eps_internal,
                     const CandidateSet& candidates, unsigned workers = 1);
SearchResult SearchZ(const Instance& inst, const Rat& eps_internal,
                     unsigned workers = 1);

// (1 + eps)-approximation of OPT_F. Preprocesses internally and reports the
// interdiction in original indices together with its exact F value.
Solution ApproxOptF(const Instance& inst, const Rat& eps, unsigned workers = 1);

// (2 + eps)-approximation of OPT_I for t == 1, (1 + t + eps) for t >= 2,
// by running ApproxOptF with eps / (1 + t).
Solution ApproxInterdiction(const Instance& inst, const Rat& eps,
                            unsigned workers = 1);

}  // namespace kip

#endif  // KIP_FPTAS_H_
