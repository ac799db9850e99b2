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

#ifndef KIP_INSTANCE_H_
#define KIP_INSTANCE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kip/rat.h"

namespace kip {

// A knapsack interdiction instance with t capacity constraints. Item i has a
// profit, an interdiction cost and a weight in every dimension; the leader
// spends at most `budget` on interdictions and the follower packs the rest
// subject to `capacities`.
struct Instance {
  std::size_t n = 0;
  std::size_t t = 1;
  std::vector<Int> profits;
  std::vector<Int> costs;
  // weights[j][i] is the weight of item i in dimension j.
  std::vector<std::vector<Int>> weights;
  Int budget = 0;
  std::vector<Int> capacities;

  // Throws kSchemaViolation on inconsistent lengths and kNegativeValue on any
  // negative entry.
  void Validate() const;

  Int TotalProfit() const;
  Int TotalCost() const;

  bool operator==(const Instance&) const = default;
};

// Indicator of interdicted items together with its cached cost.
class InterdictionVector {
 public:
  InterdictionVector() = default;
  InterdictionVector(std::vector<bool> bits, std::span<const Int> costs);

  static InterdictionVector None(std::size_t n);
  static InterdictionVector FromMask(unsigned long long mask, std::size_t n,
                                     std::span<const Int> costs);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<bool>& bits() const { return bits_; }
  const Int& cost() const { return cost_; }
  bool Feasible(const Int& budget) const { return cost_ <= budget; }
  std::size_t count() const;

  bool operator==(const InterdictionVector& other) const {
    return bits_ == other.bits_;
  }

 private:
  std::vector<bool> bits_;
  Int cost_ = 0;
};

// A solution of the follower's LP relaxation.
struct FracPacking {
  std::vector<Rat> y;
  Rat value = 0;
  // Indices with 0 < y_i < 1, ascending.
  std::vector<std::size_t> frac_support;
};

// Instance restricted to items that fit in every dimension.
struct Preprocessed {
  Instance instance;
  // Reduced index -> original index.
  std::vector<std::size_t> to_original;
  // Original index -> reduced index, empty for removed items.
  std::vector<std::optional<std::size_t>> to_reduced;

  // Maps an interdiction of the reduced instance back to original indices.
  // Removed items are never interdicted.
  InterdictionVector Lift(const InterdictionVector& reduced,
                          std::span<const Int> original_costs) const;
};

// Parses the JSON instance format. Field order is irrelevant; unknown keys,
// missing keys, length mismatches and negative values are rejected.
Instance ParseInstance(std::string_view text);
Instance LoadInstance(const std::string& path);

// Compact single-line JSON with keys in the order n, t, p, c, w, B, C.
// Values that do not fit in 64 bits are written as decimal strings.
std::string SerializeInstance(const Instance& inst);

// Removes every item whose weight exceeds the capacity in some dimension.
Preprocessed Preprocess(const Instance& inst);

}  // namespace kip

#endif  // KIP_INSTANCE_H_
