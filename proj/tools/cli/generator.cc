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

#include "cli/generator.h"

#include <limits>
#include <random>

#include "kip/error.h"

namespace kip::cli {
namespace {

std::uint64_t UniformInclusive(std::mt19937_64& rng, std::uint64_t hi) {
  // Uniform on [1, hi].
  const std::uint64_t range = hi;
  const std::uint64_t reject_from =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= reject_from);
  return 1 + v % range;
}

Int RoundHalfUp(const Rat& q) { return Floor(Rat(q + Rat(1, 2))); }

}  // namespace

Instance GenerateInstance(const GeneratorParams& params) {
  if (params.t == 0) {
    throw Error(ErrorCode::kInvalidParameter, "t must be at least 1");
  }
  if (params.pmax == 0 || params.wmax == 0 || params.cmax == 0) {
    throw Error(ErrorCode::kInvalidParameter, "maxima must be at least 1");
  }
  if (sgn(params.budget_frac) < 0 || sgn(params.cap_frac) < 0) {
    throw Error(ErrorCode::kInvalidParameter, "fractions must be non-negative");
  }
  std::mt19937_64 rng(params.seed);
  Instance inst;
  inst.n = params.n;
  inst.t = params.t;
  for (std::size_t i = 0; i < params.n; ++i) {
    inst.profits.emplace_back(static_cast<unsigned long>(UniformInclusive(rng, params.pmax)));
  }
  for (std::size_t i = 0; i < params.n; ++i) {
    inst.costs.emplace_back(static_cast<unsigned long>(UniformInclusive(rng, params.cmax)));
  }
  inst.weights.resize(params.t);
  for (std::size_t j = 0; j < params.t; ++j) {
    for (std::size_t i = 0; i < params.n; ++i) {
      inst.weights[j].emplace_back(static_cast<unsigned long>(UniformInclusive(rng, params.wmax)));
    }
  }
  inst.budget = RoundHalfUp(params.budget_frac * Rat(inst.TotalCost()));
  for (std::size_t j = 0; j < params.t; ++j) {
    Int row = 0;
    for (const auto& w : inst.weights[j]) row += w;
    inst.capacities.push_back(RoundHalfUp(params.cap_frac * Rat(row)));
  }
  inst.Validate();
  return inst;
}

}  // namespace kip::cli
