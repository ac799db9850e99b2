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

#include "kip/fptas.h"

#include <algorithm>
#include <map>

#include "kip/error.h"
#include "kip/parallel.h"

namespace kip {
namespace {

constexpr unsigned long kEpsSplitDenominator = 1'000'000;

Rat CapacityTerm(const Instance& inst, const DualPoint& a) {
  Rat sum = 0;
  for (std::size_t j = 0; j < inst.t; ++j) sum += a.alpha[j] * inst.capacities[j];
  return sum;
}

bool IsZeroOptimum(const Instance& inst) {
  Int needed = 0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (sgn(inst.profits[i]) > 0) needed += inst.costs[i];
  }
  return needed <= inst.budget;
}

Rat LargestSurvivingProfit(const Instance& inst, const InterdictionVector& x) {
  Int best = 0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (!x[i] && inst.profits[i] > best) best = inst.profits[i];
  }
  return Rat(best);
}

}  // namespace

std::string_view GuaranteeName(Guarantee g) {
  switch (g) {
    case Guarantee::kExactOptF:
      return "exact-opt-f";
    case Guarantee::kOnePlusEpsOptF:
      return "1+eps-of-opt-f";
    case Guarantee::kTwoPlusEpsOptI:
      return "2+eps-of-opt-i";
    case Guarantee::kOnePlusTPlusEpsOptI:
      return "1+t+eps-of-opt-i";
  }
  return "unknown";
}

Rat EpsSplit(const Rat& eps) {
  if (sgn(eps) <= 0) {
    throw Error(ErrorCode::kNonpositiveEps, "eps must be positive");
  }
  // eps' = (isqrt(D^2 (1 + eps)) - D) / D, refining D until positive.
  Int den = kEpsSplitDenominator;
  for (;;) {
    Int root;
    const Int radicand = Floor(Rat(Rat(den * den) * (1 + eps)));
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    if (root > den) return MakeRat(Int(root - den), den);
    den *= kEpsSplitDenominator;
  }
}

ZPoint ZPoint::Make(std::size_t n, const Rat& eps, const Rat& z) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidParameter, "rounding needs n >= 1");
  }
  if (sgn(eps) <= 0 || sgn(z) <= 0) {
    throw Error(ErrorCode::kInvalidParameter, "eps and z must be positive");
  }
  ZPoint p;
  p.eps = eps;
  p.z = z;
  p.delta = eps * z / Rat(n);
  const Int kmax = FloorDivRat(Rat((1 + eps) * z), p.delta);
  p.kmax = *ToUint64(kmax);
  return p;
}

ZGrid::ZGrid(const Instance& inst, Rat eps_internal)
    : n_(inst.n), eps_(std::move(eps_internal)) {
  if (sgn(eps_) <= 0) {
    throw Error(ErrorCode::kNonpositiveEps, "grid ratio must be positive");
  }
  const Rat total(inst.TotalProfit());
  if (n_ == 0 || sgn(total) <= 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "grid needs n >= 1 and positive total profit");
  }
  const Rat ratio = 1 + eps_;
  Rat z = 1;
  while (z < total) {
    z *= ratio;
    ++J_;
  }
}

Rat ZGrid::z(std::size_t j) const { return RatPow(1 + eps_, j); }

ZPoint ZGrid::point(std::size_t j) const { return ZPoint::Make(n_, eps_, z(j)); }

std::vector<Int> UnitCosts(const Instance& inst, const DualPoint& a,
                           const Rat& delta) {
  std::vector<Int> units(inst.n);
  for (std::size_t i = 0; i < inst.n; ++i) {
    units[i] = CeilDivRat(ReducedProfit(inst, i, a), delta);
  }
  return units;
}

DpTable DpTable::Build(std::span<const Int> units, std::span<const Int> costs,
                       std::uint64_t kmax) {
  if (units.size() != costs.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "units and costs differ");
  }
  Int total = 0;
  for (const auto& c : costs) total += c;
  if (mpz_sizeinbase(total.get_mpz_t(), 2) > 62) {
    throw Error(ErrorCode::kValueTooLarge,
                "total interdiction cost exceeds the DP range");
  }
  DpTable table;
  table.n_ = units.size();
  table.kmax_ = kmax;
  const std::uint64_t width = kmax + 1;
  table.f_.assign((table.n_ + 1) * width, 0);
  table.interdict_.assign(table.n_ * width, false);
  table.units_.assign(table.n_, 0);
  for (std::size_t i = table.n_; i-- > 0;) {
    const std::uint64_t cost = *ToUint64(costs[i]);
    // Units beyond kmax can never be kept.
    const std::uint64_t unit =
        units[i] > Int(std::to_string(kmax), 10) ? width : *ToUint64(units[i]);
    table.units_[i] = unit;
    const std::uint64_t* next = &table.f_[(i + 1) * width];
    std::uint64_t* row = &table.f_[i * width];
    for (std::uint64_t k = 0; k < width; ++k) {
      const std::uint64_t interdict = cost + next[k];
      const std::uint64_t keep = k >= unit ? next[k - unit] : kInfinity;
      if (interdict <= keep) {
        row[k] = interdict;
        table.interdict_[i * width + k] = true;
      } else {
        row[k] = keep;
      }
    }
  }
  return table;
}

std::optional<std::uint64_t> DpTable::SmallestFeasible(const Int& budget) const {
  for (std::uint64_t k = 0; k <= kmax_; ++k) {
    if (Int(std::to_string(f(0, k)), 10) <= budget) return k;
  }
  return std::nullopt;
}

std::vector<bool> DpTable::Traceback(std::uint64_t k) const {
  const std::uint64_t width = kmax_ + 1;
  std::vector<bool> bits(n_, false);
  for (std::size_t i = 0; i < n_; ++i) {
    if (interdict_[i * width + k]) {
      bits[i] = true;
    } else {
      k -= units_[i];
    }
  }
  return bits;
}

DpTable DpMinBudget(std::span<const Int> units, std::span<const Int> costs,
                    std::uint64_t kmax) {
  return DpTable::Build(units, costs, kmax);
}

}  // namespace kip

namespace kip {

std::optional<GTilde> GTildeAt(const Instance& inst, const DualPoint& a,
                               const ZPoint& point) {
  if (a.alpha.size() != inst.t) {
    throw Error(ErrorCode::kDimensionMismatch, "dual point length != t");
  }
  const std::vector<Int> units = UnitCosts(inst, a, point.delta);
  const DpTable table = DpTable::Build(units, inst.costs, point.kmax);
  const auto k = table.SmallestFeasible(inst.budget);
  if (!k) return std::nullopt;
  return GTilde{CapacityTerm(inst, a) + Rat(*k) * point.delta,
                InterdictionVector(table.Traceback(*k), inst.costs)};
}

AcceptResult AcceptTest(const Instance& inst, const ZPoint& point,
                        const CandidateSet& candidates, unsigned workers) {
  std::vector<std::optional<GTilde>> values(candidates.size());
  internal::ParallelFor(candidates.size(), workers, [&](std::size_t k) {
    values[k] = GTildeAt(inst, candidates.points[k], point);
  });
  AcceptResult result;
  result.dp_tables = candidates.size();
  result.dp_states = candidates.size() * inst.n * (point.kmax + 1);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!values[k]) continue;
    if (!result.best || values[k]->value < result.best->value) {
      result.best = std::move(values[k]);
      result.best_index = k;
    }
  }
  result.pass = result.best && result.best->value <= (1 + point.eps) * point.z;
  return result;
}

SearchResult SearchZ(const Instance& inst, const Rat& eps_internal,
                     const CandidateSet& candidates, unsigned workers) {
  const ZGrid grid(inst, eps_internal);
  SearchResult out;
  out.stats.candidates = candidates.size();
  out.stats.grid_size = grid.J() + 1;

  std::map<std::size_t, AcceptResult> seen;
  auto evaluate = [&](std::size_t j) -> const AcceptResult& {
    auto it = seen.find(j);
    if (it != seen.end()) return it->second;
    AcceptResult r = AcceptTest(inst, grid.point(j), candidates, workers);
    out.stats.dp_states += r.dp_states;
    out.stats.dp_tables += r.dp_tables;
    ++out.stats.grid_evaluations;
    return seen.emplace(j, std::move(r)).first->second;
  };

  if (!evaluate(grid.J()).pass) {
    throw Error(ErrorCode::kInternalInvariantViolation,
                "the largest grid point was rejected");
  }
  std::size_t lo = 0;
  std::size_t hi = grid.J();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (evaluate(mid).pass) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const AcceptResult& accepted = evaluate(hi);
  out.j = hi;
  out.z_star = grid.z(hi);
  out.value = accepted.best->value;
  out.x = accepted.best->x;
  out.alpha = candidates.points[*accepted.best_index];
  return out;
}

SearchResult SearchZ(const Instance& inst, const Rat& eps_internal,
                     unsigned workers) {
  return SearchZ(inst, eps_internal, CandidateAlphas(inst), workers);
}

Solution ApproxOptF(const Instance& inst, const Rat& eps, unsigned workers) {
  if (sgn(eps) <= 0) {
    throw Error(ErrorCode::kNonpositiveEps, "eps must be positive");
  }
  inst.Validate();
  const Preprocessed pre = Preprocess(inst);
  const Instance& reduced = pre.instance;

  Solution solution;
  solution.eps = eps;
  InterdictionVector x;
  if (IsZeroOptimum(reduced)) {
    std::vector<bool> bits(reduced.n);
    for (std::size_t i = 0; i < reduced.n; ++i) {
      bits[i] = sgn(reduced.profits[i]) > 0;
    }
    x = InterdictionVector(std::move(bits), reduced.costs);
    solution.guarantee = Guarantee::kExactOptF;
  } else {
    const Rat eps_internal = EpsSplit(eps);
    SearchResult found = SearchZ(reduced, eps_internal, workers);
    x = std::move(found.x);
    solution.guarantee = Guarantee::kOnePlusEpsOptF;
    solution.eps_internal = eps_internal;
    solution.z_star = std::move(found.z_star);
    solution.alpha_star = std::move(found.alpha);
    solution.stats = found.stats;
  }
  solution.f_value = FExact(reduced, x);
  solution.additive_cert = solution.f_value - LargestSurvivingProfit(reduced, x);
  solution.x = pre.Lift(x, inst.costs);
  return solution;
}

Solution ApproxInterdiction(const Instance& inst, const Rat& eps,
                            unsigned workers) {
  if (sgn(eps) <= 0) {
    throw Error(ErrorCode::kNonpositiveEps, "eps must be positive");
  }
  Solution solution = ApproxOptF(inst, eps / Rat(1 + inst.t), workers);
  solution.eps = eps;
  solution.guarantee = inst.t == 1 ? Guarantee::kTwoPlusEpsOptI
                                   : Guarantee::kOnePlusTPlusEpsOptI;
  return solution;
}

}  // namespace kip
