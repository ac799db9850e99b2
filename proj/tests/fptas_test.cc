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

#include <gtest/gtest.h>

#include <random>

#include "kip/error.h"
#include "kip/dual.h"
#include "kip/fptas.h"
#include "kip/nominal.h"
#include "kip/oracles.h"
#include "test_support.h"

namespace kip {
namespace {

using testing::MakeInstance;
using testing::RandomDualPoint;
using testing::RandomInstance;
using testing::RandomInterdiction;
using testing::SequentialRoundedFAlpha;
using testing::T1;
using testing::T2;

DualPoint A(std::vector<Rat> alpha) { return DualPoint{std::move(alpha)}; }

InterdictionVector Bits(const Instance& inst, std::vector<bool> bits) {
  return InterdictionVector(std::move(bits), inst.costs);
}

TEST(EpsSplitTest, Examples) {
  EXPECT_EQ(EpsSplit(Rat(3)), 1);
  for (const Rat eps : {Rat(1), Rat(1, 10), Rat(2), Rat(1, 1000), Rat(7, 3)}) {
    const Rat e = EpsSplit(eps);
    EXPECT_GT(e, 0);
    EXPECT_LE((1 + e) * (1 + e), 1 + eps);
    // Within 1e-6 of the square root.
    const Rat above = 1 + e + Rat(1, 1000000);
    EXPECT_GT(above * above, 1 + eps);
  }
  EXPECT_GE(EpsSplit(Rat(1)), Rat(2, 5));
  EXPECT_GE(EpsSplit(Rat(1, 10)), Rat(1, 21));
}

TEST(EpsSplitTest, TinyEpsStaysPositive) {
  const Rat eps(1, Int("1000000000000000"));
  const Rat e = EpsSplit(eps);
  EXPECT_GT(e, 0);
  EXPECT_LE((1 + e) * (1 + e), 1 + eps);
}

TEST(EpsSplitTest, RejectsNonPositive) {
  try {
    EpsSplit(Rat(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonpositiveEps);
  }
  EXPECT_THROW(EpsSplit(Rat(-1, 2)), Error);
}

TEST(ZGridTest, CoversTotalProfitExactly) {
  const Instance inst = T1();
  const ZGrid grid(inst, Rat(2, 5));
  EXPECT_EQ(grid.z(0), 1);
  EXPECT_EQ(grid.J(), 5u);
  EXPECT_GE(grid.z(grid.J()), 5);
  EXPECT_LT(grid.z(grid.J() - 1), 5);
  const ZPoint p = grid.point(3);
  EXPECT_EQ(p.z, Rat(343, 125));
  EXPECT_EQ(p.delta, Rat(2, 5) * p.z / 2);
  EXPECT_EQ(p.kmax, 7u);
}

TEST(ZGridTest, SingleStepWhenEpsIsLarge) {
  const ZGrid grid(MakeInstance({5}, {1}, {{1}}, 0, {1}), Rat(4));
  EXPECT_EQ(grid.J(), 1u);
  EXPECT_EQ(grid.z(1), 5);
}

TEST(UnitCostsTest, Examples) {
  EXPECT_EQ(UnitCosts(T1(), A({1}), Rat(1, 2)), (std::vector<Int>{2, 0}));
  EXPECT_EQ(UnitCosts(T1(), A({0}), Rat(1, 2)), (std::vector<Int>{6, 4}));
  EXPECT_EQ(UnitCosts(T1(), A({0}), Rat(1)), (std::vector<Int>{3, 2}));
  EXPECT_EQ(UnitCosts(T1(), A({0}), Rat(2, 3)), (std::vector<Int>{5, 3}));
}

TEST(DpMinBudgetTest, T1AtAlphaOne) {
  const ZPoint p = ZPoint::Make(2, Rat(2, 5), Rat(1));
  EXPECT_EQ(p.delta, Rat(1, 5));
  EXPECT_EQ(p.kmax, 7u);
  const std::vector<Int> units = UnitCosts(T1(), A({1}), p.delta);
  EXPECT_EQ(units, (std::vector<Int>{5, 0}));
  const DpTable table = DpMinBudget(units, T1().costs, p.kmax);
  for (std::uint64_t k = 0; k <= 7; ++k) {
    EXPECT_EQ(table.f(0, k), k < 5 ? 1u : 0u) << "k=" << k;
  }
  EXPECT_EQ(table.Traceback(0), (std::vector<bool>{true, false}));
  EXPECT_EQ(table.Traceback(5), (std::vector<bool>{false, false}));
  EXPECT_EQ(table.states(), 16u);
}

TEST(DpMinBudgetTest, DegenerateInputs) {
  const std::vector<Int> costs = {4, 2, 7};
  const DpTable free_keep = DpMinBudget(std::vector<Int>{0, 0, 0}, costs, 5);
  const std::vector<Int> zero_costs = {0, 0, 0};
  const DpTable free_cut = DpMinBudget(std::vector<Int>{3, 9, 1}, zero_costs, 5);
  for (std::uint64_t k = 0; k <= 5; ++k) {
    EXPECT_EQ(free_keep.f(0, k), 0u);
    EXPECT_EQ(free_cut.f(0, k), 0u);
  }
}

TEST(DpMinBudgetTest, MatchesEnumeration) {
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 9;
    std::vector<Int> units, costs;
    for (std::size_t i = 0; i < n; ++i) {
      units.emplace_back(static_cast<long>(rng() % 7));
      costs.emplace_back(static_cast<long>(rng() % 5));
    }
    const std::uint64_t kmax = rng() % 20;
    const DpTable table = DpMinBudget(units, costs, kmax);
    for (std::uint64_t k = 0; k <= kmax; ++k) {
      Int best = -1;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Int kept = 0, cost = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if ((mask >> i) & 1u) {
            cost += costs[i];
          } else {
            kept += units[i];
          }
        }
        if (kept <= Int(static_cast<unsigned long>(k)) && (best < 0 || cost < best)) best = cost;
      }
      EXPECT_EQ(Int(std::to_string(table.f(0, k))), best);
      if (k > 0) EXPECT_LE(table.f(0, k), table.f(0, k - 1));
      const std::vector<bool> bits = table.Traceback(k);
      Int kept = 0, cost = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (bits[i]) {
          cost += costs[i];
        } else {
          kept += units[i];
        }
      }
      EXPECT_EQ(cost, best);
      EXPECT_LE(kept, Int(static_cast<unsigned long>(k)));
    }
  }
}

TEST(GTildeTest, T1AtAlphaOne) {
  const ZPoint p = ZPoint::Make(2, Rat(2, 5), Rat(2));
  const auto g = GTildeAt(T1(), A({1}), p);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->value, 2);
  EXPECT_EQ(g->x, Bits(T1(), {true, false}));
}

TEST(GTildeTest, ZeroMassNeedsNoBudget) {
  const Instance inst = MakeInstance({3, 2}, {5, 5}, {{2, 2}}, 0, {2});
  const auto g = GTildeAt(inst, A({Rat(3, 2)}), ZPoint::Make(2, Rat(1, 2), Rat(1)));
  ASSERT_TRUE(g);
  EXPECT_EQ(g->value, 3);
  EXPECT_EQ(g->x, InterdictionVector::None(2));
}

TEST(GTildeTest, RejectsWhenZIsFarTooSmall) {
  EXPECT_FALSE(GTildeAt(T1(), A({0}), ZPoint::Make(2, Rat(2, 5), Rat(1, 100))));
}

TEST(RoundingTest, PerItemUnitsMatchSequentialRounding) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t t = 1 + rng() % 2;
    const Instance inst = RandomInstance(rng, 1 + rng() % 9, t);
    const InterdictionVector x = RandomInterdiction(rng, inst);
    const DualPoint a = RandomDualPoint(rng, t);
    const Rat delta = MakeRat(Int(static_cast<long>(1 + rng() % 50)), Int(static_cast<long>(1 + rng() % 13)));
    const std::vector<Int> units = UnitCosts(inst, a, delta);
    Rat mass = 0;
    for (std::size_t i = 0; i < inst.n; ++i) {
      if (!x[i]) mass += Rat(units[i]) * delta;
    }
    const Rat sequential = SequentialRoundedFAlpha(inst, x, a, delta);
    EXPECT_EQ(mass, sequential);
    const Rat exact = FAlpha(inst, x, a);
    EXPECT_LE(exact, sequential);
    EXPECT_LE(sequential, exact + Rat(inst.n) * delta);
  }
}

TEST(RoundingTest, GTildeSandwichesG) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t t = 1 + rng() % 2;
    const Instance inst = RandomInstance(rng, 1 + rng() % 8, t);
    if (sgn(inst.TotalProfit()) == 0) continue;
    const DualPoint a = RandomDualPoint(rng, t);
    const Rat eps = MakeRat(Int(static_cast<long>(1 + rng() % 10)), Int(static_cast<long>(1 + rng() % 10)));
    // A z large enough that nothing is pruned.
    const Rat z = Rat(inst.TotalProfit()) + 1;
    const ZPoint p = ZPoint::Make(inst.n, eps, z);
    const auto gt = GTildeAt(inst, a, p);
    ASSERT_TRUE(gt);
    const Rat g = GExact(inst, a).value;
    EXPECT_LE(g, gt->value);
    EXPECT_LE(gt->value, g + eps * z);
    EXPECT_LE(DualObjective(inst, gt->x, a), gt->value);
  }
}

// The full acceptance pattern over the grid, compared with the binary search.
void CheckMonotoneScan(const Instance& inst, const Rat& eps_internal) {
  const ZGrid grid(inst, eps_internal);
  const CandidateSet candidates = CandidateAlphas(inst);
  const Rat opt = OptFExact(inst).value;
  std::optional<std::size_t> first;
  for (std::size_t j = 0; j <= grid.J(); ++j) {
    const ZPoint p = grid.point(j);
    const AcceptResult r = AcceptTest(inst, p, candidates);
    if (first) {
      EXPECT_TRUE(r.pass) << "acceptance not upward closed at j=" << j;
    } else if (r.pass) {
      first = j;
    }
    if (p.z >= opt) EXPECT_TRUE(r.pass);
    if (p.z * (1 + eps_internal) < opt) EXPECT_FALSE(r.pass);
  }
  ASSERT_TRUE(first);
  const SearchResult found = SearchZ(inst, eps_internal, candidates);
  EXPECT_EQ(found.j, *first);
  EXPECT_LE(found.z_star, (1 + eps_internal) * opt);
  EXPECT_LE(FExact(inst, found.x), (1 + eps_internal) * (1 + eps_internal) * opt);
}

TEST(SearchZTest, AcceptanceIsMonotone) {
  CheckMonotoneScan(T1(), Rat(2, 5));
  CheckMonotoneScan(T2(), Rat(1, 3));
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t t = trial % 4 == 0 ? 2 : 1;
    const Instance inst = RandomInstance(rng, 1 + rng() % 7, t);
    if (OptFExact(inst).value == 0) continue;
    CheckMonotoneScan(inst, EpsSplit(MakeRat(Int(static_cast<long>(1 + rng() % 4)), Int(static_cast<long>(1 + rng() % 5)))));
  }
}

TEST(SearchZTest, OptimumSurvivesPruning) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t t = 1 + trial % 2;
    const Instance inst = RandomInstance(rng, 1 + rng() % 7, t);
    const DualOptimum best = OptFExact(inst);
    if (best.value == 0) continue;
    const Rat eps = Rat(1, 1 + static_cast<long>(rng() % 5));
    for (const Rat scale : {Rat(1), Rat(3, 2), Rat(4)}) {
      const ZPoint p = ZPoint::Make(inst.n, eps, best.value * scale);
      const Rat rounded = SequentialRoundedFAlpha(inst, best.x, best.alpha, p.delta);
      EXPECT_LE(rounded, (1 + eps) * p.z);
      const auto gt = GTildeAt(inst, best.alpha, p);
      ASSERT_TRUE(gt);
      EXPECT_LE(gt->value, DualObjective(inst, best.x, best.alpha) - FAlpha(inst, best.x, best.alpha) + rounded);
    }
  }
}

TEST(SearchZTest, Examples) {
  SearchResult r = SearchZ(T1(), Rat(2, 5));
  EXPECT_LE(FExact(T1(), r.x), Rat(98, 25));

  const Instance single = MakeInstance({5}, {1}, {{1}}, 0, {1});
  r = SearchZ(single, Rat(2, 5));
  EXPECT_EQ(r.x, InterdictionVector::None(1));
  EXPECT_EQ(FExact(single, r.x), 5);

  const Instance unit = MakeInstance({1}, {1}, {{1}}, 0, {1});
  r = SearchZ(unit, Rat(1, 2));
  EXPECT_EQ(r.j, 0u);
  EXPECT_EQ(r.z_star, 1);
}

TEST(ApproxOptFTest, Examples) {
  Solution s = ApproxOptF(T1(), Rat(1));
  EXPECT_LE(s.f_value, 4);
  EXPECT_GE(s.f_value, 2);
  EXPECT_EQ(s.guarantee, Guarantee::kOnePlusEpsOptF);

  const Instance zero = MakeInstance({0, 0}, {1, 1}, {{1, 1}}, 0, {1});
  s = ApproxOptF(zero, Rat(1));
  EXPECT_EQ(s.f_value, 0);
  EXPECT_EQ(s.x, InterdictionVector::None(2));
  EXPECT_EQ(s.guarantee, Guarantee::kExactOptF);

  const Instance covered = MakeInstance({4, 0, 2}, {2, 9, 1}, {{1, 1, 1}}, 3, {2});
  s = ApproxOptF(covered, Rat(1, 2));
  EXPECT_EQ(s.f_value, 0);
  EXPECT_EQ(s.x, InterdictionVector({true, false, true}, covered.costs));

  try {
    ApproxOptF(T1(), Rat(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonpositiveEps);
  }
}

TEST(ApproxOptFTest, ReportsOriginalIndices) {
  // Item 2 (weight 9) never fits and is removed before solving.
  const Instance inst = MakeInstance({3, 8, 2}, {1, 1, 1}, {{2, 9, 2}}, 1, {2});
  const Solution s = ApproxOptF(inst, Rat(1, 2));
  ASSERT_EQ(s.x.size(), 3u);
  EXPECT_FALSE(s.x[1]);
  EXPECT_LE(s.f_value, 3);
}

TEST(ApproxInterdictionTest, Examples) {
  Solution s = ApproxInterdiction(T1(), Rat(1, 2));
  EXPECT_EQ(s.guarantee, Guarantee::kTwoPlusEpsOptI);
  EXPECT_LE(IntegerKnapsackK(T1(), s.x).value, 5);

  s = ApproxInterdiction(T2(), Rat(1));
  EXPECT_EQ(s.guarantee, Guarantee::kOnePlusTPlusEpsOptI);
  EXPECT_LE(IntegerKnapsackK(T2(), s.x).value, 4 * BruteForceOptI(T2()).opt_i);

  const Instance empty = MakeInstance({}, {}, {{}}, 0, {0});
  s = ApproxInterdiction(empty, Rat(1));
  EXPECT_EQ(s.f_value, 0);
  EXPECT_EQ(s.x.size(), 0u);
}

TEST(ApproxOptFTest, GuaranteeEnvelopeAndStateBound) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t t = trial % 5 == 0 ? 2 : 1;
    const Instance inst = RandomInstance(rng, rng() % 9, t);
    const Rat opt = OptFExact(inst).value;
    for (const Rat eps : {Rat(2), Rat(1), Rat(1, 2), Rat(1, 10)}) {
      const Solution s = ApproxOptF(inst, eps);
      EXPECT_LE(s.f_value, (1 + eps) * opt);
      EXPECT_GE(s.f_value, opt);
      EXPECT_EQ(s.f_value, FExact(inst, s.x));
      EXPECT_LE(s.additive_cert, IntegerKnapsackK(inst, s.x).value);
      if (s.eps_internal) {
        const Int per_table = Int(inst.n) * (CeilDivRat(Rat(inst.n) * (1 + *s.eps_internal),
                                                        *s.eps_internal) + 1);
        EXPECT_LE(Int(std::to_string(s.stats.dp_states)),
                  per_table * Int(std::to_string(s.stats.dp_tables)));
      }
    }
  }
}

TEST(ApproxOptFTest, WorkerCountDoesNotChangeTheResult) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t t = 1 + trial % 2;
    const Instance inst = RandomInstance(rng, 1 + rng() % 9, t);
    const Solution a = ApproxInterdiction(inst, Rat(1, 2), 1);
    const Solution b = ApproxInterdiction(inst, Rat(1, 2), 4);
    EXPECT_EQ(a.x, b.x);
    EXPECT_EQ(a.f_value, b.f_value);
    EXPECT_EQ(a.z_star, b.z_star);
    EXPECT_EQ(a.alpha_star.has_value(), b.alpha_star.has_value());
    if (a.alpha_star) EXPECT_EQ(*a.alpha_star, *b.alpha_star);
  }
}

}  // namespace
}  // namespace kip
