// Copyright 2026 The Duropoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "duropoly/equilibrium.hpp"
#include "duropoly/verifier.hpp"
#include "oracles.hpp"

namespace duropoly {
namespace {

using Values = std::vector<Rational>;

TEST(EnumerateSchedules, KnownValues) {
  const auto coase = enumerate_schedules(make_instance({100, 85, 80, 50}, 2));
  EXPECT_EQ(coase.max_profit, Rational(260));
  EXPECT_EQ(coase.best_schedule, (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(enumerate_schedules(make_instance({8}, 3)).max_profit, Rational(8));
  const auto small = enumerate_schedules(make_instance({80, 70, 45}, 2));
  EXPECT_EQ(small.max_profit, Rational(160));
  EXPECT_EQ(small.best_schedule, (std::vector<std::size_t>{1, 3}));
}

TEST(EnumerateSchedules, AgreesWithSolveAndOracle) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 150; ++trial) {
    const auto values = oracle::random_values(rng, 1 + trial % 8, trial % 2 ? 9 : 80);
    const auto inst = make_instance(values, 1 + trial % 4);
    const Rational found = enumerate_schedules(inst).max_profit;
    EXPECT_EQ(found, solve(inst).profit);
    EXPECT_EQ(found, oracle::equilibrium_profit(values, inst.periods()));
  }
}

TEST(EnumerateSchedules, RefusesLargeInstances) {
  EXPECT_THROW(enumerate_schedules(make_instance(Values(15, 1), 2)), SizeGuardError);
  EXPECT_THROW(best_with_skips(make_instance({3, 2}, 7)), SizeGuardError);
}

TEST(BestWithSkips, KnownValues) {
  const auto coase = make_instance({100, 85, 80, 50}, 2);
  EXPECT_LE(best_with_skips(coase), Rational(260));
  EXPECT_EQ(best_with_skips(make_instance({5}, 2)), Rational(5));
  EXPECT_EQ(best_with_skips(make_instance({9, 3, 1}, 3)), Rational(13));
  // Skipping the first period leaves the static game on everyone.
  EXPECT_EQ(solve(with_periods(coase, 1)).profit, Rational(240));
}

TEST(VerifySpne, SolverOutputHasNoDeviation) {
  const auto coase = make_instance({100, 85, 80, 50}, 2);
  EXPECT_TRUE(verify_spne(coase, solve(coase)).empty());
  const auto single = make_instance({4}, 1);
  EXPECT_TRUE(verify_spne(single, solve(single)).empty());
}

TEST(VerifySpne, OverpricingInFirstPeriodIsCaught) {
  const auto coase = make_instance({100, 85, 80, 50}, 2);
  auto sol = solve(coase);
  sol.prices[0] = Rational(100);
  const auto report = verify_spne(coase, sol);
  ASSERT_FALSE(report.empty());
  bool seller = false;
  for (const auto& d : report.deviations)
    if (!d.consumer) {
      seller = true;
      EXPECT_EQ(d.payoff_gain, Rational(20));
      EXPECT_EQ(d.subgame.start_period, 1);
    }
  EXPECT_TRUE(seller);

  const ProfilePlay play(coase, sol);
  const auto outcome = play.play(play.root());
  EXPECT_EQ(outcome.seller_revenue, Rational(240));
}

TEST(VerifySpne, RejectsMismatchedSolution) {
  const auto sol = solve(make_instance({3, 2}, 2));
  EXPECT_THROW(verify_spne(make_instance({3, 2}, 3), sol), std::invalid_argument);
}

TEST(VerifySpne, RandomInstancesAreEquilibria) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 120; ++trial) {
    const auto inst = make_instance(oracle::random_values(rng, 1 + trial % 7, trial % 3 ? 40 : 5), 1 + trial % 4);
    const auto report = verify_spne(inst, solve(inst));
    EXPECT_TRUE(report.empty()) << "trial " << trial << ": " << report.deviations.front().alternative_action;
  }
}

TEST(ProfilePlay, RealizedPathMatchesSchedule) {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = make_instance(oracle::random_values(rng, 1 + trial % 9, 30), 1 + trial % 5);
    const auto sol = solve(inst);
    const ProfilePlay play(inst, sol);
    const auto out = play.play(play.root());
    ASSERT_EQ(out.seller_revenue, sol.profit);
    for (std::size_t c = 1; c <= inst.consumers(); ++c) {
      int planned = 0;
      for (int t = 1; t <= inst.periods() && planned == 0; ++t)
        if (c <= sol.cutoffs[static_cast<std::size_t>(t - 1)]) planned = t;
      ASSERT_EQ(out.purchase_period[c - 1], planned) << "trial " << trial << " consumer " << c;
    }
  }
}

// Prices between breakpoints never beat the best breakpoint.
TEST(ProfilePlay, BreakpointPricesSuffice) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = make_instance(oracle::random_values(rng, 2 + trial % 5, 12), 1 + trial % 3);
    const auto sol = solve(inst);
    const ProfilePlay play(inst, sol);
    for (const auto& node : play.play(play.root()).path) {
      Rational best_candidate(-1);
      for (const auto& p : play.candidate_prices(node))
        best_candidate = std::max(best_candidate, play.play(node, p).seller_revenue);
      for (long long q = 0; q <= 4 * 13; ++q) {
        const Rational price(q, 4);
        EXPECT_LE(play.play(node, price).seller_revenue, best_candidate)
            << "trial " << trial << " period " << node.period << " price " << price;
      }
    }
  }
}

}  // namespace
}  // namespace duropoly
