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
#include "duropoly/pacman.hpp"
#include "oracles.hpp"

namespace duropoly {
namespace {

using Values = std::vector<Rational>;

Values values_of(const Instance& inst) { return {inst.valuations().begin(), inst.valuations().end()}; }

TEST(DistinctProfile, CountsLevels) {
  const auto prof = distinct_profile(make_instance({5, 9, 5, 1, 9, 9}, 2));
  EXPECT_EQ(prof.distinct(), 3U);
  EXPECT_EQ(prof.w(1), Rational(9));
  EXPECT_EQ(prof.n(1), 3);
  EXPECT_EQ(prof.w(3), Rational(1));
  EXPECT_EQ(prof.w(4), Rational(0));
  EXPECT_EQ(prof.n(4), 0);
}

TEST(PacmanCondition, KnownInstances) {
  const auto a = pacman_condition(make_instance({9, 3, 1}, 3));
  EXPECT_TRUE(a.eligible);
  EXPECT_FALSE(a.witness.has_value());

  const auto b = pacman_condition(make_instance({100, 85, 80, 50}, 2));
  EXPECT_FALSE(b.eligible);
  ASSERT_TRUE(b.witness.has_value());
  EXPECT_EQ(*b.witness, 1U);

  EXPECT_TRUE(pacman_condition(make_instance({4}, 1)).eligible);

  const auto too_short = pacman_condition(make_instance({9, 3, 1}, 2));
  EXPECT_FALSE(too_short.eligible);
  EXPECT_EQ(*too_short.witness, 3U);
}

TEST(PacmanCondition, FlagsTieDependentEligibility) {
  const auto tie = pacman_condition(make_instance({16, 8, 4}, 3));
  EXPECT_TRUE(tie.eligible);
  EXPECT_TRUE(tie.tie_dependent);
  EXPECT_FALSE(pacman_condition(make_instance({9, 3, 1}, 3)).tie_dependent);
}

TEST(SimulatePacman, KnownRuns) {
  const auto run = simulate_pacman(make_instance({9, 3, 1}, 3));
  EXPECT_EQ(run.revenue, Rational(13));
  EXPECT_EQ(run.prices, (Values{9, 3, 1}));
  const auto single = simulate_pacman(make_instance({4}, 1));
  EXPECT_EQ(single.revenue, Rational(4));
  EXPECT_EQ(single.prices, (Values{4}));
  EXPECT_EQ(simulate_pacman(make_instance({9, 3, 1}, 2)).revenue, Rational(12));
}

TEST(SimulatePacman, HarmonicValues) {
  Values values;
  for (long long i = 1; i <= 100; ++i) values.emplace_back(1, i);
  const auto inst = make_instance(values, 100);
  const Rational h100 = Rational::parse(
      "14466636279520351160221518043104131447711/2788815009188499086581352357412492142272");
  EXPECT_EQ(oracle::harmonic(100), h100);
  EXPECT_EQ(simulate_pacman(inst).revenue, h100);
  EXPECT_EQ(static_profit(inst.valuations()), Rational(1));
}

TEST(SimulatePacman, MatchesOracle) {
  std::mt19937_64 rng(111);
  for (int trial = 0; trial < 200; ++trial) {
    const auto values = oracle::random_values(rng, 1 + trial % 10, 20);
    const int periods = 1 + trial % 6;
    EXPECT_EQ(simulate_pacman(make_instance(values, periods)).revenue, oracle::pacman_revenue(values, periods));
  }
}

TEST(SubsetPriceProperty, KnownInstances) {
  EXPECT_TRUE(subset_price_property(make_instance({9, 3, 1}, 3)));
  EXPECT_FALSE(subset_price_property(make_instance({100, 85, 80, 50}, 2)));
  EXPECT_TRUE(subset_price_property(make_instance({2}, 1)));
  EXPECT_THROW(subset_price_property(make_instance(Values(16, 1), 1)), SizeGuardError);
}

TEST(SubsetPriceProperty, EquivalentToSuffixPricesMatchingValues) {
  std::mt19937_64 rng(222);
  for (int trial = 0; trial < 300; ++trial) {
    // Geometric-looking draws make the property hold often enough to matter.
    Values values;
    Rational v(std::uniform_int_distribution<long long>(1, 4)(rng));
    for (std::size_t k = 0; k < 1 + static_cast<std::size_t>(trial % 9); ++k) {
      values.push_back(v);
      v = v * Rational(std::uniform_int_distribution<long long>(1, 4)(rng));
    }
    const auto inst = make_instance(values, 1);
    const auto table = suffix_price_table(inst);
    bool suffix_prices_are_values = true;
    for (std::size_t i = 1; i <= inst.consumers(); ++i)
      suffix_prices_are_values = suffix_prices_are_values && table.p(i) == inst.value(i);
    EXPECT_EQ(subset_price_property(inst), suffix_prices_are_values) << "trial " << trial;
    EXPECT_EQ(subset_price_property(inst), oracle::subset_price_is_max(values_of(inst)));
  }
}

TEST(Pacman1Inequality, KnownInstances) {
  EXPECT_TRUE(pacman1_inequality(make_instance({9, 3, 1}, 3), 3));
  EXPECT_TRUE(pacman1_inequality(make_instance({5}, 1), 2));
  EXPECT_TRUE(pacman1_inequality(make_instance({16, 8, 4}, 3), 2));
  // Static price of {16, 8, 8, 2} is 8, so the hypothesis fails.
  EXPECT_THROW(pacman1_inequality(make_instance({16, 8, 8, 2}, 2), 2), std::invalid_argument);
  EXPECT_THROW(pacman1_inequality(make_instance({9, 3, 1}, 3), 1), std::invalid_argument);
}

TEST(Pacman1Inequality, HoldsWheneverHypothesisHolds) {
  std::mt19937_64 rng(333);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Values values;
    Rational v(1);
    for (std::size_t k = 0; k < 1 + static_cast<std::size_t>(trial % 7); ++k) {
      const long long copies = std::uniform_int_distribution<long long>(1, 2)(rng);
      for (long long c = 0; c < copies; ++c) values.push_back(v);
      v = v * Rational(std::uniform_int_distribution<long long>(2, 5)(rng));
    }
    const auto inst = make_instance(values, 1);
    if (!subset_price_property(inst)) continue;
    ++checked;
    for (long long beta = 2; beta <= 6; ++beta) EXPECT_TRUE(pacman1_inequality(inst, beta)) << "trial " << trial;
  }
  EXPECT_GT(checked, 50);
}

TEST(PacmanFirstPrice, HighestFirstPriceIsBest) {
  const auto prof = distinct_profile(make_instance({9, 3, 1}, 3));
  EXPECT_EQ(pacman_first_price_profit(prof, 3, 1), Rational(13));
  EXPECT_EQ(pacman_first_price_profit(prof, 3, 2), Rational(7));
  EXPECT_EQ(pacman_first_price_profit(prof, 3, 3), Rational(3));
}

TEST(PacmanExtraction, EligibleExtractsSurplusIneligibleDoesNot) {
  std::mt19937_64 rng(444);
  int eligible = 0;
  int ineligible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Values values;
    Rational v(std::uniform_int_distribution<long long>(1, 3)(rng));
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
    for (std::size_t k = 0; k < n; ++k) {
      values.push_back(v);
      v = v * Rational(std::uniform_int_distribution<long long>(1, 4)(rng));
    }
    const auto inst = make_instance(values, 1 + trial % 5);
    const auto cond = pacman_condition(inst);
    const Rational profit = solve(inst).profit;
    const Rational surplus = total_surplus(inst);
    if (cond.eligible) {
      ++eligible;
      EXPECT_EQ(profit, surplus) << "trial " << trial;
      EXPECT_EQ(simulate_pacman(inst).revenue, surplus);
    } else {
      ++ineligible;
      EXPECT_LT(profit, surplus) << "trial " << trial;
    }
  }
  EXPECT_GT(eligible, 40);
  EXPECT_GT(ineligible, 40);
}

}  // namespace
}  // namespace duropoly
