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

#ifndef DUROPOLY_BOUNDS_HPP
#define DUROPOLY_BOUNDS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "duropoly/equilibrium.hpp"
#include "duropoly/instance.hpp"
#include "duropoly/rational.hpp"
#include "duropoly/static_monopoly.hpp"

namespace duropoly {

// Profit benchmarks for one instance and the chain
//   static <= duropoly <= sum of suffix prices <= static + p_1 <= 2 * static.
struct BoundsReport {
  Rational static_profit;      // Pi^M
  Rational duropoly_profit;    // Pi^D
  Rational sum_suffix_prices;  // sum_i p_i
  Rational top_price;          // p_1
  Rational coase_profit;       // N * v_N
  Rational surplus;            // sum_i v_i
  Rational price_path_bound;   // max_m (y_m - m + 1) v(y_m) + sum_{i<m} p_i
  Rational ratio;              // Pi^D / Pi^M

  struct Verdicts {
    bool static_le_duropoly = false;
    bool duropoly_le_price_path_bound = false;
    bool duropoly_le_sum_prices = false;
    bool sum_prices_le_static_plus_top = false;
    bool static_plus_top_le_double_static = false;

    bool all() const noexcept {
      return static_le_duropoly && duropoly_le_price_path_bound && duropoly_le_sum_prices &&
             sum_prices_le_static_plus_top && static_plus_top_le_double_static;
    }
  } verdicts;

  std::string ratio_decimal() const { return ratio.to_decimal(6); }
};

inline Rational price_path_bound(const Instance& inst, const StaticPriceTable& table) {
  Rational best;
  Rational prefix;  // sum_{i<m} p_i
  for (std::size_t m = 1; m <= inst.consumers(); ++m) {
    const std::size_t y = table.y(m);
    Rational candidate = inst.value(y) * static_cast<long long>(y - m + 1) + prefix;
    if (m == 1 || candidate > best) best = std::move(candidate);
    prefix += table.p(m);
  }
  return best;
}

inline BoundsReport analyze(const Instance& inst, const EquilibriumSolution& sol, const StaticPriceTable& table) {
  BoundsReport r;
  r.static_profit = static_profit(inst.valuations());
  r.duropoly_profit = sol.profit;
  for (const auto& p : table.prices) r.sum_suffix_prices += p;
  r.top_price = table.p(1);
  r.coase_profit = inst.value(inst.consumers()) * static_cast<long long>(inst.consumers());
  r.surplus = total_surplus(inst);
  r.price_path_bound = price_path_bound(inst, table);
  r.ratio = r.duropoly_profit / r.static_profit;

  const Rational static_plus_top = r.static_profit + r.top_price;
  r.verdicts.static_le_duropoly = r.static_profit <= r.duropoly_profit;
  r.verdicts.duropoly_le_price_path_bound = r.duropoly_profit <= r.price_path_bound;
  r.verdicts.duropoly_le_sum_prices = r.duropoly_profit <= r.sum_suffix_prices;
  r.verdicts.sum_prices_le_static_plus_top = r.sum_suffix_prices <= static_plus_top;
  r.verdicts.static_plus_top_le_double_static = static_plus_top <= r.static_profit * 2;
  return r;
}

inline BoundsReport analyze(const Instance& inst) { return analyze(inst, solve(inst), suffix_price_table(inst)); }

// Two-period family whose duropoly/static ratio tends to 2: k consumers at
// v_H and n-k at v_H / (n-k+1).
inline Instance tight_example(long long n, long long k, const Rational& high_value) {
  if (k < 1 || k >= n) throw ValidationError("k", "requires 1 <= k < n (got n=" + std::to_string(n) +
                                                      ", k=" + std::to_string(k) + ")");
  if (high_value.sign() <= 0) throw ValidationError("v_H", "must be positive");
  const Rational low = high_value / Rational(n - k + 1);
  std::vector<Rational> values(static_cast<std::size_t>(n), low);
  std::fill_n(values.begin(), k, high_value);
  return make_instance(std::move(values), 2);
}

struct SuffixProfitBound {
  Rational static_profit;  // static monopoly profit of G_m
  Rational price_sum;      // sum_{j >= m} p_j
};

inline SuffixProfitBound suffix_profit_bound(const Instance& inst, std::size_t m) {
  if (m < 1 || m > inst.consumers())
    throw std::out_of_range("suffix_profit_bound: m=" + std::to_string(m) + " outside 1.." +
                            std::to_string(inst.consumers()));
  const auto table = suffix_price_table(inst);
  SuffixProfitBound b{static_profit(inst.suffix(m)), Rational(0)};
  for (std::size_t j = m; j <= inst.consumers(); ++j) b.price_sum += table.p(j);
  return b;
}

// First consumer who buys before the final period and pays more than the
// static monopoly price of the suffix game it starts, if any.
inline std::optional<std::size_t> payment_cap_violation(const Instance& inst, const EquilibriumSolution& sol,
                                                        const StaticPriceTable& table) {
  for (int t = 1; t < inst.periods(); ++t) {
    const auto& price = sol.prices[static_cast<std::size_t>(t - 1)];
    for (std::size_t i = sol.sold_before(t) + 1; i <= sol.cutoffs[static_cast<std::size_t>(t - 1)]; ++i)
      if (price > table.p(i)) return i;
  }
  return std::nullopt;
}

}  // namespace duropoly

#endif  // DUROPOLY_BOUNDS_HPP
