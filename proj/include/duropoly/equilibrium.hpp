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

#ifndef DUROPOLY_EQUILIBRIUM_HPP
#define DUROPOLY_EQUILIBRIUM_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "duropoly/instance.hpp"
#include "duropoly/rational.hpp"
#include "duropoly/static_monopoly.hpp"

namespace duropoly {

// Dense (consumer, period) grid addressed 1-based: rows 1..N+1, columns
// 1..T+1. Row N+1 and column T+1 are the empty-game sentinels.
template <typename V>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t consumers, int periods, V fill = V{})
      : rows_(consumers + 1), cols_(static_cast<std::size_t>(periods) + 1), cells_(rows_ * cols_, fill) {}

  const V& at(std::size_t i, int t) const { return cells_.at(offset(i, t)); }
  V& at(std::size_t i, int t) { return cells_.at(offset(i, t)); }

  std::size_t consumers() const noexcept { return rows_ == 0 ? 0 : rows_ - 1; }
  int periods() const noexcept { return cols_ == 0 ? 0 : static_cast<int>(cols_) - 1; }

 private:
  std::size_t offset(std::size_t i, int t) const {
    if (i < 1 || i > rows_ || t < 1 || static_cast<std::size_t>(t) > cols_)
      throw std::out_of_range("Grid: (" + std::to_string(i) + ", " + std::to_string(t) + ") outside table");
    return (i - 1) * cols_ + static_cast<std::size_t>(t - 1);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<V> cells_;
};

// Backward-induction tables for the profit-maximizing strong-Markov
// equilibrium.
//   profit(i,t)  maximum revenue in G_i from period t; zero on sentinels
//   cutoff(i,t)  last consumer who buys in period t of G_i
//   price(i,t)   price announced in period t of G_i
//   threat(i,t)  price(i,t+1), what consumer i faces by waiting (t < T)
struct DpTables {
  Grid<Rational> profit;
  Grid<std::size_t> cutoff;
  Grid<Rational> price;

  std::size_t consumers() const noexcept { return profit.consumers(); }
  int periods() const noexcept { return profit.periods(); }

  const Rational& threat(std::size_t i, int t) const {
    if (t >= periods())
      throw std::invalid_argument("threat price is undefined in the final period (t=" + std::to_string(t) +
                                  ")");
    if (i < 1 || i > consumers()) throw std::out_of_range("threat: consumer index out of range");
    return price.at(i, t + 1);
  }
};

struct EquilibriumSolution {
  std::vector<Rational> prices;              // mu_t; repeats the last charged price after sell-out
  std::vector<std::size_t> buyers_per_period;  // x_t
  std::vector<std::size_t> cutoffs;          // j_t, cumulative last buyer after period t
  Rational profit;
  DpTables tables;

  int periods() const noexcept { return static_cast<int>(prices.size()); }
  // Consumers sold before period t starts (j_{t-1}, with j_0 = 0).
  std::size_t sold_before(int t) const { return t <= 1 ? 0 : cutoffs.at(static_cast<std::size_t>(t - 2)); }
};

inline DpTables build_tables(const Instance& inst) {
  const std::size_t n = inst.consumers();
  const int horizon = inst.periods();
  DpTables tab{Grid<Rational>(n, horizon), Grid<std::size_t>(n, horizon), Grid<Rational>(n, horizon)};

  // Final period: static monopoly price of each suffix. Every consumer whose
  // value reaches the price buys, so the cutoff runs to the end of the block
  // of equal values (only differs from y_i when the price is zero).
  for (std::size_t i = 1; i <= n; ++i) {
    StaticPrice sp = static_price(inst.suffix(i));
    std::size_t last = i - 1 + sp.index;
    while (last < n && inst.value(last + 1) >= sp.price) ++last;
    tab.profit.at(i, horizon) = sp.profit();
    tab.cutoff.at(i, horizon) = last;
    tab.price.at(i, horizon) = std::move(sp.price);
  }

  for (int t = horizon - 1; t >= 1; --t) {
    for (std::size_t i = 1; i <= n; ++i) {
      std::size_t best_j = i;
      Rational best = tab.price.at(i, t + 1) + tab.profit.at(i + 1, t + 1);
      for (std::size_t j = i + 1; j <= n; ++j) {
        const Rational& p = tab.price.at(j, t + 1);
        Rational value = p * static_cast<long long>(j - i + 1) + tab.profit.at(j + 1, t + 1);
        const auto cmp = value <=> best;
        // Highest revenue; then highest price; then the largest cutoff at
        // that price, since every consumer sharing the threat price buys.
        if (cmp > 0 || (cmp == 0 && p >= tab.price.at(best_j, t + 1))) {
          best = std::move(value);
          best_j = j;
        }
      }
      tab.profit.at(i, t) = std::move(best);
      tab.cutoff.at(i, t) = best_j;
      tab.price.at(i, t) = tab.price.at(best_j, t + 1);
    }
  }
  return tab;
}

inline EquilibriumSolution solve(const Instance& inst) {
  EquilibriumSolution sol;
  sol.tables = build_tables(inst);
  const std::size_t n = inst.consumers();
  std::size_t next = 1;
  Rational last_price;
  for (int t = 1; t <= inst.periods(); ++t) {
    if (next > n) {
      sol.prices.push_back(last_price);
      sol.buyers_per_period.push_back(0);
      sol.cutoffs.push_back(n);
      continue;
    }
    const std::size_t j = sol.tables.cutoff.at(next, t);
    last_price = sol.tables.price.at(next, t);
    sol.prices.push_back(last_price);
    sol.buyers_per_period.push_back(j - next + 1);
    sol.cutoffs.push_back(j);
    next = j + 1;
  }
  sol.profit = sol.tables.profit.at(1, 1);
  return sol;
}

inline Rational threat_price(const Instance& inst, std::size_t i, int t) {
  if (i < 1 || i > inst.consumers())
    throw std::out_of_range("threat_price: consumer " + std::to_string(i) + " outside 1.." +
                            std::to_string(inst.consumers()));
  if (t < 1 || t > inst.periods())
    throw std::out_of_range("threat_price: period " + std::to_string(t) + " outside 1.." +
                            std::to_string(inst.periods()));
  if (t == inst.periods())
    throw std::invalid_argument("threat_price: undefined in the final period");
  return build_tables(inst).threat(i, t);
}

// The game a seller who only observes sales counts believes is left with
// `remaining_count` consumers at the start of period t: the lowest
// remaining_count valuations with T-t+1 periods to go.
inline Instance reindexed_subgame(const Instance& inst, std::size_t remaining_count, int t) {
  if (remaining_count < 1 || remaining_count > inst.consumers())
    throw std::out_of_range("reindexed_subgame: remaining_count " + std::to_string(remaining_count) +
                            " outside 1.." + std::to_string(inst.consumers()));
  if (t < 1 || t > inst.periods())
    throw std::out_of_range("reindexed_subgame: period " + std::to_string(t) + " outside 1.." +
                            std::to_string(inst.periods()));
  auto tail = inst.suffix(inst.consumers() - remaining_count + 1);
  return make_instance({tail.begin(), tail.end()}, inst.periods() - t + 1);
}

}  // namespace duropoly

#endif  // DUROPOLY_EQUILIBRIUM_HPP
