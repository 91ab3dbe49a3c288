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

#ifndef DUROPOLY_VERIFIER_HPP
#define DUROPOLY_VERIFIER_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "duropoly/equilibrium.hpp"
#include "duropoly/instance.hpp"
#include "duropoly/rational.hpp"

namespace duropoly {

// Limits for the exhaustive routines below.
inline constexpr std::size_t kMaxOracleConsumers = 14;
inline constexpr int kMaxOraclePeriods = 6;

struct Deviation {
  std::optional<std::size_t> consumer;  // empty: the duropolist deviates
  SubgameRef subgame;
  std::string alternative_action;
  Rational payoff_gain;  // strictly positive
};

// Empty iff every checked unilateral deviation is unprofitable.
struct DeviationReport {
  std::vector<Deviation> deviations;
  bool empty() const noexcept { return deviations.empty(); }
};

struct ScheduleSearchResult {
  Rational max_profit;
  std::vector<std::size_t> best_schedule;  // cumulative cutoffs j_1..j_T
};

namespace detail {

inline void guard_oracle_size(const Instance& inst, const char* who) {
  if (inst.consumers() > kMaxOracleConsumers || inst.periods() > kMaxOraclePeriods)
    throw SizeGuardError(std::string(who) + ": exhaustive search limited to N <= " +
                         std::to_string(kMaxOracleConsumers) + " and T <= " +
                         std::to_string(kMaxOraclePeriods) + " (got N=" + std::to_string(inst.consumers()) +
                         ", T=" + std::to_string(inst.periods()) + ")");
}

// Brute-force schedule search. Every complete sales schedule of a subgame is
// walked explicitly; the last buyer of period t < T pays the first price of
// the best schedule of the subgame that starts with that consumer in period
// t+1. Final-period prices are drawn from the remaining values.
class ScheduleEnumerator {
 public:
  ScheduleEnumerator(const Instance& inst, bool allow_skips) : inst_(inst), allow_skips_(allow_skips) {}

  struct Best {
    Rational revenue;
    std::optional<Rational> first_price;  // empty when the schedule never sells
    std::vector<std::size_t> cutoffs;
  };

  const Best& best(std::size_t i, int t) {
    const auto key = std::make_pair(i, t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::optional<Best> found;
    std::vector<std::size_t> cutoffs;
    walk(i, t, Rational(0), std::nullopt, cutoffs, found);
    return memo_.emplace(key, std::move(*found)).first->second;
  }

 private:
  static bool better(const Rational& revenue, const std::optional<Rational>& price, const Best& incumbent) {
    if (revenue != incumbent.revenue) return revenue > incumbent.revenue;
    if (!incumbent.first_price) return price.has_value();
    return price && *price > *incumbent.first_price;
  }

  void finish(const Rational& revenue, const std::optional<Rational>& first, const std::vector<std::size_t>& cutoffs,
              std::optional<Best>& found) {
    if (!found || better(revenue, first, *found)) found = Best{revenue, first, cutoffs};
  }

  void walk(std::size_t i, int t, const Rational& revenue, const std::optional<Rational>& first,
            std::vector<std::size_t>& cutoffs, std::optional<Best>& found) {
    const std::size_t n = inst_.consumers();
    const int horizon = inst_.periods();
    if (t > horizon) {
      finish(revenue, first, cutoffs, found);
      return;
    }
    if (i > n) {
      std::vector<std::size_t> done = cutoffs;
      done.resize(static_cast<std::size_t>(horizon), n);
      finish(revenue, first, done, found);
      return;
    }
    if (allow_skips_) {
      cutoffs.push_back(i - 1);
      walk(i, t + 1, revenue, first, cutoffs, found);
      cutoffs.pop_back();
    }
    if (t == horizon) {
      std::set<Rational> tried;
      for (std::size_t j = i; j <= n; ++j) {
        const Rational& price = inst_.value(j);
        if (!tried.insert(price).second) continue;
        std::size_t last = i - 1;
        for (std::size_t c = i; c <= n; ++c)
          if (inst_.value(c) >= price) last = c;
        cutoffs.push_back(last);
        walk(last + 1, t + 1, revenue + price * static_cast<long long>(last - i + 1), first ? first : price,
             cutoffs, found);
        cutoffs.pop_back();
      }
      return;
    }
    for (std::size_t j = i; j <= n; ++j) {
      const Best& cont = best(j, t + 1);
      // The continuation always sells to j when values are positive; an
      // all-zero tail never sells and j then pays nothing.
      const Rational price = cont.first_price.value_or(Rational(0));
      cutoffs.push_back(j);
      walk(j + 1, t + 1, revenue + price * static_cast<long long>(j - i + 1), first ? first : price, cutoffs,
           found);
      cutoffs.pop_back();
    }
  }

  const Instance& inst_;
  bool allow_skips_;
  std::map<std::pair<std::size_t, int>, Best> memo_;
};

}  // namespace detail

// Maximum revenue over all sales schedules priced at threat prices, found by
// exhaustive enumeration. Independent of the dynamic program in solve().
inline ScheduleSearchResult enumerate_schedules(const Instance& inst) {
  detail::guard_oracle_size(inst, "enumerate_schedules");
  detail::ScheduleEnumerator search(inst, /*allow_skips=*/false);
  const auto& best = search.best(1, 1);
  return {best.revenue, best.cutoffs};
}

// As enumerate_schedules, but the seller may also leave any period empty
// while consumers remain.
inline Rational best_with_skips(const Instance& inst) {
  detail::guard_oracle_size(inst, "best_with_skips");
  detail::ScheduleEnumerator search(inst, /*allow_skips=*/true);
  return search.best(1, 1).revenue;
}

// Plays out the strategy profile described by an equilibrium solution.
//
// The seller only observes how many consumers have bought. In period t with
// k sales so far it charges the solution's price when k matches the
// solution's schedule and p(k+1, t) from freshly built tables otherwise.
// The consumer ranked r among those still in the market buys at price mu
// iff mu <= value and, before the last period, mu <= tau(k+r, t).
class ProfilePlay {
 public:
  struct Node {
    std::vector<bool> bought;  // by consumer, 0-based
    std::size_t sold = 0;
    int period = 1;
  };

  // Consumer `consumer` buys exactly in `period` (0 = never) whatever the price.
  struct Forced {
    std::size_t consumer = 0;
    int period = 0;
  };

  struct Outcome {
    Rational seller_revenue;
    std::vector<int> purchase_period;  // 0 = never, by consumer 0-based
    std::vector<Rational> paid;
    std::vector<Node> path;            // node at the start of each visited period
  };

  ProfilePlay(const Instance& inst, const EquilibriumSolution& sol)
      : inst_(inst), sol_(sol), tables_(build_tables(inst)) {}

  Node root() const { return Node{std::vector<bool>(inst_.consumers(), false), 0, 1}; }

  Rational seller_price(const Node& node) const {
    if (node.sold == sol_.sold_before(node.period)) return sol_.prices.at(static_cast<std::size_t>(node.period - 1));
    return tables_.price.at(node.sold + 1, node.period);
  }

  // Whether the remaining consumer ranked `rank` (1-based) accepts `price`.
  bool accepts(const Node& node, std::size_t consumer, std::size_t rank, const Rational& price) const {
    if (price > inst_.value(consumer)) return false;
    if (node.period == inst_.periods()) return true;
    return price <= tables_.threat(node.sold + rank, node.period);
  }

  Outcome play(Node node, const std::optional<Rational>& first_price = std::nullopt,
               const std::optional<Forced>& forced = std::nullopt) const {
    const std::size_t n = inst_.consumers();
    Outcome out{Rational(0), std::vector<int>(n, 0), std::vector<Rational>(n), {}};
    bool first = true;
    while (node.period <= inst_.periods() && node.sold < n) {
      out.path.push_back(node);
      const Rational price = first && first_price ? *first_price : seller_price(node);
      first = false;
      std::vector<std::size_t> buyers;
      std::size_t rank = 0;
      for (std::size_t c = 1; c <= n; ++c) {
        if (node.bought[c - 1]) continue;
        ++rank;
        bool buys = accepts(node, c, rank, price);
        if (forced && forced->consumer == c) buys = forced->period == node.period;
        if (buys) buyers.push_back(c);
      }
      for (std::size_t c : buyers) {
        node.bought[c - 1] = true;
        out.purchase_period[c - 1] = node.period;
        out.paid[c - 1] = price;
        out.seller_revenue += price;
      }
      node.sold += buyers.size();
      ++node.period;
    }
    return out;
  }

  Rational utility(const Outcome& out, std::size_t consumer) const {
    if (out.purchase_period[consumer - 1] == 0) return Rational(0);
    return inst_.value(consumer) - out.paid[consumer - 1];
  }

  // Threshold prices at which the set of period buyers can change at `node`.
  std::vector<Rational> candidate_prices(const Node& node) const {
    std::set<Rational> prices;
    std::size_t rank = 0;
    for (std::size_t c = 1; c <= inst_.consumers(); ++c) {
      if (node.bought[c - 1]) continue;
      ++rank;
      prices.insert(inst_.value(c));
      if (node.period < inst_.periods()) prices.insert(tables_.threat(node.sold + rank, node.period));
    }
    return {prices.rbegin(), prices.rend()};
  }

  const Instance& instance() const noexcept { return inst_; }

 private:
  const Instance& inst_;
  const EquilibriumSolution& sol_;
  DpTables tables_;
};

namespace detail {

inline std::string purchase_label(int period) {
  return period == 0 ? std::string("never buy") : "buy in period " + std::to_string(period);
}

inline void check_consumers_at(const ProfilePlay& play, const ProfilePlay::Node& node,
                               const std::optional<Rational>& price, DeviationReport& report) {
  const auto& inst = play.instance();
  const auto baseline = play.play(node, price);
  for (std::size_t c = 1; c <= inst.consumers(); ++c) {
    if (node.bought[c - 1]) continue;
    const Rational base = play.utility(baseline, c);
    for (int s = 0; s <= inst.periods(); ++s) {
      if (s != 0 && s < node.period) continue;
      if (s == baseline.purchase_period[c - 1]) continue;
      const auto alt = play.play(node, price, ProfilePlay::Forced{c, s});
      Rational gain = play.utility(alt, c) - base;
      if (gain.sign() > 0) {
        std::string action = purchase_label(s);
        if (price) action += " (after price " + price->to_string() + " in period " + std::to_string(node.period) + ")";
        report.deviations.push_back({c, SubgameRef{node.sold + 1, node.period}, std::move(action), std::move(gain)});
      }
    }
  }
}

}  // namespace detail

// Unilateral-deviation check of a solution's strategy profile.
//
// Consumers: every purchase time (or never) from the root, and again after
// every candidate price the seller could announce at each on-path node.
// Seller: every candidate price at each on-path node, with consumers
// answering by their cutoff rules.
inline DeviationReport verify_spne(const Instance& inst, const EquilibriumSolution& sol) {
  const auto horizon = static_cast<std::size_t>(inst.periods());
  if (sol.prices.size() != horizon || sol.cutoffs.size() != horizon || sol.buyers_per_period.size() != horizon)
    throw std::invalid_argument("verify_spne: solution has " + std::to_string(sol.prices.size()) +
                                " periods, instance has " + std::to_string(horizon));
  if (sol.tables.consumers() != inst.consumers() || sol.tables.periods() != inst.periods())
    throw std::invalid_argument("verify_spne: table dimensions do not match the instance");

  DeviationReport report;
  const ProfilePlay play(inst, sol);
  const auto on_path = play.play(play.root());
  detail::check_consumers_at(play, play.root(), std::nullopt, report);

  for (const auto& node : on_path.path) {
    const Rational planned = play.seller_price(node);
    const Rational planned_revenue = play.play(node).seller_revenue;
    for (const Rational& price : play.candidate_prices(node)) {
      if (price != planned) {
        Rational gain = play.play(node, price).seller_revenue - planned_revenue;
        if (gain.sign() > 0)
          report.deviations.push_back({std::nullopt, SubgameRef{node.sold + 1, node.period},
                                       "charge " + price.to_string() + " in period " + std::to_string(node.period),
                                       std::move(gain)});
      }
      detail::check_consumers_at(play, node, price, report);
    }
  }
  return report;
}

}  // namespace duropoly

#endif  // DUROPOLY_VERIFIER_HPP
