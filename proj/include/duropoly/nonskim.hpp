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

#ifndef DUROPOLY_NONSKIM_HPP
#define DUROPOLY_NONSKIM_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "duropoly/instance.hpp"
#include "duropoly/pacman.hpp"
#include "duropoly/rational.hpp"
#include "duropoly/static_monopoly.hpp"
#include "duropoly/verifier.hpp"

namespace duropoly {

// Explicit two-period profile. Consumer i (1-based, sorted order) buys in
// period 1 iff mu1 <= thresholds[i-1]. Period 2 is fixed: the seller charges
// the static monopoly price of whoever is left and they buy iff mu2 <= value.
struct StrategyProfile2P {
  std::vector<Rational> thresholds;
  Rational mu1;
  friend bool operator==(const StrategyProfile2P&, const StrategyProfile2P&) = default;
};

struct TwoPeriodOutcome {
  std::vector<bool> buys_first;   // by consumer, 0-based
  std::vector<bool> buys_second;
  std::optional<Rational> mu2;    // empty when everyone bought in period 1
  Rational revenue;
};

// Consumers v (buys in period 1) and w (waits) with w > v.
struct SwapPair {
  std::size_t v_consumer = 0;
  std::size_t w_consumer = 0;
  Rational v;
  Rational w;
};

// (w, v, mu2(E^v), mu2(S^w), mu1(E), mu1(S), mu2(E), mu2(S)).
struct SwapChain {
  Rational w, v, mu2_ev, mu2_sw, mu1_e, mu1_s, mu2_e, mu2_s;
  std::vector<Rational> as_vector() const { return {w, v, mu2_ev, mu2_sw, mu1_e, mu1_s, mu2_e, mu2_s}; }
};

class NotAnEquilibrium : public std::invalid_argument {
 public:
  explicit NotAnEquilibrium(DeviationReport report)
      : std::invalid_argument("profile is not an equilibrium (" + std::to_string(report.deviations.size()) +
                              " profitable deviation(s))"),
        report_(std::move(report)) {}
  const DeviationReport& report() const noexcept { return report_; }

 private:
  DeviationReport report_;
};

namespace detail {

inline void require_two_periods(const Instance& inst, const StrategyProfile2P& prof, const char* who) {
  if (inst.periods() != 2)
    throw std::invalid_argument(std::string(who) + ": only defined for T = 2 (got T=" +
                                std::to_string(inst.periods()) + ")");
  if (prof.thresholds.size() != inst.consumers())
    throw std::invalid_argument(std::string(who) + ": profile has " + std::to_string(prof.thresholds.size()) +
                                " thresholds for " + std::to_string(inst.consumers()) + " consumers");
}

// Static price of the consumers flagged in `members`; empty if none.
inline std::optional<StaticPrice> price_of(const Instance& inst, const std::vector<bool>& members) {
  std::vector<Rational> values;
  for (std::size_t c = 0; c < members.size(); ++c)
    if (members[c]) values.push_back(inst.valuations()[c]);
  if (values.empty()) return std::nullopt;
  return static_price(values);
}

inline Rational max0(const Rational& r) { return r.sign() < 0 ? Rational(0) : r; }

}  // namespace detail

inline TwoPeriodOutcome play_profile(const Instance& inst, const StrategyProfile2P& prof) {
  detail::require_two_periods(inst, prof, "play_profile");
  const std::size_t n = inst.consumers();
  TwoPeriodOutcome out{std::vector<bool>(n), std::vector<bool>(n), std::nullopt, Rational(0)};
  std::vector<bool> remaining(n);
  for (std::size_t c = 0; c < n; ++c) {
    out.buys_first[c] = prof.mu1 <= prof.thresholds[c];
    remaining[c] = !out.buys_first[c];
    if (out.buys_first[c]) out.revenue += prof.mu1;
  }
  if (auto sp = detail::price_of(inst, remaining)) {
    out.mu2 = sp->price;
    for (std::size_t c = 0; c < n; ++c)
      if (remaining[c] && inst.valuations()[c] >= sp->price) {
        out.buys_second[c] = true;
        out.revenue += sp->price;
      }
  }
  return out;
}

inline std::pair<Instance, StrategyProfile2P> builtin_nonskim_example() {
  auto inst = make_instance({80, 70, 45}, 2);
  return {std::move(inst), StrategyProfile2P{{45, 70, 45}, 70}};
}

// Checks each consumer's opposite period-1 decision against the period-2
// price it would induce, and the seller's period-1 price against every
// breakpoint where the set of period-1 buyers changes.
inline DeviationReport verify_profile(const Instance& inst, const StrategyProfile2P& prof) {
  detail::require_two_periods(inst, prof, "verify_profile");
  const std::size_t n = inst.consumers();
  const auto out = play_profile(inst, prof);
  DeviationReport report;
  const SubgameRef root{1, 1};

  for (std::size_t c = 0; c < n; ++c) {
    const Rational& value = inst.valuations()[c];
    Rational current, alternative;
    std::string action;
    if (out.buys_first[c]) {
      current = value - prof.mu1;
      std::vector<bool> waiting(n);
      for (std::size_t d = 0; d < n; ++d) waiting[d] = !out.buys_first[d] || d == c;
      alternative = detail::max0(value - detail::price_of(inst, waiting)->price);
      action = "wait for period 2";
    } else {
      current = detail::max0(value - *out.mu2);
      alternative = value - prof.mu1;
      action = "buy in period 1 at " + prof.mu1.to_string();
    }
    Rational gain = alternative - current;
    if (gain.sign() > 0) report.deviations.push_back({c + 1, root, std::move(action), std::move(gain)});
  }

  auto revenue_at = [&](const Rational& mu1) {
    StrategyProfile2P alt = prof;
    alt.mu1 = mu1;
    return play_profile(inst, alt).revenue;
  };
  std::set<Rational> candidates(prof.thresholds.begin(), prof.thresholds.end());
  candidates.insert(inst.valuations().begin(), inst.valuations().end());
  for (const Rational& mu : candidates) {
    if (mu == prof.mu1 || mu.sign() < 0) continue;
    Rational gain = revenue_at(mu) - out.revenue;
    if (gain.sign() > 0)
      report.deviations.push_back({std::nullopt, root, "charge " + mu.to_string() + " in period 1", std::move(gain)});
  }
  // Any price above every threshold: nobody buys early.
  const Rational above = *candidates.rbegin() + Rational(1);
  Rational gain = revenue_at(above) - out.revenue;
  if (gain.sign() > 0)
    report.deviations.push_back({std::nullopt, root, "charge above every threshold in period 1", std::move(gain)});
  return report;
}

inline std::optional<SwapPair> find_swap_pair(const Instance& inst, const StrategyProfile2P& prof) {
  const auto out = play_profile(inst, prof);
  const std::size_t n = inst.consumers();
  std::optional<std::size_t> w;
  for (std::size_t c = 0; c < n && !w; ++c)
    if (!out.buys_first[c]) w = c;
  if (!w) return std::nullopt;
  std::optional<std::size_t> v;
  for (std::size_t c = 0; c < n; ++c)
    if (out.buys_first[c] && inst.valuations()[c] < inst.valuations()[*w]) v = c;
  if (!v) return std::nullopt;
  return SwapPair{*v + 1, *w + 1, inst.valuations()[*v], inst.valuations()[*w]};
}

// Outcome-level skimming: no consumer buys in period 1 while someone with a
// strictly higher value waits.
inline bool is_skimming(const Instance& inst, const StrategyProfile2P& prof) {
  detail::require_two_periods(inst, prof, "is_skimming");
  return !find_swap_pair(inst, prof).has_value();
}

inline StrategyProfile2P swap_to_skimming(const Instance& inst, const StrategyProfile2P& prof) {
  detail::require_two_periods(inst, prof, "swap_to_skimming");
  if (auto report = verify_profile(inst, prof); !report.empty()) throw NotAnEquilibrium(std::move(report));
  StrategyProfile2P current = prof;
  const std::size_t limit = inst.consumers() * inst.consumers();
  for (std::size_t step = 0; step <= limit; ++step) {
    const auto pair = find_swap_pair(inst, current);
    if (!pair) return current;
    std::swap(current.thresholds[pair->v_consumer - 1], current.thresholds[pair->w_consumer - 1]);
  }
  throw std::logic_error("swap_to_skimming: swapping did not terminate");
}

inline SwapChain check_swap_chain(const Instance& inst, const StrategyProfile2P& prof) {
  detail::require_two_periods(inst, prof, "check_swap_chain");
  const auto pair = find_swap_pair(inst, prof);
  if (!pair) throw std::invalid_argument("check_swap_chain: no swap pair (profile already skims)");
  const auto out = play_profile(inst, prof);
  const std::size_t n = inst.consumers();
  const std::size_t v = pair->v_consumer - 1;
  const std::size_t w = pair->w_consumer - 1;

  std::vector<bool> e(n), s(n);
  for (std::size_t c = 0; c < n; ++c) e[c] = !out.buys_first[c];
  s = e;
  s[w] = false;
  s[v] = true;
  auto with = [](std::vector<bool> set, std::size_t c) {
    set[c] = true;
    return set;
  };
  auto mu2 = [&](const std::vector<bool>& set) { return detail::price_of(inst, set)->price; };
  return SwapChain{pair->w, pair->v, mu2(with(e, v)), mu2(with(s, w)), prof.mu1, prof.mu1, mu2(e), mu2(s)};
}

inline constexpr std::size_t kMaxProfileSearchConsumers = 6;

struct ProfileSearchResult {
  std::size_t profiles_checked = 0;
  std::size_t equilibria = 0;
  std::optional<Rational> max_revenue;
  std::optional<StrategyProfile2P> best;
};

namespace detail {

// Threshold profiles with every price drawn from the distinct values, where
// all comparisons reduce to ranks (0 = highest value).
class ThresholdGame {
 public:
  explicit ThresholdGame(const Instance& inst) : inst_(inst), prof_(distinct_profile(inst)) {
    const std::size_t n = inst.consumers();
    full_ = (std::uint32_t{1} << n) - 1;
    for (const auto& v : inst.valuations()) value_rank_.push_back(rank_of(v));
    price_rank_.assign(full_ + 1, 0);
    profit_.assign(full_ + 1, Rational(0));
    for (std::uint32_t mask = 1; mask <= full_; ++mask) {
      std::vector<bool> members(n);
      for (std::size_t c = 0; c < n; ++c) members[c] = (mask >> c) & 1U;
      const auto sp = *price_of(inst, members);
      price_rank_[mask] = rank_of(sp.price);
      profit_[mask] = sp.profit();
    }
  }

  std::size_t levels() const noexcept { return prof_.distinct(); }
  const Rational& price(std::size_t rank) const { return prof_.values[rank]; }

  std::uint32_t first_buyers(const std::vector<std::size_t>& thresholds, std::size_t mu) const {
    std::uint32_t b = 0;
    for (std::size_t c = 0; c < thresholds.size(); ++c)
      if (mu >= thresholds[c]) b |= std::uint32_t{1} << c;
    return b;
  }

  Rational revenue(const std::vector<std::size_t>& thresholds, std::size_t mu) const {
    const std::uint32_t b = first_buyers(thresholds, mu);
    return price(mu) * static_cast<long long>(std::popcount(b)) + profit_[full_ & ~b];
  }

  bool is_equilibrium(const std::vector<std::size_t>& thresholds, std::size_t mu) const {
    const Rational chosen = revenue(thresholds, mu);
    if (profit_[full_] > chosen) return false;
    for (std::size_t d = 0; d < levels(); ++d)
      if (revenue(thresholds, d) > chosen) return false;
    const std::uint32_t b = first_buyers(thresholds, mu);
    const std::uint32_t e = full_ & ~b;
    for (std::size_t c = 0; c < thresholds.size(); ++c) {
      const std::uint32_t bit = std::uint32_t{1} << c;
      if (b & bit) {
        // Waiting pays off iff mu1 > min(mu2(E + c), v_c).
        if (mu < std::max(price_rank_[e | bit], value_rank_[c])) return false;
      } else {
        // Buying early pays off iff mu1 < v_c and mu1 < mu2(E).
        if (mu > value_rank_[c] && mu > price_rank_[e]) return false;
      }
    }
    return true;
  }

 private:
  std::size_t rank_of(const Rational& v) const {
    return static_cast<std::size_t>(
        std::find(prof_.values.begin(), prof_.values.end(), v) - prof_.values.begin());
  }

  const Instance& inst_;
  DistinctProfile prof_;
  std::uint32_t full_ = 0;
  std::vector<std::size_t> value_rank_;
  std::vector<std::size_t> price_rank_;
  std::vector<Rational> profit_;
};

}  // namespace detail

// Exhaustive search over two-period threshold profiles whose thresholds and
// period-1 price are consumer values (which include every suffix price).
inline ProfileSearchResult search_threshold_equilibria(const Instance& inst) {
  if (inst.periods() != 2) throw std::invalid_argument("search_threshold_equilibria: only defined for T = 2");
  if (inst.consumers() > kMaxProfileSearchConsumers)
    throw SizeGuardError("search_threshold_equilibria: limited to N <= " +
                         std::to_string(kMaxProfileSearchConsumers));
  const detail::ThresholdGame game(inst);
  const std::size_t n = inst.consumers();
  const std::size_t levels = game.levels();
  ProfileSearchResult result;
  std::vector<std::size_t> th(n, 0);
  while (true) {
    for (std::size_t mu = 0; mu < levels; ++mu) {
      ++result.profiles_checked;
      if (!game.is_equilibrium(th, mu)) continue;
      ++result.equilibria;
      Rational revenue = game.revenue(th, mu);
      if (!result.max_revenue || revenue > *result.max_revenue) {
        StrategyProfile2P prof{{}, game.price(mu)};
        for (std::size_t r : th) prof.thresholds.push_back(game.price(r));
        result.best = std::move(prof);
        result.max_revenue = std::move(revenue);
      }
    }
    std::size_t pos = 0;
    while (pos < n && ++th[pos] == levels) th[pos++] = 0;
    if (pos == n) break;
  }
  return result;
}

}  // namespace duropoly

#endif  // DUROPOLY_NONSKIM_HPP
