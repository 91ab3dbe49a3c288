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

#ifndef DUROPOLY_PACMAN_HPP
#define DUROPOLY_PACMAN_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "duropoly/instance.hpp"
#include "duropoly/rational.hpp"
#include "duropoly/static_monopoly.hpp"

namespace duropoly {

inline constexpr std::size_t kMaxSubsetConsumers = 15;

// Distinct valuations w_1 > ... > w_M with multiplicities n_1..n_M. The
// 1-based accessors return zero past M.
struct DistinctProfile {
  std::vector<Rational> values;
  std::vector<std::size_t> counts;

  std::size_t distinct() const noexcept { return values.size(); }
  Rational w(std::size_t i) const { return i >= 1 && i <= values.size() ? values[i - 1] : Rational(0); }
  long long n(std::size_t i) const {
    return i >= 1 && i <= counts.size() ? static_cast<long long>(counts[i - 1]) : 0;
  }
};

inline DistinctProfile distinct_profile(const Instance& inst) {
  DistinctProfile prof;
  for (const auto& v : inst.valuations()) {
    if (!prof.values.empty() && prof.values.back() == v) {
      ++prof.counts.back();
    } else {
      prof.values.push_back(v);
      prof.counts.push_back(1);
    }
  }
  return prof;
}

struct PacmanCondition {
  bool eligible = false;
  std::optional<std::size_t> witness;  // first i with p_i != v_i, else M when M > T
  // p_i = v_i holds somewhere only because the static argmax tie went to
  // the highest price.
  bool tie_dependent = false;
};

inline PacmanCondition pacman_condition(const Instance& inst) {
  const auto table = suffix_price_table(inst);
  PacmanCondition cond;
  for (std::size_t i = 1; i <= inst.consumers(); ++i) {
    if (table.p(i) != inst.value(i)) {
      cond.witness = i;
      return cond;
    }
    for (std::size_t k = i + 1; k <= inst.consumers() && !cond.tie_dependent; ++k)
      if (inst.value(k) < inst.value(i) && inst.value(k) * static_cast<long long>(k - i + 1) == inst.value(i))
        cond.tie_dependent = true;
  }
  const std::size_t m = distinct_profile(inst).distinct();
  if (m > static_cast<std::size_t>(inst.periods())) {
    cond.witness = m;
    return cond;
  }
  cond.eligible = true;
  return cond;
}

struct PacmanRun {
  Rational revenue;
  std::vector<Rational> prices;
};

// Seller charges the highest remaining value each period; every consumer at
// that value buys. Runs for min(M, T) periods.
inline PacmanRun simulate_pacman(const Instance& inst) {
  const auto prof = distinct_profile(inst);
  const std::size_t rounds = std::min(prof.distinct(), static_cast<std::size_t>(inst.periods()));
  PacmanRun run;
  for (std::size_t t = 1; t <= rounds; ++t) {
    run.prices.push_back(prof.w(t));
    run.revenue += prof.w(t) * prof.n(t);
  }
  return run;
}

// True iff every non-empty subset S has static price max_{x in S} v_x.
inline bool subset_price_property(const Instance& inst) {
  const std::size_t n = inst.consumers();
  if (n > kMaxSubsetConsumers)
    throw SizeGuardError("subset_price_property: limited to N <= " + std::to_string(kMaxSubsetConsumers) +
                         " (got N=" + std::to_string(n) + ")");
  std::vector<Rational> subset;
  subset.reserve(n);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    subset.clear();
    for (std::size_t c = 0; c < n; ++c)
      if (mask & (std::uint32_t{1} << c)) subset.push_back(inst.valuations()[c]);
    if (static_price(subset).price != subset.front()) return false;
  }
  return true;
}

// n_i w_i - n_i w_k - n_{beta+i} w_{beta+i} >= 0 for 2 <= k <= beta, 1 <= i < k.
inline bool pacman1_inequality(const Instance& inst, long long beta) {
  if (beta < 2) throw std::invalid_argument("pacman1_inequality: beta must be >= 2");
  const auto table = suffix_price_table(inst);
  for (std::size_t i = 1; i <= inst.consumers(); ++i)
    if (table.p(i) != inst.value(i))
      throw std::invalid_argument("pacman1_inequality: hypothesis p_i = v_i fails at i=" + std::to_string(i) +
                                  " (p_i=" + table.p(i).to_string() + ", v_i=" + inst.value(i).to_string() + ")");
  const auto prof = distinct_profile(inst);
  const auto b = static_cast<std::size_t>(beta);
  for (std::size_t k = 2; k <= b; ++k)
    for (std::size_t i = 1; i < k; ++i) {
      const Rational lhs = prof.w(i) * prof.n(i) - prof.w(k) * prof.n(i) - prof.w(b + i) * prof.n(b + i);
      if (lhs.sign() < 0) return false;
    }
  return true;
}

// Revenue when the first price is w_k and Pacman pricing follows:
//   sum_{i<=k} n_i w_k + sum_{j=k+1}^{T+k-1} n_j w_j.
inline Rational pacman_first_price_profit(const DistinctProfile& prof, int periods, std::size_t k) {
  Rational total;
  for (std::size_t i = 1; i <= k; ++i) total += prof.w(k) * prof.n(i);
  for (std::size_t j = k + 1; j + 1 <= static_cast<std::size_t>(periods) + k; ++j) total += prof.w(j) * prof.n(j);
  return total;
}

}  // namespace duropoly

#endif  // DUROPOLY_PACMAN_HPP
