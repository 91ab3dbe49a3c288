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

// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond Rational.

#ifndef DUROPOLY_TESTS_ORACLES_HPP
#define DUROPOLY_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "duropoly/rational.hpp"

namespace oracle {

using duropoly::Rational;
using Values = std::vector<Rational>;

inline Values sorted_desc(Values v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

struct Sale {
  Rational price;
  Rational profit;
};

// Tries every value as a price and counts who can afford it.
inline Sale static_sale(const Values& values) {
  Sale best{Rational(0), Rational(-1)};
  for (const Rational& p : values) {
    long long buyers = 0;
    for (const Rational& v : values)
      if (v >= p) ++buyers;
    const Rational profit = p * buyers;
    if (profit > best.profit || (profit == best.profit && p > best.price)) best = {p, profit};
  }
  return best;
}

struct Play {
  Rational revenue;
  Rational first_price;
};

// Plain recursion over every cumulative cutoff, for the consumers ranked
// first..n-1 (0-based) in periods t..horizon.
inline Play best_play(const Values& v, std::size_t first, int t, int horizon) {
  const Values rest(v.begin() + static_cast<std::ptrdiff_t>(first), v.end());
  if (t == horizon) {
    const Sale s = static_sale(rest);
    return {s.profit, s.price};
  }
  Play best{Rational(-1), Rational(0)};
  for (std::size_t j = first; j < v.size(); ++j) {
    const Rational price = best_play(v, j, t + 1, horizon).first_price;
    const Rational tail = j + 1 < v.size() ? best_play(v, j + 1, t + 1, horizon).revenue : Rational(0);
    const Rational revenue = price * static_cast<long long>(j - first + 1) + tail;
    if (revenue > best.revenue || (revenue == best.revenue && price > best.first_price)) best = {revenue, price};
  }
  return best;
}

inline Rational equilibrium_profit(const Values& values, int periods) {
  return best_play(sorted_desc(values), 0, 1, periods).revenue;
}

// Price the consumers ranked first.. face when they reach period t unsold.
inline Rational suffix_price_at(const Values& values, std::size_t first, int t, int periods) {
  return best_play(sorted_desc(values), first, t, periods).first_price;
}

inline bool subset_price_is_max(const Values& values) {
  const std::size_t n = values.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Values subset;
    for (std::size_t c = 0; c < n; ++c)
      if ((mask >> c) & 1U) subset.push_back(values[c]);
    if (static_sale(subset).price != *std::max_element(subset.begin(), subset.end())) return false;
  }
  return true;
}

// Highest remaining value each period, everyone at that value buys.
inline Rational pacman_revenue(const Values& values, int periods) {
  const std::set<Rational, std::greater<>> levels(values.begin(), values.end());
  Rational revenue(0);
  int t = 0;
  for (const Rational& level : levels) {
    if (++t > periods) break;
    for (const Rational& v : values)
      if (v == level) revenue += level;
  }
  return revenue;
}

inline Rational sum(const Values& values) {
  Rational s(0);
  for (const auto& v : values) s += v;
  return s;
}

inline Rational harmonic(long long n) {
  Rational h(0);
  for (long long i = 1; i <= n; ++i) h += Rational(1, i);
  return h;
}

inline Values random_values(std::mt19937_64& rng, std::size_t n, long long max_value) {
  std::uniform_int_distribution<long long> d(1, max_value);
  Values v;
  for (std::size_t k = 0; k < n; ++k) v.emplace_back(d(rng));
  return v;
}

}  // namespace oracle

#endif  // DUROPOLY_TESTS_ORACLES_HPP
