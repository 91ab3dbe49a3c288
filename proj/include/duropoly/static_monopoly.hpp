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

#ifndef DUROPOLY_STATIC_MONOPOLY_HPP
#define DUROPOLY_STATIC_MONOPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "duropoly/instance.hpp"
#include "duropoly/rational.hpp"

namespace duropoly {

// Optimal one-shot price for a sorted list of values: selling to the top
// `index` consumers at price values[index-1] maximizes index * price.
struct StaticPrice {
  Rational price;
  std::size_t index = 0;  // 1-based position of the marginal buyer
  Rational profit() const { return price * static_cast<long long>(index); }
};

namespace detail {

inline void require_sorted(std::span<const Rational> values, const char* who) {
  if (values.empty()) throw std::invalid_argument(std::string(who) + ": empty value list");
  if (!std::is_sorted(values.begin(), values.end(), std::greater<>()))
    throw std::invalid_argument(std::string(who) + ": values must be sorted non-increasing");
}

}  // namespace detail

// Ties in k * v_k go to the smallest k, i.e. the highest price.
inline StaticPrice static_price(std::span<const Rational> values) {
  detail::require_sorted(values, "static_price");
  StaticPrice best{values[0], 1};
  Rational best_profit = values[0];
  for (std::size_t k = 2; k <= values.size(); ++k) {
    Rational profit = values[k - 1] * static_cast<long long>(k);
    if (profit > best_profit) {
      best_profit = std::move(profit);
      best = {values[k - 1], k};
    }
  }
  return best;
}

inline Rational static_profit(std::span<const Rational> values) { return static_price(values).profit(); }

// p_i and y_i for every suffix game G_i = {i..N}; both vectors are indexed
// from consumer 1 (slot 0 holds consumer 1).
struct StaticPriceTable {
  std::vector<Rational> prices;
  std::vector<std::size_t> cutoffs;

  const Rational& p(std::size_t i) const { return prices.at(i - 1); }
  std::size_t y(std::size_t i) const { return cutoffs.at(i - 1); }
  std::size_t size() const noexcept { return prices.size(); }
};

inline StaticPriceTable suffix_price_table(const Instance& inst) {
  const std::size_t n = inst.consumers();
  StaticPriceTable table;
  table.prices.reserve(n);
  table.cutoffs.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    StaticPrice sp = static_price(inst.suffix(i));
    table.prices.push_back(std::move(sp.price));
    table.cutoffs.push_back(i - 1 + sp.index);
  }
  return table;
}

// Static price after replacing v_j (1-based) by `replacement`; the multiset
// is re-sorted before pricing.
inline Rational replace_value_price(std::span<const Rational> values, std::size_t j,
                                    const Rational& replacement) {
  detail::require_sorted(values, "replace_value_price");
  if (j < 1 || j > values.size())
    throw std::out_of_range("replace_value_price: index " + std::to_string(j) + " outside 1.." +
                            std::to_string(values.size()));
  std::vector<Rational> changed(values.begin(), values.end());
  changed[j - 1] = replacement;
  std::sort(changed.begin(), changed.end(), std::greater<>());
  return static_price(changed).price;
}

// Static price after adding one consumer with value `extra`.
inline Rational insert_value_price(std::span<const Rational> values, const Rational& extra) {
  detail::require_sorted(values, "insert_value_price");
  std::vector<Rational> changed(values.begin(), values.end());
  changed.insert(std::upper_bound(changed.begin(), changed.end(), extra, std::greater<>()), extra);
  return static_price(changed).price;
}

}  // namespace duropoly

#endif  // DUROPOLY_STATIC_MONOPOLY_HPP
