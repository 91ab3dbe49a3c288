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

#ifndef DUROPOLY_IO_HPP
#define DUROPOLY_IO_HPP

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "duropoly/bounds.hpp"
#include "duropoly/equilibrium.hpp"
#include "duropoly/instance.hpp"
#include "duropoly/nonskim.hpp"
#include "duropoly/rational.hpp"
#include "duropoly/verifier.hpp"

// JSON encoding. Rationals travel as strings ("p" or "p/q"); integers are
// also accepted on input.
namespace duropoly::io {

using json = nlohmann::json;

inline Rational rational_from_json(const json& j, const std::string& field) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ValidationError(field, e.what());
  }
  throw ValidationError(field, "expected an integer or a \"p/q\" string, got " + j.dump());
}

inline json to_json(const Rational& r) { return r.to_string(); }

inline json rationals_to_json(std::span<const Rational> values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_json(v));
  return arr;
}

// Parses text, reporting syntax errors with line and column.
inline json parse_document(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ValidationError(source, "JSON syntax error at line " + std::to_string(line) + ", column " +
                                      std::to_string(col) + ": " + e.what());
  }
}

inline json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), path);
}

inline Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("(root)", "expected a JSON object");
  if (!j.contains("valuations")) throw ValidationError("valuations", "missing");
  if (!j.contains("periods")) throw ValidationError("periods", "missing");
  const json& vals = j.at("valuations");
  if (!vals.is_array()) throw ValidationError("valuations", "expected an array");
  std::vector<Rational> values;
  for (std::size_t k = 0; k < vals.size(); ++k)
    values.push_back(rational_from_json(vals[k], "valuations[" + std::to_string(k) + "]"));
  const json& periods = j.at("periods");
  if (!periods.is_number_integer()) throw ValidationError("periods", "expected an integer");
  return make_instance(std::move(values), periods.get<int>());
}

inline json instance_to_json(const Instance& inst) {
  return json{{"valuations", rationals_to_json(inst.valuations())}, {"periods", inst.periods()}};
}

template <typename V, typename F>
json grid_to_json(const Grid<V>& grid, std::size_t rows, int cols, F&& encode) {
  json out = json::array();
  for (std::size_t i = 1; i <= rows; ++i) {
    json row = json::array();
    for (int t = 1; t <= cols; ++t) row.push_back(encode(grid.at(i, t)));
    out.push_back(std::move(row));
  }
  return out;
}

// Rows are consumers 1..N, columns periods 1..T. The threat table has T-1
// columns.
inline json solution_to_json(const EquilibriumSolution& sol) {
  const std::size_t n = sol.tables.consumers();
  const int horizon = sol.tables.periods();
  auto enc_r = [](const Rational& r) { return to_json(r); };
  auto enc_i = [](std::size_t i) { return json(i); };
  json threat = json::array();
  for (std::size_t i = 1; i <= n; ++i) {
    json row = json::array();
    for (int t = 1; t < horizon; ++t) row.push_back(to_json(sol.tables.threat(i, t)));
    threat.push_back(std::move(row));
  }
  return json{{"prices", rationals_to_json(sol.prices)},
              {"buyers_per_period", sol.buyers_per_period},
              {"cutoffs", sol.cutoffs},
              {"profit", to_json(sol.profit)},
              {"tables",
               {{"profit", grid_to_json(sol.tables.profit, n, horizon, enc_r)},
                {"cutoff", grid_to_json(sol.tables.cutoff, n, horizon, enc_i)},
                {"price", grid_to_json(sol.tables.price, n, horizon, enc_r)},
                {"threat", std::move(threat)}}}};
}

inline EquilibriumSolution solution_from_json(const json& j, const Instance& inst) {
  const std::size_t n = inst.consumers();
  const int horizon = inst.periods();
  EquilibriumSolution sol;
  auto need = [&](const json& obj, const char* key, const std::string& where) -> const json& {
    if (!obj.is_object() || !obj.contains(key)) throw ValidationError(where + "." + key, "missing");
    return obj.at(key);
  };
  const json& prices = need(j, "prices", "solution");
  for (std::size_t k = 0; k < prices.size(); ++k)
    sol.prices.push_back(rational_from_json(prices[k], "solution.prices[" + std::to_string(k) + "]"));
  try {
    sol.buyers_per_period = need(j, "buyers_per_period", "solution").get<std::vector<std::size_t>>();
    sol.cutoffs = need(j, "cutoffs", "solution").get<std::vector<std::size_t>>();
  } catch (const json::exception& e) {
    throw ValidationError("solution", e.what());
  }
  sol.profit = rational_from_json(need(j, "profit", "solution"), "solution.profit");

  const json& tables = need(j, "tables", "solution");
  sol.tables = DpTables{Grid<Rational>(n, horizon), Grid<std::size_t>(n, horizon), Grid<Rational>(n, horizon)};
  const json& profit = need(tables, "profit", "solution.tables");
  const json& cutoff = need(tables, "cutoff", "solution.tables");
  const json& price = need(tables, "price", "solution.tables");
  for (const json* g : {&profit, &cutoff, &price})
    if (!g->is_array() || g->size() != n)
      throw ValidationError("solution.tables", "expected " + std::to_string(n) + " rows");
  for (std::size_t i = 1; i <= n; ++i) {
    for (const json* g : {&profit, &cutoff, &price})
      if (!(*g)[i - 1].is_array() || (*g)[i - 1].size() != static_cast<std::size_t>(horizon))
        throw ValidationError("solution.tables", "row " + std::to_string(i) + " must have " +
                                                     std::to_string(horizon) + " columns");
    for (int t = 1; t <= horizon; ++t) {
      const std::string cell = "[" + std::to_string(i - 1) + "][" + std::to_string(t - 1) + "]";
      const auto c = static_cast<std::size_t>(t - 1);
      sol.tables.profit.at(i, t) = rational_from_json(profit[i - 1][c], "solution.tables.profit" + cell);
      sol.tables.price.at(i, t) = rational_from_json(price[i - 1][c], "solution.tables.price" + cell);
      if (!cutoff[i - 1][c].is_number_unsigned())
        throw ValidationError("solution.tables.cutoff" + cell, "expected a consumer index");
      sol.tables.cutoff.at(i, t) = cutoff[i - 1][c].get<std::size_t>();
    }
  }
  return sol;
}

// {"mu1": "70", "thresholds": {"80": "45", ...}} keyed by valuation, or
// "thresholds" as an array in sorted consumer order.
inline StrategyProfile2P profile_from_json(const json& j, const Instance& inst) {
  if (!j.is_object()) throw ValidationError("profile", "expected a JSON object");
  if (!j.contains("mu1")) throw ValidationError("mu1", "missing");
  if (!j.contains("thresholds")) throw ValidationError("thresholds", "missing");
  StrategyProfile2P prof;
  prof.mu1 = rational_from_json(j.at("mu1"), "mu1");
  const json& th = j.at("thresholds");
  if (th.is_array()) {
    if (th.size() != inst.consumers())
      throw ValidationError("thresholds", "expected " + std::to_string(inst.consumers()) + " entries");
    for (std::size_t k = 0; k < th.size(); ++k)
      prof.thresholds.push_back(rational_from_json(th[k], "thresholds[" + std::to_string(k) + "]"));
    return prof;
  }
  if (!th.is_object()) throw ValidationError("thresholds", "expected an object keyed by valuation or an array");
  std::map<Rational, Rational> by_value;
  for (const auto& [key, value] : th.items()) {
    Rational v;
    try {
      v = Rational::parse(key);
    } catch (const std::exception& e) {
      throw ValidationError("thresholds", "key '" + key + "': " + e.what());
    }
    by_value[v] = rational_from_json(value, "thresholds." + key);
  }
  for (const auto& v : inst.valuations()) {
    auto it = by_value.find(v);
    if (it == by_value.end()) throw ValidationError("thresholds", "no threshold for valuation " + v.to_string());
    prof.thresholds.push_back(it->second);
  }
  return prof;
}

inline json profile_to_json(const Instance& inst, const StrategyProfile2P& prof) {
  std::map<Rational, Rational> by_value;
  bool keyed = true;
  for (std::size_t c = 0; c < inst.consumers(); ++c) {
    auto [it, fresh] = by_value.emplace(inst.valuations()[c], prof.thresholds[c]);
    if (!fresh && it->second != prof.thresholds[c]) keyed = false;
  }
  json th;
  if (keyed) {
    th = json::object();
    for (const auto& [v, t] : by_value) th[v.to_string()] = to_json(t);
  } else {
    th = rationals_to_json(prof.thresholds);
  }
  return json{{"mu1", to_json(prof.mu1)}, {"thresholds", std::move(th)}};
}

inline json report_to_json(const DeviationReport& report) {
  json out = json::array();
  for (const auto& d : report.deviations) {
    out.push_back({{"agent", d.consumer ? json(*d.consumer) : json("duropolist")},
                   {"subgame", {{"first_consumer", d.subgame.first_consumer},
                                {"start_period", d.subgame.start_period}}},
                   {"alternative_action", d.alternative_action},
                   {"payoff_gain", to_json(d.payoff_gain)}});
  }
  return out;
}

inline json bounds_to_json(const BoundsReport& r) {
  return json{{"Pi_M", to_json(r.static_profit)},
              {"Pi_D", to_json(r.duropoly_profit)},
              {"sum_p", to_json(r.sum_suffix_prices)},
              {"p1", to_json(r.top_price)},
              {"Pi_C", to_json(r.coase_profit)},
              {"surplus", to_json(r.surplus)},
              {"price_path_bound", to_json(r.price_path_bound)},
              {"ratio", to_json(r.ratio)},
              {"ratio_decimal", r.ratio_decimal()},
              {"verdicts",
               {{"static_le_duropoly", r.verdicts.static_le_duropoly},
                {"duropoly_le_price_path_bound", r.verdicts.duropoly_le_price_path_bound},
                {"duropoly_le_sum_prices", r.verdicts.duropoly_le_sum_prices},
                {"sum_prices_le_static_plus_top", r.verdicts.sum_prices_le_static_plus_top},
                {"static_plus_top_le_double_static", r.verdicts.static_plus_top_le_double_static}}},
              {"all_bounds_ok", r.verdicts.all()}};
}

}  // namespace duropoly::io

#endif  // DUROPOLY_IO_HPP
