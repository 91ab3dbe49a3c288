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

#ifndef DUROPOLY_SWEEP_HPP
#define DUROPOLY_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "duropoly/bounds.hpp"
#include "duropoly/instance.hpp"

namespace duropoly {

// Seeded random instances: N uniform in 2..max_n (1 if max_n == 1), T uniform
// in 1..max_t, integer valuations uniform in 1..max_value.
struct SweepParams {
  std::size_t count = 1000;
  std::size_t max_n = 10;
  int max_t = 4;
  long long max_value = 100;
  std::uint64_t seed = 42;
};

inline void validate(const SweepParams& p) {
  if (p.max_n < 1) throw ValidationError("max-n", "must be >= 1");
  if (p.max_t < 1) throw ValidationError("max-t", "must be >= 1");
  if (p.max_value < 1) throw ValidationError("max-value", "must be >= 1");
}

inline Instance random_instance(std::mt19937_64& rng, std::size_t max_n, int max_t, long long max_value) {
  const std::size_t min_n = max_n >= 2 ? 2 : 1;
  const auto n = std::uniform_int_distribution<std::size_t>(min_n, max_n)(rng);
  const int t = std::uniform_int_distribution<int>(1, max_t)(rng);
  std::uniform_int_distribution<long long> value(1, max_value);
  std::vector<Rational> values;
  values.reserve(n);
  for (std::size_t k = 0; k < n; ++k) values.emplace_back(value(rng));
  return make_instance(std::move(values), t);
}

struct SweepRow {
  std::size_t instance_id = 0;
  std::size_t consumers = 0;
  int periods = 0;
  BoundsReport report;
};

inline std::vector<SweepRow> run_sweep(const SweepParams& p) {
  validate(p);
  std::mt19937_64 rng(p.seed);
  std::vector<SweepRow> rows;
  rows.reserve(p.count);
  for (std::size_t id = 1; id <= p.count; ++id) {
    const Instance inst = random_instance(rng, p.max_n, p.max_t, p.max_value);
    rows.push_back({id, inst.consumers(), inst.periods(), analyze(inst)});
  }
  return rows;
}

inline constexpr const char* kSweepCsvHeader =
    "instance_id,N,T,Pi_M,Pi_D,sum_p,p1,ratio_num,ratio_den,ratio_decimal,bounds_ok";

inline void write_csv_row(std::ostream& os, const SweepRow& row) {
  const auto& r = row.report;
  os << row.instance_id << ',' << row.consumers << ',' << row.periods << ',' << r.static_profit << ','
     << r.duropoly_profit << ',' << r.sum_suffix_prices << ',' << r.top_price << ',' << r.ratio.numerator() << ','
     << r.ratio.denominator() << ',' << r.ratio_decimal() << ',' << (r.verdicts.all() ? "true" : "false") << '\n';
}

}  // namespace duropoly

#endif  // DUROPOLY_SWEEP_HPP
