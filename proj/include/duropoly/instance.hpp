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

#ifndef DUROPOLY_INSTANCE_HPP
#define DUROPOLY_INSTANCE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "duropoly/rational.hpp"

namespace duropoly {

// Raised when user-supplied data does not describe a valid game. `field()`
// names the offending input field ("valuations", "periods", ...).
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Raised by exhaustive routines when the instance exceeds their size limits.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A durable-good monopoly game: N consumers with unit demand and a horizon of
// T selling periods. Valuations are kept sorted non-increasing and every
// consumer index used by the library (1-based) refers to this order.
class Instance {
 public:
  std::size_t consumers() const noexcept { return valuations_.size(); }
  int periods() const noexcept { return periods_; }
  std::span<const Rational> valuations() const noexcept { return valuations_; }

  // Value of consumer i, 1 <= i <= N.
  const Rational& value(std::size_t i) const { return valuations_.at(i - 1); }

  // Values of consumers i..N (the suffix game starting at consumer i).
  std::span<const Rational> suffix(std::size_t i) const {
    return std::span<const Rational>(valuations_).subspan(i - 1);
  }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  friend Instance make_instance(std::vector<Rational> values, int periods);
  Instance(std::vector<Rational> v, int t) : valuations_(std::move(v)), periods_(t) {}

  std::vector<Rational> valuations_;
  int periods_ = 1;
};

inline Instance make_instance(std::vector<Rational> values, int periods) {
  if (values.empty()) throw ValidationError("valuations", "at least one consumer is required");
  for (std::size_t k = 0; k < values.size(); ++k)
    if (values[k].sign() < 0)
      throw ValidationError("valuations",
                            "entry " + std::to_string(k) + " is negative (" + values[k].to_string() + ")");
  if (std::all_of(values.begin(), values.end(), [](const Rational& v) { return v.sign() == 0; }))
    throw ValidationError("valuations", "at least one valuation must be positive");
  if (periods < 1) throw ValidationError("periods", "must be >= 1, got " + std::to_string(periods));
  std::sort(values.begin(), values.end(), std::greater<>());
  return Instance(std::move(values), periods);
}

// Same consumers, different horizon.
inline Instance with_periods(const Instance& inst, int periods) {
  return make_instance({inst.valuations().begin(), inst.valuations().end()}, periods);
}

// Subgame G_i starting in period t. first_consumer == N+1 is the empty game
// and start_period == T+1 is past the horizon; both have zero profit.
struct SubgameRef {
  std::size_t first_consumer = 1;
  int start_period = 1;
  friend bool operator==(const SubgameRef&, const SubgameRef&) = default;
};

// Perfect price discrimination profit: the sum of all valuations.
inline Rational total_surplus(const Instance& inst) {
  return std::accumulate(inst.valuations().begin(), inst.valuations().end(), Rational(0));
}

}  // namespace duropoly

#endif  // DUROPOLY_INSTANCE_HPP
