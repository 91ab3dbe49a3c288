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

#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "duropoly/instance.hpp"
#include "duropoly/io.hpp"
#include "duropoly/rational.hpp"

namespace duropoly {
namespace {

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("85"), Rational(85));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_EQ(Rational::parse("2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("10/5").to_string(), "2");
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
}

TEST(Rational, ArithmeticStaysExact) {
  Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ((Rational(21, 11) - Rational(1)).to_string(), "10/11");
  EXPECT_EQ(Rational(7, 2) * Rational(2), Rational(7));
  EXPECT_EQ(Rational(3) / Rational(4), Rational(3, 4));
  EXPECT_LT(Rational(1999, 1000), Rational(2));
  EXPECT_EQ(abs(Rational(-5, 2)), Rational(5, 2));
  EXPECT_EQ(Rational(-5, 2).sign(), -1);
  EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(Rational(21, 11).to_decimal(), "1.909091");
  EXPECT_EQ(Rational(13, 12).to_decimal(), "1.083333");
  EXPECT_EQ(Rational(260).to_decimal(2), "260.00");
  std::ostringstream os;
  os << Rational(3, 7);
  EXPECT_EQ(os.str(), "3/7");
}

TEST(Instance, SortsValuationsDescending) {
  const auto inst = make_instance({50, 100, 80, 85}, 2);
  const std::vector<Rational> expected{100, 85, 80, 50};
  EXPECT_TRUE(std::equal(inst.valuations().begin(), inst.valuations().end(), expected.begin(), expected.end()));
  EXPECT_EQ(inst.periods(), 2);
  EXPECT_EQ(inst.value(1), Rational(100));
  EXPECT_EQ(inst.value(4), Rational(50));
  EXPECT_EQ(inst.suffix(3).size(), 2U);
}

TEST(Instance, TrivialShapes) {
  const auto single = make_instance({7}, 1);
  EXPECT_EQ(single.consumers(), 1U);
  EXPECT_EQ(single.value(1), Rational(7));
  const auto flat = make_instance({1, 1, 1}, 3);
  EXPECT_EQ(flat, make_instance({1, 1, 1}, 3));
  EXPECT_EQ(flat.consumers(), 3U);
}

TEST(Instance, RejectsInvalidInput) {
  auto field_of = [](auto&& fn) {
    try {
      fn();
    } catch (const ValidationError& e) {
      return e.field();
    }
    return std::string("none");
  };
  EXPECT_EQ(field_of([] { make_instance({}, 2); }), "valuations");
  EXPECT_EQ(field_of([] { make_instance({5, -1}, 2); }), "valuations");
  EXPECT_EQ(field_of([] { make_instance({5, 3}, 0); }), "periods");
}

TEST(Instance, TotalSurplus) {
  EXPECT_EQ(total_surplus(make_instance({100, 85, 80, 50}, 2)), Rational(315));
  EXPECT_EQ(total_surplus(make_instance({7}, 1)), Rational(7));
  EXPECT_EQ(total_surplus(make_instance({9, 3, 1}, 3)), Rational(13));
}

TEST(Instance, WithPeriodsKeepsValues) {
  const auto inst = with_periods(make_instance({9, 3, 1}, 3), 1);
  EXPECT_EQ(inst.periods(), 1);
  EXPECT_EQ(inst.consumers(), 3U);
}

TEST(Io, ReadsIntegerAndStringValuations) {
  const auto doc = io::parse_document(R"({"valuations": ["100", 85, "80", "1/2"], "periods": 2})", "inline");
  const auto inst = io::instance_from_json(doc);
  EXPECT_EQ(inst.value(1), Rational(100));
  EXPECT_EQ(inst.value(4), Rational(1, 2));
  EXPECT_EQ(io::instance_from_json(io::instance_to_json(inst)), inst);
}

TEST(Io, DiagnosticsNameTheProblem) {
  try {
    io::parse_document("{\"valuations\": [1,\n 2", "broken.json");
    FAIL() << "expected a parse error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  try {
    io::instance_from_json(io::parse_document(R"({"valuations": [1, "x"], "periods": 2})", "bad"));
    FAIL() << "expected a field error";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "valuations[1]");
  }
  EXPECT_THROW(io::instance_from_json(io::parse_document(R"({"valuations": [1]})", "x")), ValidationError);
  EXPECT_THROW(io::instance_from_json(io::parse_document(R"({"valuations": [1], "periods": 1.5})", "x")),
               ValidationError);
}

}  // namespace
}  // namespace duropoly
