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

#ifndef DUROPOLY_RATIONAL_HPP
#define DUROPOLY_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace duropoly {

// Exact rational number with arbitrary-precision numerator and denominator.
//
// The denominator is always positive and the fraction is kept in lowest
// terms, so equality is structural. All money amounts in the library are
// carried as Rational; nothing is ever rounded except by the explicit
// decimal rendering helpers.
class Rational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT: implicit by design of arithmetic types
  Rational(const Integer& value) : value_(value) {}  // NOLINT
  Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    value_ = Value(numerator, denominator);
  }

  // Accepts "p", "-p" and "p/q" with decimal digits only.
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    const auto slash = text.find('/');
    const std::string_view num = trim(text.substr(0, slash));
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
    return Rational(parse_integer(num, text), parse_integer(den, text));
  }

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  int sign() const { return value_.sign(); }
  bool is_integer() const { return denominator() == 1; }

  // "p" for integers, "p/q" otherwise. Round-trips through parse().
  std::string to_string() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  // Fixed-point rendering rounded half away from zero; display only.
  std::string to_decimal(int places = 6) const {
    Integer scale = 1;
    for (int k = 0; k < places; ++k) scale *= 10;
    Integer num = boost::multiprecision::abs(numerator()) * scale;
    const Integer den = denominator();
    Integer q = num / den;
    if ((num % den) * 2 >= den) ++q;
    std::string digits = q.str();
    if (places > 0) {
      if (digits.size() <= static_cast<std::size_t>(places))
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
      digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    return (sign() < 0 && q != 0 ? "-" : "") + digits;
  }

  double to_double() const { return value_.convert_to<double>(); }

  Rational operator-() const { return Rational(Value(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Rational(Value v) : value_(std::move(v)) {}

  static Integer parse_integer(std::string_view digits, std::string_view whole) {
    std::string_view body = digits;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    if (body.empty()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    for (char c : body)
      if (c < '0' || c > '9')
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    Integer value{std::string(body)};
    return negative ? Integer(-value) : value;
  }

  Value value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace duropoly

#endif  // DUROPOLY_RATIONAL_HPP
