#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace subadd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "-p", "p/q". Throws InvalidInput on anything else or q == 0.
Rational parse_rational(std::string_view text);
// Integers print without a denominator.
std::string format_rational(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

// A finite rational or +inf.
class ExtCoord {
 public:
  ExtCoord() : value_(Rational(0)) {}
  ExtCoord(Rational v) : value_(std::move(v)) {}  // NOLINT: implicit by design
  ExtCoord(long long v) : value_(Rational(v)) {}  // NOLINT

  static ExtCoord infinity() { return ExtCoord(std::nullopt); }

  bool is_infinite() const { return !value_.has_value(); }
  // Precondition: finite.
  const Rational& value() const { return *value_; }

  friend bool operator==(const ExtCoord& a, const ExtCoord& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtCoord& a, const ExtCoord& b);

 private:
  explicit ExtCoord(std::nullopt_t) {}
  std::optional<Rational> value_;
};

// "inf" for +inf, otherwise format_rational.
std::string format_coord(const ExtCoord& c);
ExtCoord parse_coord(std::string_view text);

}  // namespace subadd
