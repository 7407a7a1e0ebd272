#pragma once

// Exact arithmetic on [0, inf] and (-inf, inf].
//
// Both types hold an arbitrary-precision rational or +inf. Negative infinity
// has no representation, so a subtraction that would produce it is reported
// as ErrorKind::UndefinedDifference instead.

#include <compare>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "measlat/error.hpp"

namespace measlat {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "k", "-k" or "p/q" into a rational in lowest terms. Rejects
/// whitespace, leading '+', zero denominators and empty input.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

class ExtSigned;

/// A value in [0, inf].
class ExtNonneg {
public:
  ExtNonneg() = default;
  explicit ExtNonneg(const Rational& q);
  explicit ExtNonneg(long long k) : ExtNonneg(Rational(k)) {}

  static ExtNonneg infinity();
  static ExtNonneg zero() { return ExtNonneg(); }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  bool is_zero() const noexcept { return !infinite_ && value_ == 0; }
  /// Only meaningful when finite.
  const Rational& value() const noexcept { return value_; }

  friend bool operator==(const ExtNonneg& a, const ExtNonneg& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtNonneg& a, const ExtNonneg& b);

  friend ExtNonneg operator+(const ExtNonneg& a, const ExtNonneg& b);
  ExtNonneg& operator+=(const ExtNonneg& b);

  /// Multiplication by a nonnegative rational. The product 0 * inf is taken
  /// to be 0, so scaling by zero always yields zero.
  ExtNonneg scaled(const Rational& c) const;

  std::string to_string() const;
  static ExtNonneg parse(std::string_view text);

private:
  Rational value_{0};
  bool infinite_{false};
};

/// A value in (-inf, inf].
class ExtSigned {
public:
  ExtSigned() = default;
  explicit ExtSigned(const Rational& q) : value_(q) {}
  explicit ExtSigned(long long k) : value_(k) {}
  ExtSigned(const ExtNonneg& a) // NOLINT: lossless embedding
      : value_(a.is_finite() ? a.value() : Rational(0)), infinite_(a.is_infinite()) {}

  static ExtSigned infinity();

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  const Rational& value() const noexcept { return value_; }

  friend bool operator==(const ExtSigned& a, const ExtSigned& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtSigned& a, const ExtSigned& b);

  friend ExtSigned operator+(const ExtSigned& a, const ExtSigned& b);

  std::string to_string() const;
  static ExtSigned parse(std::string_view text);

private:
  Rational value_{0};
  bool infinite_{false};
};

ExtNonneg add(const ExtNonneg& a, const ExtNonneg& b);

/// a - b. Defined iff b is finite; inf - inf and finite - inf throw
/// ErrorKind::UndefinedDifference.
ExtSigned sub_checked(const ExtSigned& a, const ExtSigned& b);

ExtNonneg sum(std::span<const ExtNonneg> values);

/// max(a, 0)
ExtNonneg pos_part(const ExtSigned& a);
/// -min(a, 0); always finite.
ExtNonneg neg_part(const ExtSigned& a);

/// Narrows a signed value known to be >= 0. Throws InvalidArgument otherwise.
ExtNonneg to_nonneg(const ExtSigned& a);

std::ostream& operator<<(std::ostream& os, const ExtNonneg& a);
std::ostream& operator<<(std::ostream& os, const ExtSigned& a);

} // namespace measlat
