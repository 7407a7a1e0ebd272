#include "measlat/extended_reals.hpp"

#include <algorithm>
#include <ostream>

namespace measlat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::UndefinedDifference: return "UndefinedDifference";
  case ErrorKind::SpaceMismatch: return "SpaceMismatch";
  case ErrorKind::TooLargeToEnumerate: return "TooLargeToEnumerate";
  case ErrorKind::EmptyFamily: return "EmptyFamily";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorKind::Parse, "malformed number '" + std::string(text) + "'");
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    bad_number(text);
  const cpp_int d(std::string{den});
  if (d == 0)
    bad_number(text);
  Rational q(cpp_int(std::string{num}), d);
  return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) {
  // cpp_rational is always normalised, and prints "p/q" or "k".
  return q.str();
}

// ---------------------------------------------------------------- ExtNonneg

ExtNonneg::ExtNonneg(const Rational& q) : value_(q) {
  if (q < 0)
    throw Error(ErrorKind::InvalidArgument, "negative value " + format_rational(q) + " in [0, inf]");
}

ExtNonneg ExtNonneg::infinity() {
  ExtNonneg r;
  r.infinite_ = true;
  return r;
}

std::strong_ordering operator<=>(const ExtNonneg& a, const ExtNonneg& b) {
  if (a.infinite_ || b.infinite_)
    return a.infinite_ <=> b.infinite_;
  if (a.value_ < b.value_)
    return std::strong_ordering::less;
  return a.value_ == b.value_ ? std::strong_ordering::equal : std::strong_ordering::greater;
}

ExtNonneg operator+(const ExtNonneg& a, const ExtNonneg& b) {
  ExtNonneg r = a;
  r += b;
  return r;
}

ExtNonneg& ExtNonneg::operator+=(const ExtNonneg& b) {
  if (infinite_)
    return *this;
  if (b.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += b.value_;
  }
  return *this;
}

ExtNonneg ExtNonneg::scaled(const Rational& c) const {
  if (c < 0)
    throw Error(ErrorKind::InvalidArgument, "negative scale factor " + format_rational(c));
  if (c == 0)
    return ExtNonneg();
  if (infinite_)
    return *this;
  return ExtNonneg(value_ * c);
}

std::string ExtNonneg::to_string() const { return infinite_ ? "inf" : format_rational(value_); }

ExtNonneg ExtNonneg::parse(std::string_view text) {
  if (text == "inf")
    return infinity();
  const Rational q = parse_rational(text);
  if (q < 0)
    throw Error(ErrorKind::Parse, "value '" + std::string(text) + "' is negative; expected [0, inf]");
  return ExtNonneg(q);
}

// ----------------------------------------------------------------- ExtSigned

ExtSigned ExtSigned::infinity() {
  ExtSigned r;
  r.infinite_ = true;
  return r;
}

std::strong_ordering operator<=>(const ExtSigned& a, const ExtSigned& b) {
  if (a.infinite_ || b.infinite_)
    return a.infinite_ <=> b.infinite_;
  if (a.value_ < b.value_)
    return std::strong_ordering::less;
  return a.value_ == b.value_ ? std::strong_ordering::equal : std::strong_ordering::greater;
}

ExtSigned operator+(const ExtSigned& a, const ExtSigned& b) {
  if (a.infinite_ || b.infinite_)
    return ExtSigned::infinity();
  return ExtSigned(a.value_ + b.value_);
}

std::string ExtSigned::to_string() const { return infinite_ ? "inf" : format_rational(value_); }

ExtSigned ExtSigned::parse(std::string_view text) {
  if (text == "inf")
    return infinity();
  return ExtSigned(parse_rational(text));
}

// -------------------------------------------------------------- free functions

ExtNonneg add(const ExtNonneg& a, const ExtNonneg& b) { return a + b; }

ExtSigned sub_checked(const ExtSigned& a, const ExtSigned& b) {
  if (b.is_infinite()) {
    throw Error(ErrorKind::UndefinedDifference,
                a.is_infinite() ? "inf - inf is undefined" : a.to_string() + " - inf is -inf, which is not representable");
  }
  if (a.is_infinite())
    return a;
  return ExtSigned(a.value() - b.value());
}

ExtNonneg sum(std::span<const ExtNonneg> values) {
  ExtNonneg total;
  for (const auto& v : values) {
    if (v.is_infinite())
      return ExtNonneg::infinity();
    total += v;
  }
  return total;
}

ExtNonneg pos_part(const ExtSigned& a) {
  if (a.is_infinite())
    return ExtNonneg::infinity();
  return a.value() > 0 ? ExtNonneg(a.value()) : ExtNonneg();
}

ExtNonneg neg_part(const ExtSigned& a) {
  if (a.is_infinite() || a.value() >= 0)
    return ExtNonneg();
  return ExtNonneg(Rational(-a.value()));
}

ExtNonneg to_nonneg(const ExtSigned& a) {
  if (a.is_infinite())
    return ExtNonneg::infinity();
  if (a.value() < 0)
    throw Error(ErrorKind::InvalidArgument, "value " + a.to_string() + " is negative");
  return ExtNonneg(a.value());
}

std::ostream& operator<<(std::ostream& os, const ExtNonneg& a) { return os << a.to_string(); }
std::ostream& operator<<(std::ostream& os, const ExtSigned& a) { return os << a.to_string(); }

} // namespace measlat
