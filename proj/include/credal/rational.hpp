#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace credal {

// Exact arithmetic throughout; mpq_class keeps gcd(|num|,den)=1 and den>0.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "p/q", leading '-'. Throws Error(InvalidArgument) on junk.
Rational parse_rational(const std::string& text);

// "p/q", or "p" when the denominator is 1 (the wire format).
std::string format_rational(const Rational& q);

// Decimal rendering with the given number of fraction digits, round half away
// from zero. Exact when the expansion terminates within `digits`.
std::string decimal_string(const Rational& q, int digits);

Rational abs(const Rational& q);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// floor(q) as a Rational with denominator 1.
Rational floor_rational(const Rational& q);
long floor_long(const Rational& q);

// Least N >= 1 with 1/N <= eps.
long ceil_reciprocal(const Rational& eps);

// The rational line with two formal endpoints.
class ExtendedRational {
 public:
  enum class Kind : std::int8_t { NegInf = -1, Finite = 0, PosInf = 1 };

  ExtendedRational() : kind_(Kind::Finite), value_(0) {}
  ExtendedRational(const Rational& value) : kind_(Kind::Finite), value_(value) {}
  ExtendedRational(long value) : kind_(Kind::Finite), value_(value) {}

  static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }
  static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }

  bool finite() const { return kind_ == Kind::Finite; }
  Kind kind() const { return kind_; }

  // Valid only when finite().
  const Rational& value() const;

  bool operator==(const ExtendedRational& other) const {
    if (kind_ != other.kind_) return false;
    return kind_ != Kind::Finite || value_ == other.value_;
  }
  bool operator!=(const ExtendedRational& other) const { return !(*this == other); }
  bool operator<(const ExtendedRational& other) const;
  bool operator<=(const ExtendedRational& other) const { return *this < other || *this == other; }
  bool operator>(const ExtendedRational& other) const { return other < *this; }
  bool operator>=(const ExtendedRational& other) const { return other <= *this; }

 private:
  explicit ExtendedRational(Kind kind) : kind_(kind), value_(0) {}

  Kind kind_;
  Rational value_;
};

ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b);
ExtendedRational max(const ExtendedRational& a, const ExtendedRational& b);

// "-inf", "inf", or the rational wire format.
std::string format_extended(const ExtendedRational& x);
ExtendedRational parse_extended(const std::string& text);

std::ostream& operator<<(std::ostream& os, const ExtendedRational& x);

}  // namespace credal
