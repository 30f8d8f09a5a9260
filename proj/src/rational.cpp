#include "credal/rational.hpp"

#include <cctype>
#include <ostream>

#include "credal/error.hpp"

namespace credal {

Rational make_rational(long num, long den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(ErrorCode::InvalidArgument, "empty rational literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;
    } else {
      fail(ErrorCode::InvalidArgument, "bad rational literal '" + text + "'");
    }
  }
  if (!seen_digit) fail(ErrorCode::InvalidArgument, "bad rational literal '" + text + "'");
  Rational q;
  if (q.set_str(text, 10) != 0) fail(ErrorCode::InvalidArgument, "bad rational literal '" + text + "'");
  if (q.get_den() == 0) fail(ErrorCode::InvalidArgument, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::string decimal_string(const Rational& q, int digits) {
  if (digits < 0) digits = 0;
  mpz_class num = q.get_num(), den = q.get_den();
  bool negative = num < 0;
  if (negative) num = -num;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled_twice = 2 * num * scale;
  mpz_class rounded = (scaled_twice + den) / (2 * den);  // round half away from zero
  mpz_class whole = rounded / scale, frac = rounded % scale;
  std::string out = (negative && rounded != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational floor_rational(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return Rational(f);
}

long floor_long(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!f.fits_slong_p()) fail(ErrorCode::InvalidArgument, "floor out of range");
  return f.get_si();
}

long ceil_reciprocal(const Rational& eps) {
  if (eps <= 0) fail(ErrorCode::InvalidArgument, "eps must be positive");
  mpz_class n;
  mpz_cdiv_q(n.get_mpz_t(), eps.get_den().get_mpz_t(), eps.get_num().get_mpz_t());
  if (n < 1) n = 1;
  if (!n.fits_slong_p()) fail(ErrorCode::InvalidArgument, "eps too small");
  return n.get_si();
}

const Rational& ExtendedRational::value() const {
  if (kind_ != Kind::Finite) fail(ErrorCode::InvalidArgument, "infinite endpoint has no value");
  return value_;
}

bool ExtendedRational::operator<(const ExtendedRational& other) const {
  if (kind_ != other.kind_) return static_cast<int>(kind_) < static_cast<int>(other.kind_);
  return kind_ == Kind::Finite && value_ < other.value_;
}

ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b) { return a < b ? a : b; }
ExtendedRational max(const ExtendedRational& a, const ExtendedRational& b) { return a < b ? b : a; }

std::string format_extended(const ExtendedRational& x) {
  switch (x.kind()) {
    case ExtendedRational::Kind::NegInf:
      return "-inf";
    case ExtendedRational::Kind::PosInf:
      return "inf";
    default:
      return format_rational(x.value());
  }
}

ExtendedRational parse_extended(const std::string& text) {
  if (text == "-inf") return ExtendedRational::neg_inf();
  if (text == "inf" || text == "+inf") return ExtendedRational::pos_inf();
  return ExtendedRational(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& x) { return os << format_extended(x); }

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInterval: return "MALFORMED_INTERVAL";
    case ErrorCode::OutOfAmbient: return "OUT_OF_AMBIENT";
    case ErrorCode::AmbientMismatch: return "AMBIENT_MISMATCH";
    case ErrorCode::UnboundedAmbient: return "UNBOUNDED_AMBIENT";
    case ErrorCode::NotInAlgebra: return "NOT_IN_ALGEBRA";
    case ErrorCode::Unnormalizable: return "UNNORMALIZABLE";
    case ErrorCode::NotAPartition: return "NOT_A_PARTITION";
    case ErrorCode::NotARefinement: return "NOT_A_REFINEMENT";
    case ErrorCode::EmptySet: return "EMPTY_SET";
    case ErrorCode::ZeroMassConditioning: return "ZERO_MASS_CONDITIONING";
    case ErrorCode::UnsupportedRule: return "UNSUPPORTED_RULE";
    case ErrorCode::TargetMismatch: return "TARGET_MISMATCH";
    case ErrorCode::ClosureTooLarge: return "CLOSURE_TOO_LARGE";
    case ErrorCode::NotSubordinate: return "NOT_SUBORDINATE";
    case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::BadRatio: return "BAD_RATIO";
    case ErrorCode::Exhausted: return "EXHAUSTED";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace credal
