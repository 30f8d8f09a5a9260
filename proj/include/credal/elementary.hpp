#pragma once

#include <optional>
#include <string>
#include <vector>

#include "credal/rational.hpp"

namespace credal {

enum class AmbientKind { FullLine, OpenInterval, ClosedInterval };

// The ambient space S: the whole line, a bounded or half-bounded open
// interval, or a compact interval (the compactified picture).
class Ambient {
 public:
  static Ambient full_line();
  static Ambient open(ExtendedRational a, ExtendedRational b);
  static Ambient closed(const Rational& a, const Rational& b);

  AmbientKind kind() const { return kind_; }
  const ExtendedRational& lo() const { return lo_; }
  const ExtendedRational& hi() const { return hi_; }

  bool bounded() const { return lo_.finite() && hi_.finite(); }
  // Total length as an extended rational (PosInf when unbounded).
  ExtendedRational length() const;

  bool operator==(const Ambient& other) const;
  bool operator!=(const Ambient& other) const { return !(*this == other); }

  std::string describe() const;

 private:
  Ambient(AmbientKind kind, ExtendedRational lo, ExtendedRational hi)
      : kind_(kind), lo_(std::move(lo)), hi_(std::move(hi)) {}

  AmbientKind kind_;
  ExtendedRational lo_, hi_;
};

struct Interval {
  ExtendedRational lo, hi;  // lo < hi
  bool operator==(const Interval& other) const { return lo == other.lo && hi == other.hi; }
};

// A regular open subset of the ambient in normal form: finitely many
// intervals with strict gaps between them.  In a ClosedInterval ambient
// [a,b] an interval with lo == a denotes the relatively open piece [a,hi),
// and hi == b denotes (lo,b]; no separate flags.
class ElementarySet {
 public:
  static ElementarySet empty(const Ambient& ambient);
  static ElementarySet full(const Ambient& ambient);
  // Requires normal form (strict gaps); validates and throws otherwise.
  static ElementarySet from_normal_intervals(std::vector<Interval> intervals, const Ambient& ambient);
  static ElementarySet single(const ExtendedRational& lo, const ExtendedRational& hi, const Ambient& ambient);

  const Ambient& ambient() const { return ambient_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  bool is_empty() const { return intervals_.empty(); }
  bool is_full() const;
  std::size_t piece_count() const { return intervals_.size(); }

  // Decoded point membership (honours the closed-ambient end convention).
  bool contains_point(const Rational& x) const;
  // x lies in the closure of the set.
  bool closure_contains(const Rational& x) const;

  ExtendedRational length() const;

  bool operator==(const ElementarySet& other) const;
  bool operator!=(const ElementarySet& other) const { return !(*this == other); }

  std::string describe() const;

 private:
  ElementarySet(const Ambient& ambient, std::vector<Interval> intervals)
      : ambient_(ambient), intervals_(std::move(intervals)) {}

  Ambient ambient_;
  std::vector<Interval> intervals_;
};

// int(clos(union of raw intervals)): merges overlaps and touches, keeps
// strict gaps.  Raw intervals may arrive in any order.
ElementarySet regularize(std::vector<Interval> raw, const Ambient& ambient);

ElementarySet meet(const ElementarySet& e, const ElementarySet& f);
ElementarySet join(const ElementarySet& e, const ElementarySet& f);
// int(S \ E) relative to the ambient.
ElementarySet neg(const ElementarySet& e);

bool disjoint(const ElementarySet& e, const ElementarySet& f);
bool subset(const ElementarySet& e, const ElementarySet& f);

// Finite endpoints of E interior to the ambient; exactly the topological
// boundary of E in the subspace topology.
std::vector<Rational> boundary(const ElementarySet& e);

// Unique extension R-bar with R-bar  S = E, over the compact ambient
// [a,b]; the interval list is unchanged, only reinterpreted.
ElementarySet extend(const ElementarySet& e);
// Inverse of extend: restrict a set over [a,b] back to (a,b).
ElementarySet restrict_to_open(const ElementarySet& e);

}  // namespace credal
