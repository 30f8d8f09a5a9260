#include "credal/elementary.hpp"

#include <algorithm>
#include <sstream>

#include "credal/error.hpp"

namespace credal {

Ambient Ambient::full_line() {
  return Ambient(AmbientKind::FullLine, ExtendedRational::neg_inf(), ExtendedRational::pos_inf());
}

Ambient Ambient::open(ExtendedRational a, ExtendedRational b) {
  if (!(a < b)) fail(ErrorCode::MalformedInterval, "ambient requires a < b");
  if (!a.finite() && !b.finite()) return full_line();
  return Ambient(AmbientKind::OpenInterval, std::move(a), std::move(b));
}

Ambient Ambient::closed(const Rational& a, const Rational& b) {
  if (!(a < b)) fail(ErrorCode::MalformedInterval, "ambient requires a < b");
  return Ambient(AmbientKind::ClosedInterval, ExtendedRational(a), ExtendedRational(b));
}

ExtendedRational Ambient::length() const {
  if (!bounded()) return ExtendedRational::pos_inf();
  return ExtendedRational(Rational(hi_.value() - lo_.value()));
}

bool Ambient::operator==(const Ambient& other) const {
  return kind_ == other.kind_ && lo_ == other.lo_ && hi_ == other.hi_;
}

std::string Ambient::describe() const {
  switch (kind_) {
    case AmbientKind::FullLine:
      return "R";
    case AmbientKind::OpenInterval:
      return "(" + format_extended(lo_) + "," + format_extended(hi_) + ")";
    case AmbientKind::ClosedInterval:
      return "[" + format_extended(lo_) + "," + format_extended(hi_) + "]";
  }
  return "?";
}

namespace {

void check_inside_ambient(const Interval& iv, const Ambient& ambient) {
  if (!(iv.lo < iv.hi)) fail(ErrorCode::MalformedInterval, "interval requires lo < hi");
  if (iv.lo < ambient.lo() || ambient.hi() < iv.hi)
    fail(ErrorCode::OutOfAmbient, "interval escapes ambient " + ambient.describe());
}

}  // namespace

ElementarySet ElementarySet::empty(const Ambient& ambient) { return ElementarySet(ambient, {}); }

ElementarySet ElementarySet::full(const Ambient& ambient) {
  return ElementarySet(ambient, {Interval{ambient.lo(), ambient.hi()}});
}

ElementarySet ElementarySet::from_normal_intervals(std::vector<Interval> intervals, const Ambient& ambient) {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    check_inside_ambient(intervals[i], ambient);
    if (i > 0 && !(intervals[i - 1].hi < intervals[i].lo))
      fail(ErrorCode::MalformedInterval, "intervals must keep strict gaps");
  }
  return ElementarySet(ambient, std::move(intervals));
}

ElementarySet ElementarySet::single(const ExtendedRational& lo, const ExtendedRational& hi, const Ambient& ambient) {
  return from_normal_intervals({Interval{lo, hi}}, ambient);
}

bool ElementarySet::is_full() const {
  return intervals_.size() == 1 && intervals_[0].lo == ambient_.lo() && intervals_[0].hi == ambient_.hi();
}

bool ElementarySet::contains_point(const Rational& x) const {
  ExtendedRational p(x);
  for (const Interval& iv : intervals_) {
    if (iv.lo < p && p < iv.hi) return true;
    if (ambient_.kind() == AmbientKind::ClosedInterval) {
      if (p == iv.lo && iv.lo == ambient_.lo()) return true;
      if (p == iv.hi && iv.hi == ambient_.hi()) return true;
    }
  }
  return false;
}

bool ElementarySet::closure_contains(const Rational& x) const {
  ExtendedRational p(x);
  for (const Interval& iv : intervals_) {
    if (iv.lo <= p && p <= iv.hi) return true;
  }
  return false;
}

ExtendedRational ElementarySet::length() const {
  Rational total = 0;
  for (const Interval& iv : intervals_) {
    if (!iv.lo.finite() || !iv.hi.finite()) return ExtendedRational::pos_inf();
    total += iv.hi.value() - iv.lo.value();
  }
  return ExtendedRational(total);
}

bool ElementarySet::operator==(const ElementarySet& other) const {
  return ambient_ == other.ambient_ && intervals_ == other.intervals_;
}

std::string ElementarySet::describe() const {
  if (intervals_.empty()) return "{}";
  std::ostringstream os;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i) os << " u ";
    bool close_lo = ambient_.kind() == AmbientKind::ClosedInterval && intervals_[i].lo == ambient_.lo();
    bool close_hi = ambient_.kind() == AmbientKind::ClosedInterval && intervals_[i].hi == ambient_.hi();
    os << (close_lo ? '[' : '(') << format_extended(intervals_[i].lo) << ","
       << format_extended(intervals_[i].hi) << (close_hi ? ']' : ')');
  }
  return os.str();
}

ElementarySet regularize(std::vector<Interval> raw, const Ambient& ambient) {
  for (const Interval& iv : raw) check_inside_ambient(iv, ambient);
  std::sort(raw.begin(), raw.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  std::vector<Interval> merged;
  for (Interval& iv : raw) {
    if (!merged.empty() && !(merged.back().hi < iv.lo)) {
      merged.back().hi = max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(std::move(iv));
    }
  }
  return ElementarySet::from_normal_intervals(std::move(merged), ambient);
}

namespace {

void require_same_ambient(const ElementarySet& e, const ElementarySet& f) {
  if (e.ambient() != f.ambient())
    fail(ErrorCode::AmbientMismatch, e.ambient().describe() + " vs " + f.ambient().describe());
}

}  // namespace

ElementarySet meet(const ElementarySet& e, const ElementarySet& f) {
  require_same_ambient(e, f);
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  const auto& a = e.intervals();
  const auto& b = f.intervals();
  while (i < a.size() && j < b.size()) {
    ExtendedRational lo = max(a[i].lo, b[j].lo);
    ExtendedRational hi = min(a[i].hi, b[j].hi);
    if (lo < hi) out.push_back(Interval{lo, hi});
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return ElementarySet::from_normal_intervals(std::move(out), e.ambient());
}

ElementarySet join(const ElementarySet& e, const ElementarySet& f) {
  require_same_ambient(e, f);
  std::vector<Interval> all = e.intervals();
  all.insert(all.end(), f.intervals().begin(), f.intervals().end());
  return regularize(std::move(all), e.ambient());
}

ElementarySet neg(const ElementarySet& e) {
  const Ambient& ambient = e.ambient();
  if (e.is_empty()) return ElementarySet::full(ambient);
  std::vector<Interval> out;
  const auto& ivs = e.intervals();
  if (ambient.lo() < ivs.front().lo) out.push_back(Interval{ambient.lo(), ivs.front().lo});
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i) out.push_back(Interval{ivs[i].hi, ivs[i + 1].lo});
  if (ivs.back().hi < ambient.hi()) out.push_back(Interval{ivs.back().hi, ambient.hi()});
  return ElementarySet::from_normal_intervals(std::move(out), ambient);
}

bool disjoint(const ElementarySet& e, const ElementarySet& f) { return meet(e, f).is_empty(); }

bool subset(const ElementarySet& e, const ElementarySet& f) {
  require_same_ambient(e, f);
  std::size_t j = 0;
  for (const Interval& iv : e.intervals()) {
    while (j < f.intervals().size() && f.intervals()[j].hi < iv.hi) ++j;
    if (j == f.intervals().size()) return false;
    const Interval& cover = f.intervals()[j];
    if (!(cover.lo <= iv.lo && iv.hi <= cover.hi)) return false;
  }
  return true;
}

std::vector<Rational> boundary(const ElementarySet& e) {
  std::vector<Rational> out;
  const Ambient& ambient = e.ambient();
  auto interior_point = [&](const ExtendedRational& x) {
    return x.finite() && ambient.lo() < x && x < ambient.hi();
  };
  for (const Interval& iv : e.intervals()) {
    if (interior_point(iv.lo)) out.push_back(iv.lo.value());
    if (interior_point(iv.hi)) out.push_back(iv.hi.value());
  }
  return out;
}

ElementarySet extend(const ElementarySet& e) {
  const Ambient& ambient = e.ambient();
  if (ambient.kind() == AmbientKind::ClosedInterval) return e;
  if (ambient.kind() != AmbientKind::OpenInterval || !ambient.bounded())
    fail(ErrorCode::UnboundedAmbient, "extension needs a bounded open ambient");
  // int(clos(E)) in [a,b]: with strict gaps the interval data is unchanged;
  // endpoints touching a or b become relatively open half-open pieces.
  Ambient compact = Ambient::closed(ambient.lo().value(), ambient.hi().value());
  return ElementarySet::from_normal_intervals(e.intervals(), compact);
}

ElementarySet restrict_to_open(const ElementarySet& e) {
  const Ambient& ambient = e.ambient();
  if (ambient.kind() != AmbientKind::ClosedInterval)
    fail(ErrorCode::AmbientMismatch, "restriction expects a closed ambient");
  Ambient open = Ambient::open(ambient.lo(), ambient.hi());
  return ElementarySet::from_normal_intervals(e.intervals(), open);
}

}  // namespace credal
