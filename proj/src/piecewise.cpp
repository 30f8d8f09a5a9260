#include "credal/piecewise.hpp"

#include <algorithm>

#include "credal/error.hpp"

namespace credal {

PiecewiseAffine PiecewiseAffine::make(std::vector<Rational> breakpoints, std::vector<Rational> values,
                                      const Ambient& ambient) {
  if (breakpoints.empty() || breakpoints.size() != values.size())
    fail(ErrorCode::InvalidArgument, "need matching nonempty breakpoints and values");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1]))
      fail(ErrorCode::InvalidArgument, "breakpoints must strictly increase");
  }
  ExtendedRational first(breakpoints.front()), last(breakpoints.back());
  if (first < ambient.lo() || ambient.hi() < last)
    fail(ErrorCode::OutOfAmbient, "breakpoints escape the ambient closure");
  return PiecewiseAffine(ambient, std::move(breakpoints), std::move(values));
}

PiecewiseAffine PiecewiseAffine::constant(const Rational& value, const Ambient& ambient) {
  Rational x0 = 0;
  if (ambient.lo().finite()) {
    x0 = ambient.lo().value();
  } else if (ambient.hi().finite()) {
    x0 = ambient.hi().value();
  }
  return PiecewiseAffine(ambient, {x0}, {value});
}

Rational PiecewiseAffine::eval(const Rational& x) const {
  if (x <= xs_.front()) return ys_.front();
  if (x >= xs_.back()) return ys_.back();
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  const Rational& u = xs_[i];
  const Rational& v = xs_[i + 1];
  return ys_[i] + (ys_[i + 1] - ys_[i]) * (x - u) / (v - u);
}

Rational PiecewiseAffine::eval_extended(const ExtendedRational& x) const {
  switch (x.kind()) {
    case ExtendedRational::Kind::NegInf:
      return ys_.front();
    case ExtendedRational::Kind::PosInf:
      return ys_.back();
    default:
      return eval(x.value());
  }
}

Rational PiecewiseAffine::min_value() const { return *std::min_element(ys_.begin(), ys_.end()); }
Rational PiecewiseAffine::max_value() const { return *std::max_element(ys_.begin(), ys_.end()); }

Rational PiecewiseAffine::sup_norm() const { return max(abs(min_value()), abs(max_value())); }

bool PiecewiseAffine::is_constant() const {
  return std::all_of(ys_.begin(), ys_.end(), [&](const Rational& y) { return y == ys_.front(); });
}

namespace {

struct ClosedSpan {
  ExtendedRational lo, hi;  // lo <= hi; degenerate spans allowed until merged
};

// Interior of a finite union of closed spans, as an elementary set.
ElementarySet interiorize(std::vector<ClosedSpan> spans, const Ambient& ambient) {
  std::sort(spans.begin(), spans.end(), [](const ClosedSpan& a, const ClosedSpan& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  std::vector<ClosedSpan> merged;
  for (ClosedSpan& s : spans) {
    if (!merged.empty() && s.lo <= merged.back().hi) {
      merged.back().hi = max(merged.back().hi, s.hi);
    } else {
      merged.push_back(std::move(s));
    }
  }
  std::vector<Interval> out;
  for (const ClosedSpan& s : merged) {
    if (s.lo < s.hi) out.push_back(Interval{s.lo, s.hi});
  }
  return ElementarySet::from_normal_intervals(std::move(out), ambient);
}

}  // namespace

ElementarySet PiecewiseAffine::preimage_interior(const ExtendedRational& c, const ExtendedRational& d) const {
  if (d < c) fail(ErrorCode::InvalidArgument, "level interval requires c <= d");
  std::vector<ClosedSpan> spans;
  auto add_constant = [&](const ExtendedRational& lo, const ExtendedRational& hi, const Rational& y) {
    ExtendedRational level(y);
    if (c <= level && level <= d) spans.push_back(ClosedSpan{lo, hi});
  };

  ExtendedRational first(xs_.front()), last(xs_.back());
  if (ambient_.lo() < first) add_constant(ambient_.lo(), first, ys_.front());
  if (last < ambient_.hi()) add_constant(last, ambient_.hi(), ys_.back());

  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
    const Rational &u = xs_[i], &v = xs_[i + 1];
    const Rational &yu = ys_[i], &yv = ys_[i + 1];
    if (yu == yv) {
      add_constant(ExtendedRational(u), ExtendedRational(v), yu);
      continue;
    }
    ExtendedRational piece_min(min(yu, yv)), piece_max(max(yu, yv));
    if (d < piece_min || piece_max < c) continue;
    Rational slope = (yv - yu) / (v - u);
    auto solve = [&](const Rational& level) { return Rational(u + (level - yu) / slope); };
    // The solution on a strictly monotone piece is one closed interval.
    Rational xa = u, xb = v;
    if (slope > 0) {
      if (c.finite() && ExtendedRational(yu) < c) xa = solve(c.value());
      if (d.finite() && d < ExtendedRational(yv)) xb = solve(d.value());
    } else {
      if (d.finite() && d < ExtendedRational(yu)) xa = solve(d.value());
      if (c.finite() && ExtendedRational(yv) < c) xb = solve(c.value());
    }
    if (xa <= xb) spans.push_back(ClosedSpan{ExtendedRational(xa), ExtendedRational(xb)});
  }
  return interiorize(std::move(spans), ambient_);
}

Rational PiecewiseAffine::integral_over(const Rational& u, const Rational& v) const {
  if (v < u) fail(ErrorCode::InvalidArgument, "integral bounds out of order");
  std::vector<Rational> cuts{u};
  for (const Rational& x : xs_) {
    if (u < x && x < v) cuts.push_back(x);
  }
  cuts.push_back(v);
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += (eval(cuts[i]) + eval(cuts[i + 1])) * (cuts[i + 1] - cuts[i]) / 2;
  return total;
}

Rational PiecewiseAffine::integral_over(const ElementarySet& e) const {
  Rational total = 0;
  for (const Interval& iv : e.intervals()) {
    if (!iv.lo.finite() || !iv.hi.finite())
      fail(ErrorCode::UnboundedAmbient, "exact integral needs a bounded set");
    total += integral_over(iv.lo.value(), iv.hi.value());
  }
  return total;
}

std::vector<Rational> PiecewiseAffine::level_crossings(const Rational& r) const {
  std::vector<Rational> out;
  auto keep = [&](const Rational& x) {
    ExtendedRational p(x);
    if (ambient_.lo() < p && p < ambient_.hi()) out.push_back(x);
  };
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
    const Rational &yu = ys_[i], &yv = ys_[i + 1];
    if (yu == yv) continue;
    if (min(yu, yv) <= r && r <= max(yu, yv)) {
      Rational slope = (yv - yu) / (xs_[i + 1] - xs_[i]);
      keep(xs_[i] + (r - yu) / slope);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PiecewiseAffine PiecewiseAffine::operator+(const PiecewiseAffine& other) const {
  if (ambient_ != other.ambient_) fail(ErrorCode::AmbientMismatch, "sum needs one ambient");
  std::vector<Rational> xs = xs_;
  xs.insert(xs.end(), other.xs_.begin(), other.xs_.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const Rational& x : xs) ys.push_back(eval(x) + other.eval(x));
  return PiecewiseAffine(ambient_, std::move(xs), std::move(ys));
}

PiecewiseAffine PiecewiseAffine::operator*(const Rational& scale) const {
  std::vector<Rational> ys;
  ys.reserve(ys_.size());
  for (const Rational& y : ys_) ys.push_back(y * scale);
  return PiecewiseAffine(ambient_, xs_, std::move(ys));
}

PiecewiseAffine PiecewiseAffine::operator+(const Rational& shift) const {
  std::vector<Rational> ys;
  ys.reserve(ys_.size());
  for (const Rational& y : ys_) ys.push_back(y + shift);
  return PiecewiseAffine(ambient_, xs_, std::move(ys));
}

}  // namespace credal
