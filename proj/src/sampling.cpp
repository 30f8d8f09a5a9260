#include "credal/sampling.hpp"

#include <algorithm>

#include "credal/error.hpp"

namespace credal {

Rational random_rational(Rng& rng, long max_den, const Rational& lo, const Rational& hi) {
  if (hi < lo) fail(ErrorCode::InvalidArgument, "empty sampling range");
  for (long den = std::uniform_int_distribution<long>(1, max_den)(rng);; den *= 2) {
    Rational q(den);
    long p_lo = floor_long(lo * q) + ((lo * q) == floor_rational(lo * q) ? 0 : 1);
    long p_hi = floor_long(hi * q);
    if (p_lo <= p_hi) {
      long p = std::uniform_int_distribution<long>(p_lo, p_hi)(rng);
      return make_rational(p, den);
    }
  }
}

std::vector<Rational> random_increasing(Rng& rng, std::size_t count, long max_den, const Rational& lo,
                                        const Rational& hi) {
  std::vector<Rational> points;
  Rational left = lo, right = hi;
  Rational margin = (hi - lo) / static_cast<long>(4 * count + 4);
  std::vector<Rational> raw;
  for (std::size_t i = 0; i < count * 3 && raw.size() < count; ++i) {
    Rational x = random_rational(rng, max_den, left + margin, right - margin);
    if (std::find(raw.begin(), raw.end(), x) == raw.end()) raw.push_back(x);
  }
  std::sort(raw.begin(), raw.end());
  return raw;
}

namespace {

// Finite window to sample inside, even on unbounded ambients.
std::pair<Rational, Rational> sampling_window(const Ambient& ambient) {
  Rational lo = ambient.lo().finite() ? ambient.lo().value() : Rational(-8);
  Rational hi = ambient.hi().finite() ? ambient.hi().value() : Rational(8);
  return {lo, hi};
}

}  // namespace

ElementarySet random_elementary(Rng& rng, const Ambient& ambient, int max_intervals, long max_den) {
  int pieces = std::uniform_int_distribution<int>(0, max_intervals)(rng);
  if (pieces == 0) return ElementarySet::empty(ambient);
  auto [lo, hi] = sampling_window(ambient);
  std::vector<Rational> cuts = random_increasing(rng, static_cast<std::size_t>(2 * pieces), max_den, lo, hi);
  if (cuts.size() < 2) return ElementarySet::empty(ambient);
  if (cuts.size() % 2 != 0) cuts.pop_back();
  std::vector<Interval> intervals;
  for (std::size_t i = 0; i + 1 < cuts.size(); i += 2)
    intervals.push_back(Interval{ExtendedRational(cuts[i]), ExtendedRational(cuts[i + 1])});
  // Occasionally run out to the ambient ends.
  if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) intervals.front().lo = ambient.lo();
  if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) intervals.back().hi = ambient.hi();
  return ElementarySet::from_normal_intervals(std::move(intervals), ambient);
}

ElementarySet random_nonempty_elementary(Rng& rng, const Ambient& ambient, int max_intervals, long max_den) {
  for (int tries = 0; tries < 64; ++tries) {
    ElementarySet e = random_elementary(rng, ambient, max_intervals, max_den);
    if (!e.is_empty()) return e;
  }
  return ElementarySet::full(ambient);
}

BPartition random_partition(Rng& rng, const ElementarySet& target, int max_cells, long max_den) {
  if (target.is_empty()) fail(ErrorCode::InvalidArgument, "cannot partition the empty set");
  // Split each interval at a few interior points, then deal the resulting
  // pieces into groups; touching pieces in one group merge back.
  std::vector<ElementarySet> pieces;
  for (const Interval& iv : target.intervals()) {
    Rational lo = iv.lo.finite() ? iv.lo.value() : Rational(-12);
    Rational hi = iv.hi.finite() ? iv.hi.value() : Rational(12);
    int cuts = std::uniform_int_distribution<int>(0, 2)(rng);
    std::vector<Rational> inner =
        cuts > 0 ? random_increasing(rng, static_cast<std::size_t>(cuts), max_den, lo, hi)
                 : std::vector<Rational>{};
    ExtendedRational prev = iv.lo;
    for (const Rational& c : inner) {
      pieces.push_back(ElementarySet::single(prev, ExtendedRational(c), target.ambient()));
      prev = ExtendedRational(c);
    }
    pieces.push_back(ElementarySet::single(prev, iv.hi, target.ambient()));
  }
  int groups = std::uniform_int_distribution<int>(1, max_cells)(rng);
  std::vector<std::vector<Interval>> buckets(static_cast<std::size_t>(groups));
  for (const ElementarySet& piece : pieces) {
    auto& bucket = buckets[std::uniform_int_distribution<std::size_t>(0, buckets.size() - 1)(rng)];
    bucket.insert(bucket.end(), piece.intervals().begin(), piece.intervals().end());
  }
  std::vector<ElementarySet> cells;
  for (auto& bucket : buckets) {
    if (bucket.empty()) continue;
    cells.push_back(regularize(std::move(bucket), target.ambient()));
  }
  return BPartition::make(target, std::move(cells));
}

PiecewiseAffine random_piecewise(Rng& rng, const Ambient& ambient, int max_breaks, long max_den, long span) {
  auto [lo, hi] = sampling_window(ambient);
  int inner = std::uniform_int_distribution<int>(0, max_breaks)(rng);
  std::vector<Rational> xs = random_increasing(rng, static_cast<std::size_t>(inner), max_den, lo, hi);
  xs.insert(xs.begin(), lo);
  xs.push_back(hi);
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    ys.push_back(random_rational(rng, max_den, Rational(-span), Rational(span)));
  return PiecewiseAffine::make(std::move(xs), std::move(ys), ambient);
}

Credence random_mixture(Rng& rng, const Ambient& ambient, long max_den) {
  std::vector<Credence> pool;
  if (ambient.bounded()) pool.push_back(Credence::lebesgue(ambient));
  auto [lo, hi] = sampling_window(ambient);
  for (int i = 0; i < 2; ++i) {
    Rational x = random_rational(rng, max_den, lo, hi);
    ExtendedRational p(x);
    Side side = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? Side::Left : Side::Right;
    if (p == ambient.lo()) side = Side::Right;
    if (p == ambient.hi()) side = Side::Left;
    pool.push_back(Credence::point_mass(ambient, x, side));
  }
  pool.push_back(Credence::end_mass(ambient, EndKind::AmbientLeft));
  pool.push_back(Credence::end_mass(ambient, EndKind::AmbientRight));

  int count = std::uniform_int_distribution<int>(1, 3)(rng);
  std::vector<std::pair<Rational, Credence>> parts;
  long total = 0;
  std::vector<long> raw;
  for (int i = 0; i < count; ++i) {
    long w = std::uniform_int_distribution<long>(1, 9)(rng);
    raw.push_back(w);
    total += w;
  }
  for (int i = 0; i < count; ++i) {
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
    parts.emplace_back(make_rational(raw[static_cast<std::size_t>(i)], total), pool[pick]);
  }
  return count == 1 ? parts[0].second : Credence::mixture(std::move(parts));
}

MonotoneAffineMap random_monotone_map(Rng& rng, const Ambient& domain, int max_breaks, long max_den) {
  auto [lo, hi] = sampling_window(domain);
  int inner = std::uniform_int_distribution<int>(0, max_breaks)(rng);
  std::vector<Rational> xs = random_increasing(rng, static_cast<std::size_t>(inner), max_den, lo, hi);
  xs.insert(xs.begin(), lo);
  xs.push_back(hi);
  bool increasing = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  std::vector<Rational> ys;
  Rational y = random_rational(rng, max_den, Rational(-4), Rational(4));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ys.push_back(y);
    Rational step = random_rational(rng, max_den, make_rational(1, 4), Rational(3));
    y += increasing ? step : -step;
  }
  Ambient codomain = Ambient::full_line();
  if (domain.kind() != AmbientKind::FullLine) {
    ExtendedRational img_lo = domain.lo().finite() ? ExtendedRational(increasing ? ys.front() : ys.back())
                                                   : (increasing ? ExtendedRational::neg_inf()
                                                                 : ExtendedRational::pos_inf());
    ExtendedRational img_hi = domain.hi().finite() ? ExtendedRational(increasing ? ys.back() : ys.front())
                                                   : (increasing ? ExtendedRational::pos_inf()
                                                                 : ExtendedRational::neg_inf());
    ExtendedRational a = min(img_lo, img_hi), b = max(img_lo, img_hi);
    codomain = domain.kind() == AmbientKind::ClosedInterval ? Ambient::closed(a.value(), b.value())
                                                            : Ambient::open(a, b);
  }
  return MonotoneAffineMap::make(std::move(xs), std::move(ys), domain, codomain);
}

std::vector<Ambient> sample_ambients() {
  return {Ambient::full_line(), Ambient::open(ExtendedRational(0), ExtendedRational(1)),
          Ambient::open(ExtendedRational(-1), ExtendedRational(1)),
          Ambient::open(ExtendedRational::neg_inf(), ExtendedRational(0)), Ambient::closed(0, 1),
          Ambient::closed(-2, 3)};
}

}  // namespace credal
