#include "credal/integrator.hpp"

#include <algorithm>

#include "credal/error.hpp"
#include "credal/maps.hpp"

namespace credal {

Rational simple_integral(const SimpleFunction& f, const Credence& mu, const ElementarySet& b) {
  if (b.ambient() != mu.ambient()) fail(ErrorCode::AmbientMismatch, "set lives off the credence's ambient");
  if (b.is_empty()) return 0;  // the unique additive value on the empty set
  Rational total = 0;
  for (std::size_t i = 0; i < f.partition.cells.size(); ++i) {
    ElementarySet piece = meet(f.partition.cells[i], b);
    if (piece.is_empty()) continue;
    total += f.values[i] * eval(mu, piece);
  }
  return total;
}

SimpleFunction level_minorant(const PiecewiseAffine& g, long n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "level count must be >= 1");
  const Ambient& ambient = g.ambient();
  Rational step = make_rational(1, n);

  // Critical points: interior breakpoints plus every crossing of a level
  // m/n inside an affine piece.  Between consecutive critical points g
  // stays within one band.
  std::vector<Rational> cuts;
  auto keep = [&](const Rational& x) {
    ExtendedRational p(x);
    if (ambient.lo() < p && p < ambient.hi()) cuts.push_back(x);
  };
  const auto& xs = g.breakpoints();
  const auto& ys = g.values();
  for (const Rational& x : xs) keep(x);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (ys[i] == ys[i + 1]) continue;
    Rational lo = min(ys[i], ys[i + 1]) * n, hi = max(ys[i], ys[i + 1]) * n;
    Rational slope = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    for (Rational m = floor_rational(lo); m <= hi; m += 1) {
      if (m < lo) continue;
      Rational level = m / n;
      keep(xs[i] + (level - ys[i]) / slope);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<ExtendedRational> bounds;
  bounds.push_back(ambient.lo());
  for (const Rational& c : cuts) bounds.push_back(ExtendedRational(c));
  bounds.push_back(ambient.hi());

  std::vector<Interval> cells;
  std::vector<Rational> values;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const ExtendedRational& p = bounds[i];
    const ExtendedRational& q = bounds[i + 1];
    if (!(p < q)) continue;
    Rational sample;
    if (p.finite() && q.finite()) {
      sample = (p.value() + q.value()) / 2;
    } else if (p.finite()) {
      sample = p.value() + 1;
    } else if (q.finite()) {
      sample = q.value() - 1;
    } else {
      sample = 0;
    }
    Rational value = floor_rational(g.eval(sample) * n) * step;
    if (!cells.empty() && cells.back().hi == p && values.back() == value) {
      cells.back().hi = q;  // same band continues across the touch point
    } else {
      cells.push_back(Interval{p, q});
      values.push_back(std::move(value));
    }
  }

  std::vector<ElementarySet> cell_sets;
  cell_sets.reserve(cells.size());
  for (const Interval& iv : cells)
    cell_sets.push_back(ElementarySet::single(iv.lo, iv.hi, ambient));
  return SimpleFunction::make(BPartition::make(ElementarySet::full(ambient), std::move(cell_sets)),
                              std::move(values));
}

Rational integrate(const PiecewiseAffine& g, const Credence& mu, const ElementarySet& b,
                   const Rational& eps) {
  if (eps <= 0) fail(ErrorCode::InvalidArgument, "eps must be positive");
  if (b.is_empty()) return 0;
  return simple_integral(level_minorant(g, ceil_reciprocal(eps)), mu, b);
}

namespace {

// g restricted to the set must be a single constant; boundary values do not
// count.
bool constant_value_on(const PiecewiseAffine& g, const ElementarySet& set, Rational* out) {
  bool have = false;
  Rational value = 0;
  auto take = [&](const Rational& y) {
    if (!have) {
      value = y;
      have = true;
      return true;
    }
    return y == value;
  };
  for (const Interval& iv : set.intervals()) {
    if (!take(g.eval_extended(iv.lo)) || !take(g.eval_extended(iv.hi))) return false;
    for (const Rational& x : g.breakpoints()) {
      ExtendedRational p(x);
      if (iv.lo < p && p < iv.hi && !take(g.eval(x))) return false;
    }
  }
  if (have && out != nullptr) *out = value;
  return have;
}

}  // namespace

Rational integrate_exact(const PiecewiseAffine& g, const Credence& mu, const ElementarySet& b) {
  if (b.ambient() != mu.ambient() || g.ambient() != mu.ambient())
    fail(ErrorCode::AmbientMismatch, "integrand, credence and set must share one ambient");
  if (b.is_empty()) return 0;
  if (mu.is_lebesgue()) {
    return g.integral_over(b) / mu.ambient().length().value();
  }
  if (mu.is_point_mass()) {
    return g.eval(mu.as_point_mass().x) * eval(mu, b);
  }
  if (mu.is_end_mass()) {
    Rational germ_value;
    switch (mu.as_end_mass().end) {
      case EndKind::NegInf:
        germ_value = g.values().front();
        break;
      case EndKind::PosInf:
        germ_value = g.values().back();
        break;
      case EndKind::AmbientLeft:
        germ_value = g.eval(mu.ambient().lo().value());
        break;
      case EndKind::AmbientRight:
        germ_value = g.eval(mu.ambient().hi().value());
        break;
    }
    return germ_value * eval(mu, b);
  }
  if (mu.is_atom_table()) {
    const auto& table = mu.as_atom_table();
    auto mask = table.algebra->mask_of(b);
    if (!mask) fail(ErrorCode::NotInAlgebra, "set is not in the atom table's algebra");
    Rational total = 0;
    for (std::size_t i = 0; i < table.weights.size(); ++i) {
      if (!(*mask & (AtomMask(1) << i))) continue;
      Rational value;
      if (!constant_value_on(g, table.algebra->atoms()[i], &value))
        fail(ErrorCode::UnsupportedRule, "integrand is not constant on an atom");
      total += value * table.weights[i];
    }
    return total;
  }
  if (mu.is_mixture()) {
    Rational total = 0;
    for (const auto& [w, part] : mu.as_mixture().parts) total += w * integrate_exact(g, part, b);
    return total;
  }
  const auto& img = mu.as_image();
  return integrate_exact(compose(g, *img.map), *img.base, preimage(*img.map, b));
}

Rational conditional_expectation(const PiecewiseAffine& g, const Credence& mu, const ElementarySet& b,
                                 const Rational& eps) {
  Rational mass = eval(mu, b);
  if (mass == 0) fail(ErrorCode::ZeroMassConditioning, "conditioning set carries no mass");
  return integrate(g, mu, b, eps) / mass;
}

Rational conditional_expectation_exact(const PiecewiseAffine& g, const Credence& mu, const ElementarySet& b) {
  Rational mass = eval(mu, b);
  if (mass == 0) fail(ErrorCode::ZeroMassConditioning, "conditioning set carries no mass");
  return integrate_exact(g, mu, b) / mass;
}

}  // namespace credal
