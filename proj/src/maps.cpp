#include "credal/maps.hpp"

#include <algorithm>

#include "credal/error.hpp"
#include "credal/integrator.hpp"

namespace credal {

MonotoneAffineMap MonotoneAffineMap::make(std::vector<Rational> breakpoints, std::vector<Rational> values,
                                          const Ambient& domain, const Ambient& codomain) {
  if (breakpoints.size() < 2 || breakpoints.size() != values.size())
    fail(ErrorCode::InvalidArgument, "need at least two matching breakpoint/value pairs");
  bool increasing = values[1] > values[0];
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1]))
      fail(ErrorCode::InvalidArgument, "breakpoints must strictly increase");
    bool up = values[i + 1] > values[i];
    if (values[i + 1] == values[i] || up != increasing)
      fail(ErrorCode::InvalidArgument, "slopes must be strictly monotone of one sign");
  }
  ExtendedRational first(breakpoints.front()), last(breakpoints.back());
  if (first < domain.lo() || domain.hi() < last)
    fail(ErrorCode::OutOfAmbient, "breakpoints escape the domain closure");
  if ((domain.kind() == AmbientKind::ClosedInterval) != (codomain.kind() == AmbientKind::ClosedInterval))
    fail(ErrorCode::AmbientMismatch, "a monotone bijection cannot mix closed and open ambients");
  MonotoneAffineMap map(domain, codomain, std::move(breakpoints), std::move(values), increasing);
  ExtendedRational lo_image = map.apply_extended(domain.lo());
  ExtendedRational hi_image = map.apply_extended(domain.hi());
  if (min(lo_image, hi_image) != codomain.lo() || max(lo_image, hi_image) != codomain.hi())
    fail(ErrorCode::AmbientMismatch, "map does not carry the domain onto the codomain");
  return map;
}

MonotoneAffineMap MonotoneAffineMap::identity(const Ambient& ambient) {
  return affine(1, 0, ambient, ambient);
}

MonotoneAffineMap MonotoneAffineMap::affine(const Rational& scale, const Rational& shift, const Ambient& domain,
                                            const Ambient& codomain) {
  if (scale == 0) fail(ErrorCode::InvalidArgument, "affine map needs a nonzero slope");
  Rational x0 = 0, x1 = 1;
  if (domain.bounded()) {
    x0 = domain.lo().value();
    x1 = domain.hi().value();
  } else if (domain.lo().finite()) {
    x0 = domain.lo().value();
    x1 = x0 + 1;
  } else if (domain.hi().finite()) {
    x1 = domain.hi().value();
    x0 = x1 - 1;
  }
  return make({x0, x1}, {scale * x0 + shift, scale * x1 + shift}, domain, codomain);
}

bool MonotoneAffineMap::globally_affine() const {
  if (xs_.size() == 2) return true;
  Rational slope = (ys_[1] - ys_[0]) / (xs_[1] - xs_[0]);
  for (std::size_t i = 1; i + 1 < xs_.size(); ++i) {
    if ((ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]) != slope) return false;
  }
  return true;
}

Rational MonotoneAffineMap::apply(const Rational& x) const {
  std::size_t i;
  if (x <= xs_.front()) {
    i = 0;
  } else if (x >= xs_.back()) {
    i = xs_.size() - 2;
  } else {
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  }
  return ys_[i] + (ys_[i + 1] - ys_[i]) * (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
}

ExtendedRational MonotoneAffineMap::apply_extended(const ExtendedRational& x) const {
  if (x.finite()) return ExtendedRational(apply(x.value()));
  bool at_pos = x.kind() == ExtendedRational::Kind::PosInf;
  return at_pos == increasing_ ? ExtendedRational::pos_inf() : ExtendedRational::neg_inf();
}

Rational MonotoneAffineMap::invert(const Rational& y) const {
  std::size_t i = 0;
  if (increasing_) {
    while (i + 2 < ys_.size() && ys_[i + 1] < y) ++i;
  } else {
    while (i + 2 < ys_.size() && y < ys_[i + 1]) ++i;
  }
  return xs_[i] + (y - ys_[i]) * (xs_[i + 1] - xs_[i]) / (ys_[i + 1] - ys_[i]);
}

ExtendedRational MonotoneAffineMap::invert_extended(const ExtendedRational& y) const {
  if (y.finite()) return ExtendedRational(invert(y.value()));
  bool at_pos = y.kind() == ExtendedRational::Kind::PosInf;
  return at_pos == increasing_ ? ExtendedRational::pos_inf() : ExtendedRational::neg_inf();
}

MonotoneAffineMap MonotoneAffineMap::inverse() const {
  std::vector<Rational> xs = ys_, ys = xs_;
  if (!increasing_) {
    std::reverse(xs.begin(), xs.end());
    std::reverse(ys.begin(), ys.end());
  }
  return MonotoneAffineMap(codomain_, domain_, std::move(xs), std::move(ys), increasing_);
}

ElementarySet preimage(const MonotoneAffineMap& phi, const ElementarySet& b) {
  if (b.ambient() != phi.codomain())
    fail(ErrorCode::AmbientMismatch, "set lives off the map's codomain");
  std::vector<Interval> out;
  out.reserve(b.intervals().size());
  for (const Interval& iv : b.intervals()) {
    ExtendedRational lo = phi.invert_extended(iv.lo);
    ExtendedRational hi = phi.invert_extended(iv.hi);
    out.push_back(phi.increasing() ? Interval{lo, hi} : Interval{hi, lo});
  }
  if (!phi.increasing()) std::reverse(out.begin(), out.end());
  return ElementarySet::from_normal_intervals(std::move(out), phi.domain());
}

ElementarySet copreimage(const PiecewiseAffine& phi, const Ambient& codomain, const ElementarySet& b) {
  if (b.ambient() != codomain) fail(ErrorCode::AmbientMismatch, "set lives off the map's codomain");
  if (ExtendedRational(phi.min_value()) < codomain.lo() || codomain.hi() < ExtendedRational(phi.max_value()))
    fail(ErrorCode::AmbientMismatch, "map range escapes the codomain");
  ElementarySet result = ElementarySet::empty(phi.ambient());
  for (const Interval& iv : b.intervals()) {
    // clos(B) is the disjoint union of the interval closures; preimages of
    // strictly separated closed intervals stay strictly separated.
    result = join(result, phi.preimage_interior(iv.lo, iv.hi));
  }
  return result;
}

namespace {

Side flip(Side side) { return side == Side::Left ? Side::Right : Side::Left; }

EndKind transport_end(EndKind end, bool increasing) {
  if (increasing) return end;
  switch (end) {
    case EndKind::NegInf:
      return EndKind::PosInf;
    case EndKind::PosInf:
      return EndKind::NegInf;
    case EndKind::AmbientLeft:
      return EndKind::AmbientRight;
    case EndKind::AmbientRight:
      return EndKind::AmbientLeft;
  }
  return end;
}

}  // namespace

Credence pushforward(const MonotoneAffineMap& phi, const Credence& mu) {
  if (mu.ambient() != phi.domain()) fail(ErrorCode::AmbientMismatch, "credence lives off the map's domain");
  const Ambient& codomain = phi.codomain();
  if (mu.is_lebesgue()) {
    if (phi.globally_affine()) return Credence::lebesgue(codomain);
    return Credence::image(std::make_shared<MonotoneAffineMap>(phi), mu);
  }
  if (mu.is_point_mass()) {
    const auto& pm = mu.as_point_mass();
    Side side = phi.increasing() ? pm.side : flip(pm.side);
    return Credence::point_mass(codomain, phi.apply(pm.x), side);
  }
  if (mu.is_end_mass()) {
    return Credence::end_mass(codomain, transport_end(mu.as_end_mass().end, phi.increasing()));
  }
  if (mu.is_atom_table()) {
    const auto& table = mu.as_atom_table();
    MonotoneAffineMap inv = phi.inverse();
    struct ImageAtom {
      ElementarySet set;
      Rational weight;
    };
    std::vector<ImageAtom> images;
    images.reserve(table.weights.size());
    std::vector<ElementarySet> generators;
    for (std::size_t i = 0; i < table.weights.size(); ++i) {
      ElementarySet image_set = preimage(inv, table.algebra->atoms()[i]);
      generators.push_back(image_set);
      images.push_back(ImageAtom{std::move(image_set), table.weights[i]});
    }
    auto algebra = std::make_shared<FiniteAlgebra>(FiniteAlgebra::generate(generators, codomain));
    std::vector<Rational> weights(algebra->atom_count(), Rational(0));
    for (std::size_t i = 0; i < algebra->atom_count(); ++i) {
      for (const ImageAtom& img : images) {
        if (img.set == algebra->atoms()[i]) {
          weights[i] = img.weight;
          break;
        }
      }
    }
    return Credence::atom_table(std::move(algebra), std::move(weights));
  }
  if (mu.is_mixture()) {
    std::vector<std::pair<Rational, Credence>> parts;
    parts.reserve(mu.as_mixture().parts.size());
    for (const auto& [w, part] : mu.as_mixture().parts) parts.emplace_back(w, pushforward(phi, part));
    return Credence::mixture(std::move(parts));
  }
  const auto& img = mu.as_image();
  return Credence::image(std::make_shared<MonotoneAffineMap>(phi), Credence::image(img.map, *img.base));
}

PiecewiseAffine compose(const PiecewiseAffine& g, const MonotoneAffineMap& phi) {
  if (g.ambient() != phi.codomain()) fail(ErrorCode::AmbientMismatch, "integrand lives off the codomain");
  std::vector<Rational> xs = phi.breakpoints();
  for (const Rational& y : g.breakpoints()) {
    ExtendedRational level(y);
    if (phi.codomain().lo() <= level && level <= phi.codomain().hi()) xs.push_back(phi.invert(y));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const Rational& x : xs) ys.push_back(g.eval(phi.apply(x)));
  return PiecewiseAffine::make(std::move(xs), std::move(ys), phi.domain());
}

bool change_of_variables_check(const MonotoneAffineMap& phi, const Credence& mu, const PiecewiseAffine& g,
                               const ElementarySet& b, const Rational& eps) {
  ElementarySet a = preimage(phi, b);
  Credence nu = pushforward(phi, mu);
  PiecewiseAffine pulled = compose(g, phi);
  Rational lhs = integrate(pulled, mu, a, eps);
  Rational rhs = integrate(g, nu, b, eps);
  if (abs(lhs - rhs) > 2 * eps) return false;
  try {
    Rational lhs_exact = integrate_exact(pulled, mu, a);
    Rational rhs_exact = integrate_exact(g, nu, b);
    if (lhs_exact != rhs_exact) return false;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedRule && e.code() != ErrorCode::NotInAlgebra) throw;
  }
  return true;
}

}  // namespace credal
