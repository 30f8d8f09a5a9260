#include "credal/credence.hpp"

#include <algorithm>

#include "credal/error.hpp"
#include "credal/maps.hpp"
#include "credal/partition.hpp"

namespace credal {

Credence Credence::lebesgue(const Ambient& ambient) {
  if (!ambient.bounded()) fail(ErrorCode::Unnormalizable, "Lebesgue needs a bounded ambient");
  return Credence(ambient, Lebesgue{});
}

Credence Credence::point_mass(const Ambient& ambient, const Rational& x, Side side) {
  ExtendedRational p(x);
  if (p < ambient.lo() || ambient.hi() < p)
    fail(ErrorCode::OutOfAmbient, "point mass outside the ambient closure");
  // The germ must point into the space, else no set would carry the mass.
  if (p == ambient.lo() && side == Side::Left)
    fail(ErrorCode::InvalidArgument, "left germ at the left end of the ambient");
  if (p == ambient.hi() && side == Side::Right)
    fail(ErrorCode::InvalidArgument, "right germ at the right end of the ambient");
  return Credence(ambient, PointMass{x, side});
}

Credence Credence::end_mass(const Ambient& ambient, EndKind end) {
  switch (end) {
    case EndKind::NegInf:
      if (ambient.lo().finite()) fail(ErrorCode::InvalidArgument, "ambient does not reach -inf");
      break;
    case EndKind::PosInf:
      if (ambient.hi().finite()) fail(ErrorCode::InvalidArgument, "ambient does not reach +inf");
      break;
    case EndKind::AmbientLeft:
      if (!ambient.lo().finite()) end = EndKind::NegInf;
      break;
    case EndKind::AmbientRight:
      if (!ambient.hi().finite()) end = EndKind::PosInf;
      break;
  }
  return Credence(ambient, EndMass{end});
}

Credence Credence::atom_table(std::shared_ptr<const FiniteAlgebra> algebra, std::vector<Rational> weights) {
  if (!algebra) fail(ErrorCode::InvalidArgument, "missing algebra");
  if (weights.size() != algebra->atom_count())
    fail(ErrorCode::InvalidArgument, "one weight per atom required");
  Rational total = 0;
  for (const Rational& w : weights) {
    if (w < 0) fail(ErrorCode::InvalidArgument, "atom weights must be nonnegative");
    total += w;
  }
  if (total != 1) fail(ErrorCode::InvalidArgument, "atom weights must sum to 1");
  Ambient ambient = algebra->ambient();
  return Credence(ambient, AtomTable{std::move(algebra), std::move(weights)});
}

Credence Credence::mixture(std::vector<std::pair<Rational, Credence>> parts) {
  if (parts.empty()) fail(ErrorCode::InvalidArgument, "empty mixture");
  Rational total = 0;
  for (const auto& [w, part] : parts) {
    if (w <= 0) fail(ErrorCode::InvalidArgument, "mixture weights must be positive");
    if (part.ambient() != parts.front().second.ambient())
      fail(ErrorCode::AmbientMismatch, "mixture parts over different ambients");
    total += w;
  }
  if (total != 1) fail(ErrorCode::InvalidArgument, "mixture weights must sum to 1");
  Ambient ambient = parts.front().second.ambient();
  return Credence(ambient, Mixture{std::move(parts)});
}

Credence Credence::image(std::shared_ptr<const MonotoneAffineMap> map, Credence base) {
  if (!map) fail(ErrorCode::InvalidArgument, "missing map");
  if (map->domain() != base.ambient()) fail(ErrorCode::AmbientMismatch, "image base lives off the domain");
  Ambient ambient = map->codomain();
  return Credence(ambient, Image{std::move(map), std::make_shared<const Credence>(std::move(base))});
}

namespace {

bool right_germ_inside(const ElementarySet& e, const Rational& x) {
  ExtendedRational p(x);
  for (const Interval& iv : e.intervals()) {
    if (iv.lo <= p && p < iv.hi) return true;
  }
  return false;
}

bool left_germ_inside(const ElementarySet& e, const Rational& x) {
  ExtendedRational p(x);
  for (const Interval& iv : e.intervals()) {
    if (iv.lo < p && p <= iv.hi) return true;
  }
  return false;
}

}  // namespace

Rational eval(const Credence& mu, const ElementarySet& e) {
  if (e.ambient() != mu.ambient())
    fail(ErrorCode::AmbientMismatch, "set over " + e.ambient().describe() + ", credence over " +
                                         mu.ambient().describe());
  if (mu.is_lebesgue()) {
    return e.length().value() / mu.ambient().length().value();
  }
  if (mu.is_point_mass()) {
    const auto& pm = mu.as_point_mass();
    bool in = pm.side == Side::Right ? right_germ_inside(e, pm.x) : left_germ_inside(e, pm.x);
    return in ? 1 : 0;
  }
  if (mu.is_end_mass()) {
    if (e.is_empty()) return 0;
    switch (mu.as_end_mass().end) {
      case EndKind::NegInf:
      case EndKind::AmbientLeft:
        return e.intervals().front().lo == mu.ambient().lo() ? 1 : 0;
      case EndKind::PosInf:
      case EndKind::AmbientRight:
        return e.intervals().back().hi == mu.ambient().hi() ? 1 : 0;
    }
  }
  if (mu.is_atom_table()) {
    const auto& table = mu.as_atom_table();
    auto mask = table.algebra->mask_of(e);
    if (!mask) fail(ErrorCode::NotInAlgebra, "set " + e.describe() + " is not in the finite algebra");
    Rational total = 0;
    for (std::size_t i = 0; i < table.weights.size(); ++i) {
      if (*mask & (AtomMask(1) << i)) total += table.weights[i];
    }
    return total;
  }
  if (mu.is_mixture()) {
    Rational total = 0;
    for (const auto& [w, part] : mu.as_mixture().parts) total += w * eval(part, e);
    return total;
  }
  const auto& img = mu.as_image();
  return eval(*img.base, preimage(*img.map, e));
}

bool check_additivity(const Credence& mu, const BPartition& partition) {
  BPartition::make(partition.target, partition.cells);  // throws unless a real partition
  Rational total = 0;
  for (const ElementarySet& cell : partition.cells) total += eval(mu, cell);
  return total == eval(mu, partition.target);
}

Credence extend_to_refinement(const Credence& mu, std::shared_ptr<const FiniteAlgebra> finer) {
  if (!mu.is_atom_table()) fail(ErrorCode::UnsupportedRule, "refinement extension expects an atom table");
  const auto& table = mu.as_atom_table();
  const FiniteAlgebra& coarse = *table.algebra;
  if (!finer || !coarse.refined_by(*finer))
    fail(ErrorCode::NotARefinement, "target algebra does not refine the table's algebra");

  std::vector<Rational> weights(finer->atom_count(), Rational(0));
  for (std::size_t c = 0; c < coarse.atom_count(); ++c) {
    const ElementarySet& coarse_atom = coarse.atoms()[c];
    std::vector<std::size_t> below;
    bool lengths_ok = true;
    Rational total_length = 0;
    for (std::size_t i = 0; i < finer->atom_count(); ++i) {
      if (!subset(finer->atoms()[i], coarse_atom)) continue;
      below.push_back(i);
      ExtendedRational len = finer->atoms()[i].length();
      if (len.finite()) {
        total_length += len.value();
      } else {
        lengths_ok = false;
      }
    }
    if (below.empty()) fail(ErrorCode::NotARefinement, "coarse atom with no refining atoms");
    bool proportional = lengths_ok && total_length > 0;
    for (std::size_t i : below) {
      if (proportional) {
        weights[i] = table.weights[c] * finer->atoms()[i].length().value() / total_length;
      } else {
        weights[i] = table.weights[c] / static_cast<long>(below.size());
      }
    }
  }
  return Credence::atom_table(std::move(finer), std::move(weights));
}

}  // namespace credal
