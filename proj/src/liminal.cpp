#include "credal/liminal.hpp"

#include <algorithm>
#include <map>

#include "credal/error.hpp"
#include "credal/integrator.hpp"

namespace credal {

namespace {

struct SideWeights {
  Rational left = 0;
  Rational right = 0;
};

void flatten(const Credence& mu, const Rational& weight, Rational* lebesgue_weight,
             std::map<Rational, SideWeights>* atoms) {
  if (mu.is_lebesgue()) {
    *lebesgue_weight += weight;
    return;
  }
  if (mu.is_point_mass()) {
    const auto& pm = mu.as_point_mass();
    if (pm.side == Side::Left) {
      (*atoms)[pm.x].left += weight;
    } else {
      (*atoms)[pm.x].right += weight;
    }
    return;
  }
  if (mu.is_end_mass()) {
    // On the compact ambient the end germs are the inward point germs.
    switch (mu.as_end_mass().end) {
      case EndKind::AmbientLeft:
        (*atoms)[mu.ambient().lo().value()].right += weight;
        return;
      case EndKind::AmbientRight:
        (*atoms)[mu.ambient().hi().value()].left += weight;
        return;
      default:
        fail(ErrorCode::UnsupportedRule, "free end mass cannot appear on a compact ambient");
    }
  }
  if (mu.is_mixture()) {
    for (const auto& [w, part] : mu.as_mixture().parts) flatten(part, weight * w, lebesgue_weight, atoms);
    return;
  }
  fail(ErrorCode::UnsupportedRule, "decomposition covers Lebesgue and point-mass mixtures only");
}

}  // namespace

LiminalDecomposition decompose(const Credence& mu) {
  if (mu.ambient().kind() != AmbientKind::ClosedInterval)
    fail(ErrorCode::UnsupportedRule, "decomposition needs the compactified ambient");
  Rational lebesgue_weight = 0;
  std::map<Rational, SideWeights> atom_map;
  flatten(mu, 1, &lebesgue_weight, &atom_map);

  LiminalDecomposition dec;
  dec.borel.lebesgue_weight = lebesgue_weight;
  for (const auto& [x, sides] : atom_map) {
    Rational mass = sides.left + sides.right;
    if (mass == 0) continue;
    dec.borel.atoms.push_back(BorelPart::Atom{x, mass});
    dec.rule.shares.push_back(LiminalRule::Share{x, sides.left / mass, sides.right / mass});
  }
  return dec;
}

Rational share_into(const LiminalDecomposition& dec, const ElementarySet& r, const Rational& x) {
  if (r.contains_point(x)) return 1;
  ExtendedRational p(x);
  for (const Interval& iv : r.intervals()) {
    if (p == iv.hi) {  // R approaches x from the left
      for (const auto& share : dec.rule.shares) {
        if (share.x == x) return share.left;
      }
      return 0;
    }
    if (p == iv.lo) {
      for (const auto& share : dec.rule.shares) {
        if (share.x == x) return share.right;
      }
      return 0;
    }
  }
  return 0;  // x outside clos(R)
}

namespace {

Rational borel_mass(const LiminalDecomposition& dec, const Credence& mu, const ElementarySet& r) {
  Rational total = dec.borel.lebesgue_weight * r.length().value() / mu.ambient().length().value();
  for (const auto& atom : dec.borel.atoms) total += share_into(dec, r, atom.x) * atom.mass;
  return total;
}

}  // namespace

bool verify_mass_identity(const Credence& mu, const LiminalDecomposition& dec, const ElementarySet& r) {
  return eval(mu, r) == borel_mass(dec, mu, r);
}

bool verify_integral_identity(const Credence& mu, const LiminalDecomposition& dec, const PiecewiseAffine& g,
                              const ElementarySet& r) {
  Rational rhs = dec.borel.lebesgue_weight * g.integral_over(r) / mu.ambient().length().value();
  for (const auto& atom : dec.borel.atoms) rhs += g.eval(atom.x) * share_into(dec, r, atom.x) * atom.mass;
  return integrate_exact(g, mu, r) == rhs;
}

Credence compactify(const Credence& mu) {
  const Ambient& ambient = mu.ambient();
  if (ambient.kind() == AmbientKind::ClosedInterval) return mu;
  if (!ambient.bounded()) fail(ErrorCode::UnboundedAmbient, "compactification needs finite endpoints");
  Ambient compact = Ambient::closed(ambient.lo().value(), ambient.hi().value());

  if (mu.is_lebesgue()) return Credence::lebesgue(compact);
  if (mu.is_point_mass()) {
    const auto& pm = mu.as_point_mass();
    return Credence::point_mass(compact, pm.x, pm.side);
  }
  if (mu.is_end_mass()) {
    switch (mu.as_end_mass().end) {
      case EndKind::AmbientLeft:
        return Credence::point_mass(compact, ambient.lo().value(), Side::Right);
      case EndKind::AmbientRight:
        return Credence::point_mass(compact, ambient.hi().value(), Side::Left);
      default:
        fail(ErrorCode::UnboundedAmbient, "free end mass on a bounded ambient");
    }
  }
  if (mu.is_mixture()) {
    std::vector<std::pair<Rational, Credence>> parts;
    parts.reserve(mu.as_mixture().parts.size());
    for (const auto& [w, part] : mu.as_mixture().parts) parts.emplace_back(w, compactify(part));
    return Credence::mixture(std::move(parts));
  }
  if (mu.is_atom_table()) {
    const auto& table = mu.as_atom_table();
    std::vector<ElementarySet> generators;
    generators.reserve(table.algebra->atom_count());
    for (const ElementarySet& atom : table.algebra->atoms()) generators.push_back(extend(atom));
    auto algebra = std::make_shared<FiniteAlgebra>(FiniteAlgebra::generate(generators, compact));
    return Credence::atom_table(std::move(algebra), table.weights);
  }
  fail(ErrorCode::UnsupportedRule, "cannot compactify an image credence");
}

}  // namespace credal
