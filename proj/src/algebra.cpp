#include "credal/algebra.hpp"

#include <algorithm>

#include "credal/error.hpp"

namespace credal {

FiniteAlgebra FiniteAlgebra::generate(const std::vector<ElementarySet>& generators, const Ambient& ambient,
                                      std::size_t element_cap) {
  std::vector<ElementarySet> blocks{ElementarySet::full(ambient)};
  for (const ElementarySet& g : generators) {
    if (g.ambient() != ambient) fail(ErrorCode::AmbientMismatch, "generator over a different ambient");
    ElementarySet not_g = neg(g);
    std::vector<ElementarySet> next;
    next.reserve(2 * blocks.size());
    for (const ElementarySet& b : blocks) {
      ElementarySet inside = meet(b, g);
      ElementarySet outside = meet(b, not_g);
      if (!inside.is_empty()) next.push_back(std::move(inside));
      if (!outside.is_empty()) next.push_back(std::move(outside));
    }
    blocks = std::move(next);
    if (blocks.size() >= 8 * sizeof(AtomMask) ||
        (std::size_t(1) << blocks.size()) > element_cap)
      fail(ErrorCode::ClosureTooLarge, "algebra closure exceeds the element cap");
  }
  std::sort(blocks.begin(), blocks.end(), [](const ElementarySet& a, const ElementarySet& b) {
    return a.intervals().front().lo < b.intervals().front().lo;
  });
  return FiniteAlgebra(ambient, generators, std::move(blocks));
}

FiniteAlgebra FiniteAlgebra::from_cuts(const Ambient& ambient, std::vector<Rational> cuts) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts.size() + 1 > 8 * sizeof(AtomMask))
    fail(ErrorCode::ClosureTooLarge, "too many cut points for the atom mask");
  std::vector<ElementarySet> atoms;
  ExtendedRational prev = ambient.lo();
  for (const Rational& c : cuts) {
    ExtendedRational cut(c);
    if (!(ambient.lo() < cut && cut < ambient.hi()))
      fail(ErrorCode::OutOfAmbient, "cut point outside the ambient interior");
    atoms.push_back(ElementarySet::single(prev, cut, ambient));
    prev = cut;
  }
  atoms.push_back(ElementarySet::single(prev, ambient.hi(), ambient));
  std::vector<ElementarySet> generators = atoms;
  return FiniteAlgebra(ambient, std::move(generators), std::move(atoms));
}

std::size_t FiniteAlgebra::element_count() const {
  if (atoms_.size() > 32) fail(ErrorCode::ClosureTooLarge, "element enumeration needs a small algebra");
  return std::size_t(1) << atoms_.size();
}

ElementarySet FiniteAlgebra::element(AtomMask mask) const {
  std::vector<Interval> all;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (mask & (AtomMask(1) << i)) {
      const auto& ivs = atoms_[i].intervals();
      all.insert(all.end(), ivs.begin(), ivs.end());
    }
  }
  return regularize(std::move(all), ambient_);
}

std::optional<AtomMask> FiniteAlgebra::mask_of(const ElementarySet& set) const {
  if (set.ambient() != ambient_) return std::nullopt;
  AtomMask mask = 0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (subset(atoms_[i], set)) mask |= AtomMask(1) << i;
  }
  if (element(mask) != set) return std::nullopt;
  return mask;
}

bool FiniteAlgebra::refined_by(const FiniteAlgebra& finer) const {
  if (finer.ambient() != ambient_) return false;
  for (const ElementarySet& atom : atoms_) {
    if (!finer.contains(atom)) return false;
  }
  return true;
}

}  // namespace credal
