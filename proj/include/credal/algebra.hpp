#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "credal/elementary.hpp"

namespace credal {

using AtomMask = std::uint64_t;

// A finitely generated Boolean subalgebra of the elementary algebra,
// represented by its atoms.  Every element is the join of the atoms below
// it, so elements are addressed by atom bitmasks and never materialized in
// bulk.
class FiniteAlgebra {
 public:
  // Closure of the generators under join/meet/neg.  Throws ClosureTooLarge
  // when 2^#atoms would exceed `element_cap`.
  static FiniteAlgebra generate(const std::vector<ElementarySet>& generators, const Ambient& ambient,
                                std::size_t element_cap = std::size_t(1) << 16);
  // Atoms are the pieces of the ambient between consecutive cut points; no
  // closure computation is involved, so up to 64 atoms are fine.
  static FiniteAlgebra from_cuts(const Ambient& ambient, std::vector<Rational> cuts);

  const Ambient& ambient() const { return ambient_; }
  const std::vector<ElementarySet>& generators() const { return generators_; }
  const std::vector<ElementarySet>& atoms() const { return atoms_; }
  std::size_t atom_count() const { return atoms_.size(); }
  // Total element count; only callable on small algebras.
  std::size_t element_count() const;

  ElementarySet element(AtomMask mask) const;  // join of the flagged atoms
  // Mask of the element, or nullopt when the set is not in the algebra.
  std::optional<AtomMask> mask_of(const ElementarySet& set) const;
  bool contains(const ElementarySet& set) const { return mask_of(set).has_value(); }

  // Every atom of this algebra is a union of atoms of `finer`.
  bool refined_by(const FiniteAlgebra& finer) const;

 private:
  FiniteAlgebra(Ambient ambient, std::vector<ElementarySet> generators, std::vector<ElementarySet> atoms)
      : ambient_(std::move(ambient)), generators_(std::move(generators)), atoms_(std::move(atoms)) {}

  Ambient ambient_;
  std::vector<ElementarySet> generators_;
  std::vector<ElementarySet> atoms_;
};

}  // namespace credal
