#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "credal/algebra.hpp"
#include "credal/credence.hpp"
#include "credal/partition.hpp"
#include "credal/piecewise.hpp"

namespace credal {

// Stone space of a finite algebra: one point per atom; an element maps to
// the clopen set of points below it.  On finite algebras this map is the
// whole Stone representation.
class StoneSpace {
 public:
  explicit StoneSpace(std::shared_ptr<const FiniteAlgebra> algebra);

  std::size_t point_count() const { return algebra_->atom_count(); }
  const FiniteAlgebra& algebra() const { return *algebra_; }

  // Clopen image B* of an element, as a bitmask of points; nullopt when the
  // set is not an element of the algebra.
  std::optional<AtomMask> clopen(const ElementarySet& b) const { return algebra_->mask_of(b); }
  ElementarySet element_of(AtomMask clopen_mask) const { return algebra_->element(clopen_mask); }

 private:
  std::shared_ptr<const FiniteAlgebra> algebra_;
};

// mu*[B*] := mu[B] on a finite Stone space is the atomic measure with
// weight(a) = mu[a]; returns the weights in atom order.
std::vector<Rational> star_measure(const Credence& mu, const FiniteAlgebra& algebra);

// Sum over atoms below D of (value of f on the atom) * weight(atom); equals
// the simple integral exactly.  f's cells must be elements of the algebra.
Rational star_integral(const SimpleFunction& f, const Credence& mu, const FiniteAlgebra& algebra,
                       const ElementarySet& d);

struct RefiningReport {
  std::vector<Rational> values;  // one per algebra, nondecreasing
  bool reached_tolerance;        // meaningful only when a target was given
  Rational final_value;
};

// Best subordinate minorants of g along a refining chain of algebras: on
// each atom the value is the infimum of g over the atom closure.  Stops
// early once within eps of `exact` when that target is supplied.
RefiningReport refining_limit(const PiecewiseAffine& g, const Credence& mu,
                              const std::vector<std::shared_ptr<const FiniteAlgebra>>& algebras,
                              const Rational& eps, const std::optional<Rational>& exact);

// Infimum of g over the closure of an elementary set.
Rational inf_over(const PiecewiseAffine& g, const ElementarySet& set);

}  // namespace credal
