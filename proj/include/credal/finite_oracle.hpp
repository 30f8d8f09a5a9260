#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "credal/rational.hpp"

namespace credal {

using PointSet = std::uint32_t;  // subset of points as a bitmask

// An explicit finite topological space: subsets are bitmasks over n points;
// the open family contains the empty set and the whole space and is closed
// under union and intersection.  Finite spaces are automatically Baire.
struct FiniteSpace {
  int n = 0;
  std::vector<PointSet> opens;  // sorted, deduplicated

  PointSet full() const { return (PointSet(1) << n) - 1; }

  static FiniteSpace make(int n, std::vector<PointSet> opens);
  static FiniteSpace discrete(int n);
  static FiniteSpace sierpinski();  // opens {0, {a}, S} on two points
};

bool is_open(const FiniteSpace& space, PointSet a);
PointSet interior(const FiniteSpace& space, PointSet a);
PointSet closure(const FiniteSpace& space, PointSet a);
bool is_regular(const FiniteSpace& space, PointSet a);

// The regular open algebra of the space with its Boolean operations.
struct RegularAlgebra {
  const FiniteSpace* space;
  std::vector<PointSet> elements;  // all regular opens, sorted

  PointSet join(PointSet a, PointSet b) const;  // int clos (a u b)
  PointSet meet(PointSet a, PointSet b) const { return a & b; }
  PointSet neg(PointSet a) const;  // int (S \ a)

  std::vector<PointSet> atoms() const;  // minimal nonzero elements
};

RegularAlgebra regular_algebra(const FiniteSpace& space);

// Exhaustive verification of the Boolean-algebra axioms for the regular
// open operations.
bool check_boolean_axioms(const RegularAlgebra& algebra);

// Union of all nowhere dense sets; the meager sets are exactly its subsets.
PointSet meager_hull(const FiniteSpace& space);
bool is_meager(const FiniteSpace& space, PointSet a);

// All sets with the Baire property: open symmetric-difference meager.
std::vector<PointSet> baire_family(const FiniteSpace& space);

// A finitely additive [0,1]-assignment on the Baire-property family.
struct FiniteCharge {
  std::map<PointSet, Rational> values;

  const Rational& at(PointSet a) const { return values.at(a); }
};

// The residual charge induced by atom weights on the regular algebra:
// every Baire-property set inherits the mass of the unique regular open in
// its meager-difference class, so meager sets carry none.
FiniteCharge residual_charge(const FiniteSpace& space, const std::vector<Rational>& atom_weights);

// Checks, exhaustively: every Baire-property class modulo meager contains
// exactly one regular open set, and for every atom-indicator credence on
// the regular algebra the induced residual charge is additive, kills
// meager sets, and restricts back to the credence.
bool baire_bijection_check(const FiniteSpace& space);

// Compares the diamond integral of a simple function against the Lebesgue
// sum of the induced residual charge, with the boundary scraps deliberately
// assigned a junk value to show they cannot matter.
bool baire_integral_check(const FiniteSpace& space, const std::vector<Rational>& atom_weights,
                          const std::vector<PointSet>& cells, const std::vector<Rational>& values,
                          PointSet target, const Rational& junk_value);

enum class TopologyEnumeration {
  SubsetScan,   // scan all families containing {0, S}, keep the closed ones
  PreorderScan  // preorders on n points; opens are the up-closed sets
};

// Every labeled topology on n points (n <= 4), deterministic order.
std::vector<FiniteSpace> enumerate_topologies(int n, TopologyEnumeration method);

}  // namespace credal
