#pragma once

#include <vector>

#include "credal/credence.hpp"
#include "credal/piecewise.hpp"

namespace credal {

// Borel side of a mixture credence on a compact interval: a Lebesgue weight
// plus finitely many point atoms.
struct BorelPart {
  struct Atom {
    Rational x;
    Rational mass;  // > 0
  };
  Rational lebesgue_weight;  // >= 0; weight + sum of masses == 1
  std::vector<Atom> atoms;   // distinct points, sorted
};

// How each atom splits its mass between the two sides of its point: the
// two-sided case of the consistency condition sum_of_shares == 1.
struct LiminalRule {
  struct Share {
    Rational x;
    Rational left;   // share claimed by sets approaching x from the left
    Rational right;  // left + right == 1
  };
  std::vector<Share> shares;  // aligned with BorelPart::atoms
};

struct LiminalDecomposition {
  BorelPart borel;
  LiminalRule rule;
};

// Splits a mixture of Lebesgue and point-mass components on a compact
// ambient into its Borel part and boundary-sharing rule.  End masses on the
// compact ambient are the inward point germs at the endpoints.
LiminalDecomposition decompose(const Credence& mu);

// The density phi_R evaluated at an atom point: 1 inside R, the matching
// side share on the boundary, 0 away from the closure.
Rational share_into(const LiminalDecomposition& dec, const ElementarySet& r, const Rational& x);

// mu[R] == nu(R) + integral of phi_R over the boundary atoms, exactly.
bool verify_mass_identity(const Credence& mu, const LiminalDecomposition& dec, const ElementarySet& r);

// I_R[g] == integral of g over R against nu plus the boundary atom terms.
bool verify_integral_identity(const Credence& mu, const LiminalDecomposition& dec, const PiecewiseAffine& g,
                              const ElementarySet& r);

// Transports a credence on a bounded open interval to the compactified
// closed interval; end masses become the inward point germs.  Compact
// inputs pass through unchanged.
Credence compactify(const Credence& mu);

}  // namespace credal
