#pragma once

#include <memory>

#include "credal/credence.hpp"
#include "credal/elementary.hpp"
#include "credal/piecewise.hpp"

namespace credal {

// Continuous strictly monotone piecewise-affine bijection between two
// interval ambients.  Monotone + continuous makes the map open onto its
// image, so preimages of regular opens are regular opens and phi^{-1} is a
// Boolean algebra homomorphism.
class MonotoneAffineMap {
 public:
  // Breakpoint/value pairs as in PiecewiseAffine; slopes all positive or
  // all negative; beyond the outer breakpoints the end segments extend
  // linearly.  The map must carry the domain onto the codomain.
  static MonotoneAffineMap make(std::vector<Rational> breakpoints, std::vector<Rational> values,
                                const Ambient& domain, const Ambient& codomain);
  static MonotoneAffineMap identity(const Ambient& ambient);
  static MonotoneAffineMap affine(const Rational& scale, const Rational& shift, const Ambient& domain,
                                  const Ambient& codomain);

  const Ambient& domain() const { return domain_; }
  const Ambient& codomain() const { return codomain_; }
  const std::vector<Rational>& breakpoints() const { return xs_; }
  const std::vector<Rational>& values() const { return ys_; }
  bool increasing() const { return increasing_; }
  // Single slope across all segments, when there is one.
  bool globally_affine() const;

  Rational apply(const Rational& x) const;
  ExtendedRational apply_extended(const ExtendedRational& x) const;
  Rational invert(const Rational& y) const;
  ExtendedRational invert_extended(const ExtendedRational& y) const;

  MonotoneAffineMap inverse() const;

 private:
  MonotoneAffineMap(Ambient domain, Ambient codomain, std::vector<Rational> xs, std::vector<Rational> ys,
                    bool increasing)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        xs_(std::move(xs)),
        ys_(std::move(ys)),
        increasing_(increasing) {}

  Ambient domain_, codomain_;
  std::vector<Rational> xs_, ys_;
  bool increasing_;
};

// Exact phi^{-1}(B); a Boolean algebra homomorphism in B.
ElementarySet preimage(const MonotoneAffineMap& phi, const ElementarySet& b);

// int(phi^{-1}[clos(B)]) for an arbitrary piecewise-affine map (constant
// tails, no monotonicity assumed).  Coincides with preimage for monotone
// maps.
ElementarySet copreimage(const PiecewiseAffine& phi, const Ambient& codomain, const ElementarySet& b);

// Image credence nu[B] := mu[phi^{-1}(B)].  Rules are transported when the
// transport is exact (point masses, end masses, mixtures, atom tables,
// Lebesgue under constant-slope maps); otherwise the result holds the map.
Credence pushforward(const MonotoneAffineMap& phi, const Credence& mu);

// g . phi as a piecewise-affine function on phi's domain.
PiecewiseAffine compose(const PiecewiseAffine& g, const MonotoneAffineMap& phi);

// |I^mu_A[g.phi] - I^nu_B[g]| <= 2 eps with A = phi^{-1}(B); exact equality
// when both sides go through integrate_exact.
bool change_of_variables_check(const MonotoneAffineMap& phi, const Credence& mu, const PiecewiseAffine& g,
                               const ElementarySet& b, const Rational& eps);

}  // namespace credal
