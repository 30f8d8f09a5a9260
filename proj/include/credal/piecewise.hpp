#pragma once

#include <vector>

#include "credal/elementary.hpp"

namespace credal {

// Bounded continuous piecewise-affine function with rational breakpoints,
// extended by constants beyond the first and last breakpoint.  Every level
// set interior lands in the elementary algebra, so these are exactly the
// comeasurable integrands the integrator accepts.
class PiecewiseAffine {
 public:
  static PiecewiseAffine make(std::vector<Rational> breakpoints, std::vector<Rational> values,
                              const Ambient& ambient);
  static PiecewiseAffine constant(const Rational& value, const Ambient& ambient);

  const Ambient& ambient() const { return ambient_; }
  const std::vector<Rational>& breakpoints() const { return xs_; }
  const std::vector<Rational>& values() const { return ys_; }

  Rational eval(const Rational& x) const;
  // Value at an extended point: the constant tail at +/-inf, else eval().
  Rational eval_extended(const ExtendedRational& x) const;

  Rational min_value() const;
  Rational max_value() const;
  Rational sup_norm() const;

  bool is_constant() const;

  // int(g^{-1}[c,d]) as an elementary set; c,d may be infinite.
  ElementarySet preimage_interior(const ExtendedRational& c, const ExtendedRational& d) const;

  // Exact integral of the function over [u,v] (trapezoid on each affine
  // piece).  Requires finite endpoints.
  Rational integral_over(const Rational& u, const Rational& v) const;
  // Sum of integral_over across the intervals of E (E must be bounded).
  Rational integral_over(const ElementarySet& e) const;

  // x-coordinates interior to the ambient where the graph crosses the
  // level y = r (plateau spans excluded; plateaus have no crossing point).
  std::vector<Rational> level_crossings(const Rational& r) const;

  PiecewiseAffine operator+(const PiecewiseAffine& other) const;
  PiecewiseAffine operator*(const Rational& scale) const;
  PiecewiseAffine operator+(const Rational& shift) const;

 private:
  PiecewiseAffine(Ambient ambient, std::vector<Rational> xs, std::vector<Rational> ys)
      : ambient_(std::move(ambient)), xs_(std::move(xs)), ys_(std::move(ys)) {}

  Ambient ambient_;
  std::vector<Rational> xs_, ys_;
};

}  // namespace credal
