#pragma once

#include "credal/credence.hpp"
#include "credal/partition.hpp"
#include "credal/piecewise.hpp"

namespace credal {

// Sum over cells of value * mu[cell meet B]; well-defined independently of
// the subordinating partition.  The empty B integrates to zero.
Rational simple_integral(const SimpleFunction& f, const Credence& mu, const ElementarySet& b);

// The level-set minorant: cells are the components on which g stays inside
// one band [m/N, (m+1)/N], with value m/N.  Plateaus sitting exactly on a
// band edge take the upper band, so constants come out as floor(c N)/N and
// the minorant of a constant is exact.  Guarantees f <= g on every cell and
// sup|f - g| <= 1/N.
SimpleFunction level_minorant(const PiecewiseAffine& g, long n);

// Under-approximation of the supremum integral: the simple integral of
// level_minorant(g, ceil(1/eps)).  Contract: result <= I_B[g] and
// I_B[g] - result <= eps * mu[B].
Rational integrate(const PiecewiseAffine& g, const Credence& mu, const ElementarySet& b, const Rational& eps);

// Closed-form I_B[g] for the rule-based credences: normalized trapezoid
// sums for Lebesgue, germ evaluation for point and end masses, atom sums
// for atom tables (g must be constant on every atom), weighted sums for
// mixtures, change of variables for images.
Rational integrate_exact(const PiecewiseAffine& g, const Credence& mu, const ElementarySet& b);

// integrate(g, mu, b, eps) / mu[B]; requires mu[B] > 0.
Rational conditional_expectation(const PiecewiseAffine& g, const Credence& mu, const ElementarySet& b,
                                 const Rational& eps);
// Exact variant through integrate_exact.
Rational conditional_expectation_exact(const PiecewiseAffine& g, const Credence& mu, const ElementarySet& b);

}  // namespace credal
