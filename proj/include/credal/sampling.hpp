#pragma once

#include <random>
#include <vector>

#include "credal/algebra.hpp"
#include "credal/credence.hpp"
#include "credal/elementary.hpp"
#include "credal/maps.hpp"
#include "credal/partition.hpp"
#include "credal/piecewise.hpp"

namespace credal {

using Rng = std::mt19937_64;

// Uniform-ish rational in [lo, hi] with denominator <= max_den.
Rational random_rational(Rng& rng, long max_den, const Rational& lo, const Rational& hi);

// Strictly increasing distinct rationals in the open interval (lo, hi).
std::vector<Rational> random_increasing(Rng& rng, std::size_t count, long max_den, const Rational& lo,
                                        const Rational& hi);

// Random elementary set with up to max_intervals pieces; may be empty, may
// reach the ambient ends (including unbounded pieces on the line).
ElementarySet random_elementary(Rng& rng, const Ambient& ambient, int max_intervals, long max_den);
ElementarySet random_nonempty_elementary(Rng& rng, const Ambient& ambient, int max_intervals, long max_den);

// Random partition of a nonempty target into up to ~max_cells cells.
BPartition random_partition(Rng& rng, const ElementarySet& target, int max_cells, long max_den);

// Random piecewise-affine function with values within [-span, span].
PiecewiseAffine random_piecewise(Rng& rng, const Ambient& ambient, int max_breaks, long max_den, long span);

// Random mixture of Lebesgue, point-mass and end-mass components.
Credence random_mixture(Rng& rng, const Ambient& ambient, long max_den);

// Random strictly monotone piecewise-affine bijection out of the domain;
// the codomain is derived from the endpoint images.
MonotoneAffineMap random_monotone_map(Rng& rng, const Ambient& domain, int max_breaks, long max_den);

// A handful of ambients the property suites cycle through.
std::vector<Ambient> sample_ambients();

}  // namespace credal
