#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "credal/elementary.hpp"
#include "credal/piecewise.hpp"

namespace credal {

// One stage of a fat-Cantor middle removal on [0,1].  All blocks at a stage
// share one width, so the aggregate quantities have exact closed forms even
// when the 2^n - 1 removed intervals are not materialized.
struct CantorStage {
  int depth = 0;
  std::vector<Rational> ratios;  // removed fraction of each block, per stage
  Rational removed_measure;      // lambda(U_n)
  Rational block_width;          // width of the remaining blocks
  std::uint64_t block_count = 0;
  Rational max_gap;  // sup over x in [0,1] of dist(x, U_n)

  // Present when the stage was materialized.
  std::optional<ElementarySet> removed;                            // U_n over [0,1]
  std::optional<std::vector<std::pair<Rational, Rational>>> blocks;  // closed remainders
};

// Middle removal with the given per-stage fractions (each in (0,1)).
// Materializes the interval lists up to `materialize_depth` stages.
CantorStage fat_cantor(int depth, const std::vector<Rational>& ratios, int materialize_depth = 14);

// Fractions that remove absolute middle length 4^{-k} from every stage-k
// block; these give lambda(U_n) = (1 - 2^{-n})/2 exactly.
std::vector<Rational> quarter_ratios(int depth);

// Left and right open halves of every interval of U; both regular open,
// disjoint, with lambda(L) + lambda(R) = lambda(U).
std::pair<ElementarySet, ElementarySet> left_right_halves(const ElementarySet& u);

// Largest distance from a point of the ambient to the set.
Rational max_gap(const ElementarySet& u);

struct DenseOpenStage {
  Rational center;
  Rational radius;
  Rational mass_bound;  // 2^{-m} with m the index consumed at this stage
};

struct DenseOpenResult {
  ElementarySet set;               // U_depth over [0,1]
  Rational mass;                   // nu(U_depth), strictly below 1
  Rational mass_bound;             // sum of the per-stage bounds
  Rational coverage_radius;        // max distance from [0,1] to the set
  std::vector<DenseOpenStage> stages;
};

// The atomless branch of the no-Borel-credence construction: around the
// enumerated points r_1, r_2, ... grow disjoint intervals whose nu-masses
// stay below 1/2, 1/4, ...; the union densifies while its mass stays below
// 1.  nu is encoded by a strictly increasing piecewise-affine cdf on [0,1].
DenseOpenResult dense_open_below_one(const PiecewiseAffine& cdf, const std::vector<Rational>& points,
                                     int depth, unsigned long resolution_log2 = 64);

struct AtomBranchWitness {
  ElementarySet left;   // [0,x)
  ElementarySet right;  // (x,1]
  Rational left_mass;
  Rational right_mass;
  Rational atom_mass;
  bool join_is_full;
};

// The atom branch: an atom at x makes nu(L) + nu(R) = 1 - atom mass < 1
// although L join R recovers [0,1].
AtomBranchWitness atom_branch_witness(const Rational& x, const Rational& atom_mass);

}  // namespace credal
