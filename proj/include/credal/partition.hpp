#pragma once

#include <vector>

#include "credal/elementary.hpp"
#include "credal/rational.hpp"

namespace credal {

// Finitely many pairwise disjoint elementary cells whose join recovers the
// target.  Cell closures may touch; the cells themselves never overlap.
struct BPartition {
  ElementarySet target;
  std::vector<ElementarySet> cells;

  // Validates: no empty cell, pairwise disjoint, join == target.
  static BPartition make(ElementarySet target, std::vector<ElementarySet> cells);
  // Trivial partition {target}.
  static BPartition whole(ElementarySet target);
};

// Minimal common refinement: the nonempty pairwise meets.
BPartition refine(const BPartition& p, const BPartition& q);

bool refines(const BPartition& finer, const BPartition& coarser);

// Constant on each cell of a partition of the whole ambient; values on cell
// boundaries deliberately carry no meaning.
struct SimpleFunction {
  BPartition partition;
  std::vector<Rational> values;  // one per cell

  static SimpleFunction make(BPartition partition, std::vector<Rational> values);
  static SimpleFunction constant(const Rational& value, const Ambient& ambient);
};

SimpleFunction add(const SimpleFunction& f, const SimpleFunction& g);
SimpleFunction scale(const SimpleFunction& f, const Rational& r);

}  // namespace credal
