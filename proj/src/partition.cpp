#include "credal/partition.hpp"

#include <algorithm>

#include "credal/error.hpp"

namespace credal {

BPartition BPartition::make(ElementarySet target, std::vector<ElementarySet> cells) {
  struct Tagged {
    const Interval* iv;
    std::size_t cell;
  };
  std::vector<Tagged> all;
  std::vector<Interval> flat;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].ambient() != target.ambient())
      fail(ErrorCode::NotAPartition, "cell over a different ambient");
    if (cells[c].is_empty()) fail(ErrorCode::NotAPartition, "empty cell");
    for (const Interval& iv : cells[c].intervals()) {
      all.push_back(Tagged{&iv, c});
      flat.push_back(iv);
    }
  }
  std::sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) { return a.iv->lo < b.iv->lo; });
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    if (all[i + 1].iv->lo < all[i].iv->hi) fail(ErrorCode::NotAPartition, "cells overlap");
  }
  if (regularize(std::move(flat), target.ambient()) != target)
    fail(ErrorCode::NotAPartition, "cells do not join to the target");
  return BPartition{std::move(target), std::move(cells)};
}

BPartition BPartition::whole(ElementarySet target) {
  if (target.is_empty()) fail(ErrorCode::NotAPartition, "empty target");
  std::vector<ElementarySet> cells{target};
  return BPartition{std::move(target), std::move(cells)};
}

BPartition refine(const BPartition& p, const BPartition& q) {
  if (p.target != q.target) fail(ErrorCode::TargetMismatch, "refinement needs equal targets");
  std::vector<ElementarySet> cells;
  for (const ElementarySet& a : p.cells) {
    for (const ElementarySet& b : q.cells) {
      ElementarySet cell = meet(a, b);
      if (!cell.is_empty()) cells.push_back(std::move(cell));
    }
  }
  return BPartition::make(p.target, std::move(cells));
}

bool refines(const BPartition& finer, const BPartition& coarser) {
  if (finer.target != coarser.target) return false;
  for (const ElementarySet& cell : finer.cells) {
    bool covered = false;
    for (const ElementarySet& big : coarser.cells) {
      if (subset(cell, big)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

SimpleFunction SimpleFunction::make(BPartition partition, std::vector<Rational> values) {
  if (partition.cells.size() != values.size())
    fail(ErrorCode::InvalidArgument, "one value per cell required");
  if (!partition.target.is_full()) fail(ErrorCode::NotAPartition, "simple functions partition the ambient");
  return SimpleFunction{std::move(partition), std::move(values)};
}

SimpleFunction SimpleFunction::constant(const Rational& value, const Ambient& ambient) {
  return SimpleFunction{BPartition::whole(ElementarySet::full(ambient)), {value}};
}

SimpleFunction add(const SimpleFunction& f, const SimpleFunction& g) {
  BPartition common = refine(f.partition, g.partition);
  std::vector<Rational> values;
  values.reserve(common.cells.size());
  for (const ElementarySet& cell : common.cells) {
    Rational total = 0;
    for (std::size_t i = 0; i < f.partition.cells.size(); ++i) {
      if (subset(cell, f.partition.cells[i])) {
        total += f.values[i];
        break;
      }
    }
    for (std::size_t i = 0; i < g.partition.cells.size(); ++i) {
      if (subset(cell, g.partition.cells[i])) {
        total += g.values[i];
        break;
      }
    }
    values.push_back(std::move(total));
  }
  return SimpleFunction::make(std::move(common), std::move(values));
}

SimpleFunction scale(const SimpleFunction& f, const Rational& r) {
  std::vector<Rational> values;
  values.reserve(f.values.size());
  for (const Rational& v : f.values) values.push_back(v * r);
  return SimpleFunction{f.partition, std::move(values)};
}

}  // namespace credal
