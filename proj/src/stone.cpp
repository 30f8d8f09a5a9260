#include "credal/stone.hpp"

#include "credal/error.hpp"

namespace credal {

StoneSpace::StoneSpace(std::shared_ptr<const FiniteAlgebra> algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) fail(ErrorCode::InvalidArgument, "missing algebra");
}

std::vector<Rational> star_measure(const Credence& mu, const FiniteAlgebra& algebra) {
  std::vector<Rational> weights;
  weights.reserve(algebra.atom_count());
  for (const ElementarySet& atom : algebra.atoms()) weights.push_back(eval(mu, atom));
  return weights;
}

Rational star_integral(const SimpleFunction& f, const Credence& mu, const FiniteAlgebra& algebra,
                       const ElementarySet& d) {
  auto d_mask = algebra.mask_of(d);
  if (!d_mask) fail(ErrorCode::NotSubordinate, "target set is not an element of the algebra");
  std::vector<AtomMask> cell_masks;
  cell_masks.reserve(f.partition.cells.size());
  for (const ElementarySet& cell : f.partition.cells) {
    auto mask = algebra.mask_of(cell);
    if (!mask) fail(ErrorCode::NotSubordinate, "simple function is not subordinate to the algebra");
    cell_masks.push_back(*mask);
  }
  Rational total = 0;
  for (std::size_t a = 0; a < algebra.atom_count(); ++a) {
    AtomMask bit = AtomMask(1) << a;
    if (!(*d_mask & bit)) continue;
    for (std::size_t c = 0; c < cell_masks.size(); ++c) {
      if (cell_masks[c] & bit) {
        total += f.values[c] * eval(mu, algebra.atoms()[a]);
        break;
      }
    }
  }
  return total;
}

Rational inf_over(const PiecewiseAffine& g, const ElementarySet& set) {
  if (set.is_empty()) fail(ErrorCode::EmptySet, "infimum over the empty set");
  bool have = false;
  Rational best = 0;
  auto take = [&](const Rational& y) {
    if (!have || y < best) best = y;
    have = true;
  };
  for (const Interval& iv : set.intervals()) {
    take(g.eval_extended(iv.lo));
    take(g.eval_extended(iv.hi));
    for (const Rational& x : g.breakpoints()) {
      ExtendedRational p(x);
      if (iv.lo < p && p < iv.hi) take(g.eval(x));
    }
  }
  return best;
}

RefiningReport refining_limit(const PiecewiseAffine& g, const Credence& mu,
                              const std::vector<std::shared_ptr<const FiniteAlgebra>>& algebras,
                              const Rational& eps, const std::optional<Rational>& exact) {
  if (algebras.empty()) fail(ErrorCode::InvalidArgument, "need at least one algebra");
  if (eps <= 0) fail(ErrorCode::InvalidArgument, "eps must be positive");
  RefiningReport report;
  report.reached_tolerance = false;
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    if (i > 0 && !algebras[i - 1]->refined_by(*algebras[i]))
      fail(ErrorCode::NotARefinement, "algebra sequence must refine");
    Rational value = 0;
    for (const ElementarySet& atom : algebras[i]->atoms())
      value += inf_over(g, atom) * eval(mu, atom);
    report.values.push_back(value);
    if (exact && *exact - value <= eps) {
      report.reached_tolerance = true;
      break;
    }
  }
  report.final_value = report.values.back();
  return report;
}

}  // namespace credal
