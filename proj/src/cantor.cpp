#include "credal/cantor.hpp"

#include <algorithm>

#include "credal/error.hpp"

namespace credal {

namespace {

Ambient unit_closed() { return Ambient::closed(0, 1); }

Rational pow2(int k) {  // 2^k for k >= 0
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return Rational(p);
}

}  // namespace

std::vector<Rational> quarter_ratios(int depth) {
  // Stage-k blocks have width w_k; removing absolute length 4^{-k} from
  // each is the fraction 4^{-k} / w_k.
  std::vector<Rational> ratios;
  Rational width = 1;
  for (int k = 1; k <= depth; ++k) {
    Rational removed = 1 / (pow2(k) * pow2(k));
    ratios.push_back(removed / width);
    width = (width - removed) / 2;
  }
  return ratios;
}

CantorStage fat_cantor(int depth, const std::vector<Rational>& ratios, int materialize_depth) {
  if (depth < 1) fail(ErrorCode::InvalidArgument, "depth must be >= 1");
  if (static_cast<std::size_t>(depth) > ratios.size())
    fail(ErrorCode::BadRatio, "need one removal ratio per stage");
  for (int k = 0; k < depth; ++k) {
    if (!(ratios[k] > 0 && ratios[k] < 1)) fail(ErrorCode::BadRatio, "ratios must lie in (0,1)");
  }

  CantorStage stage;
  stage.depth = depth;
  stage.ratios.assign(ratios.begin(), ratios.begin() + depth);
  stage.removed_measure = 0;
  stage.block_width = 1;
  stage.block_count = 1;
  for (int k = 0; k < depth; ++k) {
    Rational removed_each = stage.block_width * ratios[k];
    stage.removed_measure += Rational(static_cast<long>(stage.block_count)) * removed_each;
    stage.block_width = (stage.block_width - removed_each) / 2;
    stage.block_count *= 2;
  }
  // The outermost blocks touch 0 and 1, so the farthest points of [0,1]
  // from U_n sit at the ends, one full block width away.
  stage.max_gap = stage.block_width;

  if (depth <= materialize_depth) {
    std::vector<std::pair<Rational, Rational>> blocks{{Rational(0), Rational(1)}};
    std::vector<Interval> removed;
    for (int k = 0; k < depth; ++k) {
      std::vector<std::pair<Rational, Rational>> next;
      next.reserve(2 * blocks.size());
      for (const auto& [p, q] : blocks) {
        Rational width = q - p;
        Rational cut = width * ratios[k] / 2;
        Rational mid = (p + q) / 2;
        removed.push_back(Interval{ExtendedRational(mid - cut), ExtendedRational(mid + cut)});
        next.emplace_back(p, mid - cut);
        next.emplace_back(mid + cut, q);
      }
      blocks = std::move(next);
    }
    stage.removed = regularize(std::move(removed), unit_closed());
    stage.blocks = std::move(blocks);
  }
  return stage;
}

std::pair<ElementarySet, ElementarySet> left_right_halves(const ElementarySet& u) {
  std::vector<Interval> left, right;
  left.reserve(u.piece_count());
  right.reserve(u.piece_count());
  for (const Interval& iv : u.intervals()) {
    if (!iv.lo.finite() || !iv.hi.finite()) fail(ErrorCode::UnboundedAmbient, "halving needs a bounded set");
    Rational mid = (iv.lo.value() + iv.hi.value()) / 2;
    left.push_back(Interval{iv.lo, ExtendedRational(mid)});
    right.push_back(Interval{ExtendedRational(mid), iv.hi});
  }
  return {ElementarySet::from_normal_intervals(std::move(left), u.ambient()),
          ElementarySet::from_normal_intervals(std::move(right), u.ambient())};
}

Rational max_gap(const ElementarySet& u) {
  const Ambient& ambient = u.ambient();
  if (!ambient.bounded()) fail(ErrorCode::UnboundedAmbient, "gap needs a bounded ambient");
  if (u.is_empty()) return ambient.length().value();
  Rational best = 0;
  const auto& ivs = u.intervals();
  // Gap before the first interval: its far point is the ambient end.
  best = max(best, Rational(ivs.front().lo.value() - ambient.lo().value()));
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i)
    best = max(best, Rational((ivs[i + 1].lo.value() - ivs[i].hi.value()) / 2));
  best = max(best, Rational(ambient.hi().value() - ivs.back().hi.value()));
  return best;
}

namespace {

void check_cdf(const PiecewiseAffine& cdf) {
  if (cdf.ambient() != unit_closed()) fail(ErrorCode::InvalidArgument, "cdf must live on [0,1]");
  if (cdf.eval(Rational(0)) != 0 || cdf.eval(Rational(1)) != 1)
    fail(ErrorCode::InvalidArgument, "cdf must run from 0 to 1");
  const auto& ys = cdf.values();
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    if (!(ys[i] < ys[i + 1])) fail(ErrorCode::InvalidArgument, "cdf must strictly increase");
  }
}

Rational interval_mass(const PiecewiseAffine& cdf, const Rational& lo, const Rational& hi) {
  Rational a = max(Rational(0), lo), b = min(Rational(1), hi);
  if (b <= a) return 0;
  return cdf.eval(b) - cdf.eval(a);
}

}  // namespace

DenseOpenResult dense_open_below_one(const PiecewiseAffine& cdf, const std::vector<Rational>& points,
                                     int depth, unsigned long resolution_log2) {
  check_cdf(cdf);
  if (depth < 0) fail(ErrorCode::InvalidArgument, "depth must be >= 0");
  for (const Rational& r : points) {
    if (!(r > 0 && r < 1)) fail(ErrorCode::InvalidArgument, "enumerated points must lie in (0,1)");
  }

  Rational mass = 0, mass_bound = 0;
  std::vector<DenseOpenStage> stages;
  std::vector<Interval> grown;
  std::vector<bool> used(points.size(), false);

  Rational resolution = 1;
  for (unsigned long i = 0; i < resolution_log2; ++i) resolution /= 2;

  auto distance_to_grown = [&](const Rational& x) {
    // Distance from x to the closure of the grown union; x is outside it.
    Rational best = -1;
    for (const Interval& iv : grown) {
      Rational d = x < iv.lo.value() ? Rational(iv.lo.value() - x) : Rational(x - iv.hi.value());
      if (best < 0 || d < best) best = d;
    }
    return best;
  };

  for (int stage = 0; stage < depth; ++stage) {
    // The next index to serve: the first enumerated point outside the
    // closure of the current union; swallowed indices are consumed.
    std::size_t m = points.size();
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (used[i]) continue;
      bool inside_closure = false;
      for (const Interval& iv : grown) {
        if (iv.lo.value() <= points[i] && points[i] <= iv.hi.value()) {
          inside_closure = true;
          break;
        }
      }
      if (!inside_closure) {
        m = i;
        break;
      }
      used[i] = true;
    }
    if (m == points.size())
      fail(ErrorCode::Exhausted, "enumeration ran out of points at stage " + std::to_string(stage + 1));
    used[m] = true;
    const Rational& q = points[m];
    Rational bound = 1 / pow2(static_cast<int>(m) + 1);

    // delta': bisect on the radius until the nu-mass drops below the bound.
    Rational delta_prime = make_rational(1, 4);
    while (interval_mass(cdf, q - delta_prime, q + delta_prime) >= bound) {
      delta_prime /= 2;
      if (delta_prime < resolution)
        fail(ErrorCode::Exhausted, "no admissible radius above the resolution floor at point index " +
                                       std::to_string(m + 1));
    }
    // delta'': half the distance to the grown region keeps strict gaps, so
    // the union stays in normal form and the halves stay regular.
    Rational delta = delta_prime;
    if (!grown.empty()) {
      Rational gap = distance_to_grown(q);
      delta = min(delta, gap / 2);
    }
    delta = min(delta, min(q / 2, (1 - q) / 2));  // stay inside (0,1)
    if (delta <= 0) fail(ErrorCode::Exhausted, "degenerate radius");

    grown.push_back(Interval{ExtendedRational(q - delta), ExtendedRational(q + delta)});
    std::sort(grown.begin(), grown.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    stages.push_back(DenseOpenStage{q, delta, bound});
    mass += interval_mass(cdf, q - delta, q + delta);
    mass_bound += bound;
  }

  ElementarySet set = ElementarySet::from_normal_intervals(grown, unit_closed());
  Rational coverage = max_gap(set);
  return DenseOpenResult{std::move(set), std::move(mass), std::move(mass_bound), std::move(coverage),
                         std::move(stages)};
}

AtomBranchWitness atom_branch_witness(const Rational& x, const Rational& atom_mass) {
  if (!(x > 0 && x < 1)) fail(ErrorCode::InvalidArgument, "atom must sit inside (0,1)");
  if (!(atom_mass > 0 && atom_mass <= 1)) fail(ErrorCode::InvalidArgument, "atom mass must lie in (0,1]");
  Ambient ambient = unit_closed();
  AtomBranchWitness w{ElementarySet::single(ExtendedRational(0), ExtendedRational(x), ambient),
                      ElementarySet::single(ExtendedRational(x), ExtendedRational(1), ambient),
                      Rational(0),
                      Rational(0),
                      atom_mass,
                      false};
  // nu = (1 - m) * uniform + m * delta_x gives the split masses directly.
  w.left_mass = (1 - atom_mass) * x;
  w.right_mass = (1 - atom_mass) * (1 - x);
  w.join_is_full = join(w.left, w.right).is_full();
  return w;
}

}  // namespace credal
