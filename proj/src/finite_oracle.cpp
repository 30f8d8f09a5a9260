#include "credal/finite_oracle.hpp"

#include <algorithm>

#include "credal/error.hpp"

namespace credal {

FiniteSpace FiniteSpace::make(int n, std::vector<PointSet> opens) {
  if (n < 0 || n > 5) fail(ErrorCode::CapExceeded, "point count outside the supported range");
  FiniteSpace space;
  space.n = n;
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  space.opens = std::move(opens);
  PointSet full = space.full();
  auto has = [&](PointSet s) { return std::binary_search(space.opens.begin(), space.opens.end(), s); };
  if (!has(0) || !has(full)) fail(ErrorCode::InvalidArgument, "opens must contain {} and S");
  for (PointSet a : space.opens) {
    if (a & ~full) fail(ErrorCode::InvalidArgument, "open set outside the point range");
    for (PointSet b : space.opens) {
      if (!has(a | b) || !has(a & b)) fail(ErrorCode::InvalidArgument, "opens not closed under union/meet");
    }
  }
  return space;
}

FiniteSpace FiniteSpace::discrete(int n) {
  std::vector<PointSet> opens;
  for (PointSet s = 0; s < (PointSet(1) << n); ++s) opens.push_back(s);
  return make(n, std::move(opens));
}

FiniteSpace FiniteSpace::sierpinski() { return make(2, {0b00, 0b01, 0b11}); }

bool is_open(const FiniteSpace& space, PointSet a) {
  return std::binary_search(space.opens.begin(), space.opens.end(), a);
}

PointSet interior(const FiniteSpace& space, PointSet a) {
  PointSet best = 0;
  for (PointSet o : space.opens) {
    if ((o & ~a) == 0) best |= o;
  }
  return best;
}

PointSet closure(const FiniteSpace& space, PointSet a) {
  return space.full() & ~interior(space, space.full() & ~a);
}

bool is_regular(const FiniteSpace& space, PointSet a) { return a == interior(space, closure(space, a)); }

PointSet RegularAlgebra::join(PointSet a, PointSet b) const { return interior(*space, closure(*space, a | b)); }

PointSet RegularAlgebra::neg(PointSet a) const { return interior(*space, space->full() & ~a); }

std::vector<PointSet> RegularAlgebra::atoms() const {
  std::vector<PointSet> out;
  for (PointSet a : elements) {
    if (a == 0) continue;
    bool minimal = true;
    for (PointSet b : elements) {
      if (b != 0 && b != a && (b & ~a) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

RegularAlgebra regular_algebra(const FiniteSpace& space) {
  RegularAlgebra algebra;
  algebra.space = &space;
  for (PointSet a = 0; a <= space.full(); ++a) {
    if (is_regular(space, a)) algebra.elements.push_back(a);
  }
  return algebra;
}

bool check_boolean_axioms(const RegularAlgebra& ra) {
  const auto& els = ra.elements;
  PointSet full = ra.space->full();
  PointSet top = interior(*ra.space, closure(*ra.space, full));
  if (top != full) return false;
  for (PointSet a : els) {
    if (ra.join(a, 0) != a || ra.meet(a, full) != a) return false;
    if (ra.join(a, ra.neg(a)) != full || ra.meet(a, ra.neg(a)) != 0) return false;
    if (ra.neg(ra.neg(a)) != a) return false;
    for (PointSet b : els) {
      if (ra.join(a, b) != ra.join(b, a) || ra.meet(a, b) != ra.meet(b, a)) return false;
      if (ra.neg(ra.join(a, b)) != ra.meet(ra.neg(a), ra.neg(b))) return false;
      if (ra.join(a, ra.meet(a, b)) != a || ra.meet(a, ra.join(a, b)) != a) return false;
      if (!std::binary_search(els.begin(), els.end(), ra.join(a, b))) return false;
      if (!std::binary_search(els.begin(), els.end(), ra.meet(a, b))) return false;
      for (PointSet c : els) {
        if (ra.join(ra.join(a, b), c) != ra.join(a, ra.join(b, c))) return false;
        if (ra.meet(ra.meet(a, b), c) != ra.meet(a, ra.meet(b, c))) return false;
        if (ra.meet(a, ra.join(b, c)) != ra.join(ra.meet(a, b), ra.meet(a, c))) return false;
      }
    }
  }
  return true;
}

PointSet meager_hull(const FiniteSpace& space) {
  PointSet hull = 0;
  for (int p = 0; p < space.n; ++p) {
    PointSet point = PointSet(1) << p;
    if (interior(space, closure(space, point)) == 0) hull |= point;
  }
  return hull;
}

bool is_meager(const FiniteSpace& space, PointSet a) { return (a & ~meager_hull(space)) == 0; }

std::vector<PointSet> baire_family(const FiniteSpace& space) {
  PointSet hull = meager_hull(space);
  std::vector<PointSet> out;
  for (PointSet o : space.opens) {
    PointSet m = hull;
    // iterate over the subsets of the meager hull
    for (PointSet sub = m;; sub = (sub - 1) & m) {
      out.push_back(o ^ sub);
      if (sub == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// The unique regular open in the meager-difference class of a, if any.
std::vector<PointSet> regular_reps(const FiniteSpace& space, const RegularAlgebra& ra, PointSet a) {
  std::vector<PointSet> reps;
  for (PointSet r : ra.elements) {
    if (is_meager(space, a ^ r)) reps.push_back(r);
  }
  return reps;
}

}  // namespace

bool baire_bijection_check(const FiniteSpace& space) {
  RegularAlgebra ra = regular_algebra(space);
  std::vector<PointSet> ba = baire_family(space);

  std::map<PointSet, PointSet> rep;
  for (PointSet a : ba) {
    std::vector<PointSet> reps = regular_reps(space, ra, a);
    if (reps.size() != 1) return false;  // Fremlin 514I(f) at finite scale
    rep[a] = reps[0];
  }
  for (PointSet r : ra.elements) {
    if (rep[r] != r) return false;
  }

  for (PointSet atom : ra.atoms()) {
    // The atom indicator credence and its induced residual charge.
    auto mu = [&](PointSet r) { return Rational((atom & ~r) == 0 ? 1 : 0); };
    auto nu = [&](PointSet a) { return mu(rep.at(a)); };
    if (nu(0) != 0 || nu(space.full()) != 1) return false;
    for (PointSet a : ba) {
      if (is_meager(space, a) && nu(a) != 0) return false;
      for (PointSet b : ba) {
        if ((a & b) == 0) {
          PointSet disjoint_union = a | b;
          if (nu(disjoint_union) != nu(a) + nu(b)) return false;
        }
      }
    }
    for (PointSet r : ra.elements) {
      if (nu(r) != mu(r)) return false;  // the round trip
    }
  }
  return true;
}

FiniteCharge residual_charge(const FiniteSpace& space, const std::vector<Rational>& atom_weights) {
  RegularAlgebra ra = regular_algebra(space);
  std::vector<PointSet> atoms = ra.atoms();
  if (atom_weights.size() != atoms.size())
    fail(ErrorCode::InvalidArgument, "one weight per regular-algebra atom required");
  auto mu = [&](PointSet r) {
    Rational total = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if ((atoms[i] & ~r) == 0) total += atom_weights[i];
    }
    return total;
  };
  FiniteCharge charge;
  for (PointSet a : baire_family(space)) {
    std::vector<PointSet> reps = regular_reps(space, ra, a);
    if (reps.size() != 1) fail(ErrorCode::InvalidArgument, "space lacks unique regular representatives");
    charge.values[a] = mu(reps[0]);
  }
  return charge;
}

bool baire_integral_check(const FiniteSpace& space, const std::vector<Rational>& atom_weights,
                          const std::vector<PointSet>& cells, const std::vector<Rational>& values,
                          PointSet target, const Rational& junk_value) {
  RegularAlgebra ra = regular_algebra(space);
  std::vector<PointSet> atoms = ra.atoms();
  if (atom_weights.size() != atoms.size() || cells.size() != values.size()) return false;

  auto mu = [&](PointSet r) {
    Rational total = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if ((atoms[i] & ~r) == 0) total += atom_weights[i];
    }
    return total;
  };
  FiniteCharge charge = residual_charge(space, atom_weights);
  auto nu = [&](PointSet a) {
    auto it = charge.values.find(a);
    return it == charge.values.end() ? Rational(-1) : it->second;
  };

  // diamond integral: sum of value * mu(cell); cells partition the target.
  PointSet covered = 0;
  Rational diamond = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!std::binary_search(ra.elements.begin(), ra.elements.end(), cells[i])) return false;
    if (cells[i] & covered) return false;
    covered |= cells[i];
    diamond += values[i] * mu(cells[i]);
  }
  if (interior(space, closure(space, covered)) != target) return false;

  // Lebesgue sum against the residual charge, with the boundary scraps of
  // the target given a junk value.
  std::map<Rational, PointSet> level_sets;
  for (std::size_t i = 0; i < cells.size(); ++i) level_sets[values[i]] |= cells[i] & target;
  PointSet scraps = target & ~covered;
  if (scraps) level_sets[junk_value] |= scraps;
  Rational lebesgue = 0;
  for (const auto& [value, set] : level_sets) {
    Rational mass = nu(set);
    if (mass < 0) return false;
    lebesgue += value * mass;
  }
  return lebesgue == diamond;
}

std::vector<FiniteSpace> enumerate_topologies(int n, TopologyEnumeration method) {
  if (n < 1 || n > 4) fail(ErrorCode::CapExceeded, "enumeration supports 1..4 points");
  std::vector<FiniteSpace> out;
  PointSet full = (PointSet(1) << n) - 1;

  if (method == TopologyEnumeration::SubsetScan) {
    // Families over the proper nonempty subsets; {} and S are always in.
    std::vector<PointSet> proper;
    for (PointSet s = 1; s < full; ++s) proper.push_back(s);
    std::uint64_t limit = std::uint64_t(1) << proper.size();
    for (std::uint64_t pick = 0; pick < limit; ++pick) {
      std::vector<PointSet> family{0, full};
      for (std::size_t i = 0; i < proper.size(); ++i) {
        if (pick & (std::uint64_t(1) << i)) family.push_back(proper[i]);
      }
      bool closed = true;
      for (std::size_t i = 0; i < family.size() && closed; ++i) {
        for (std::size_t j = i + 1; j < family.size() && closed; ++j) {
          PointSet u = family[i] | family[j], m = family[i] & family[j];
          if (std::find(family.begin(), family.end(), u) == family.end() ||
              std::find(family.begin(), family.end(), m) == family.end())
            closed = false;
        }
      }
      if (closed) out.push_back(FiniteSpace::make(n, family));
    }
  } else {
    // Preorders on n points; x <= y iff bit (x,y).  Opens = up-closed sets.
    int off_diagonal = n * (n - 1);
    std::uint64_t limit = std::uint64_t(1) << off_diagonal;
    std::vector<FiniteSpace> spaces;
    for (std::uint64_t rel_bits = 0; rel_bits < limit; ++rel_bits) {
      bool rel[5][5] = {};
      int bit = 0;
      for (int x = 0; x < n; ++x) {
        rel[x][x] = true;
        for (int y = 0; y < n; ++y) {
          if (x == y) continue;
          rel[x][y] = (rel_bits >> bit++) & 1;
        }
      }
      bool transitive = true;
      for (int x = 0; x < n && transitive; ++x) {
        for (int y = 0; y < n && transitive; ++y) {
          for (int z = 0; z < n; ++z) {
            if (rel[x][y] && rel[y][z] && !rel[x][z]) {
              transitive = false;
              break;
            }
          }
        }
      }
      if (!transitive) continue;
      std::vector<PointSet> opens;
      for (PointSet s = 0; s <= full; ++s) {
        bool up_closed = true;
        for (int x = 0; x < n && up_closed; ++x) {
          if (!(s & (PointSet(1) << x))) continue;
          for (int y = 0; y < n; ++y) {
            if (rel[x][y] && !(s & (PointSet(1) << y))) {
              up_closed = false;
              break;
            }
          }
        }
        if (up_closed) opens.push_back(s);
      }
      spaces.push_back(FiniteSpace::make(n, std::move(opens)));
    }
    // Distinct preorders can only yield distinct topologies, but keep the
    // dedup as a guard and to fix the output order.
    std::sort(spaces.begin(), spaces.end(),
              [](const FiniteSpace& a, const FiniteSpace& b) { return a.opens < b.opens; });
    spaces.erase(std::unique(spaces.begin(), spaces.end(),
                             [](const FiniteSpace& a, const FiniteSpace& b) { return a.opens == b.opens; }),
                 spaces.end());
    out = std::move(spaces);
  }

  std::sort(out.begin(), out.end(),
            [](const FiniteSpace& a, const FiniteSpace& b) { return a.opens < b.opens; });
  return out;
}

}  // namespace credal
