// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances and case counts are pinned here, not configurable.

#include <chrono>
#include <iostream>
#include <vector>

#include "credal/cantor.hpp"
#include "credal/error.hpp"
#include "credal/finite_oracle.hpp"
#include "credal/integrator.hpp"
#include "credal/liminal.hpp"
#include "credal/sampling.hpp"
#include "credal/selftest.hpp"
#include "credal/stone.hpp"

using namespace credal;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << " (" << name << "): " << detail
            << "\n";
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Randomized algebra laws: >= 10^4 cases, denominators up to 10^6,
//    exact equality, under five seconds.
void criterion_algebra_laws() {
  auto start = std::chrono::steady_clock::now();
  SuiteResult laws = suite_algebra_laws(101, 10000, 1000000);
  double elapsed = seconds_since(start);
  bool ok = laws.failures == 0 && laws.cases >= 10000 && elapsed < 5.0;
  report(1, "algebra laws", ok,
         std::to_string(laws.cases) + " cases, " + std::to_string(laws.failures) + " failures, " +
             std::to_string(elapsed) + " s");
}

// 2. The worked join value.
void criterion_join_value() {
  Ambient line = Ambient::full_line();
  ElementarySet lhs = ElementarySet::single(ExtendedRational(0), ExtendedRational(1), line);
  ElementarySet rhs = ElementarySet::single(ExtendedRational(1), ExtendedRational(2), line);
  ElementarySet expected = ElementarySet::single(ExtendedRational(0), ExtendedRational(2), line);
  bool ok = join(lhs, rhs) == expected;
  report(2, "join (0,1) v (1,2) = (0,2)", ok, join(lhs, rhs).describe());
}

// 3. Finite additivity across 10^3 random partitions for every rule.
void criterion_additivity() {
  SuiteResult suite = suite_credence_additivity(103, 1000);
  report(3, "credence additivity", suite.failures == 0,
         std::to_string(suite.cases) + " rule evaluations over 1000 partitions, " +
             std::to_string(suite.failures) + " failures");
}

// 4. Tolerance contract: 0 <= exact - approx <= eps * mu[B] over 10^3
//    random cases with eps in {1/10, 1/100, 1/1000}.
void criterion_tolerance() {
  SuiteResult suite = suite_integrator_tolerance(104, 1000);
  report(4, "integrator tolerance", suite.failures == 0,
         std::to_string(suite.cases) + " cases, " + std::to_string(suite.failures) + " failures");
}

// 5. Partition decomposition and the Bayes identity, exactly, 10^3 cases.
void criterion_partition_bayes() {
  SuiteResult suite = suite_partition_bayes(105, 1000);
  report(5, "partition decomposition and Bayes", suite.failures == 0,
         std::to_string(suite.cases) + " cases, " + std::to_string(suite.failures) + " failures");
}

// 6. Change of variables: exact equality through the closed forms plus the
//    2-eps bound on the approximate branch, 10^3 cases.
void criterion_change_of_variables() {
  SuiteResult suite = suite_change_of_variables(106, 1000);
  report(6, "change of variables", suite.failures == 0,
         std::to_string(suite.cases) + " cases, " + std::to_string(suite.failures) + " failures");
}

// 7. Point-mass germ values and the two-sided mixture identity
//    nu[(0,eps)] = (eps + phi_plus)/2 on a unit-length ambient.
void criterion_point_mass_values() {
  bool ok = true;
  std::string detail;

  Ambient two_sided = Ambient::open(ExtendedRational(-1), ExtendedRational(1));
  Credence delta0 = Credence::point_mass(two_sided, Rational(0), Side::Right);
  Rng rng(107);
  for (int i = 0; i < 200 && ok; ++i) {
    Rational eps = random_rational(rng, 1000, make_rational(1, 1000), make_rational(9, 10));
    ElementarySet right_piece = ElementarySet::single(ExtendedRational(0), ExtendedRational(eps), two_sided);
    ElementarySet left_piece = ElementarySet::single(ExtendedRational(-eps), ExtendedRational(0), two_sided);
    if (eval(delta0, right_piece) != 1 || eval(delta0, left_piece) != 0) {
      ok = false;
      detail = "germ value failed at eps=" + format_rational(eps);
    }
  }

  // Unit-length ambient so the normalized length of (0,eps) is eps itself.
  Ambient unit = Ambient::open(ExtendedRational(make_rational(-1, 2)), ExtendedRational(make_rational(1, 2)));
  for (const char* phi_text : {"0", "1/3", "1/2", "1"}) {
    Rational phi_plus = parse_rational(phi_text);
    Rational phi_minus = 1 - phi_plus;
    std::vector<std::pair<Rational, Credence>> germ;
    if (phi_minus > 0) germ.emplace_back(phi_minus, Credence::point_mass(unit, Rational(0), Side::Left));
    if (phi_plus > 0) germ.emplace_back(phi_plus, Credence::point_mass(unit, Rational(0), Side::Right));
    Credence side_mix = germ.size() == 1 ? germ[0].second : Credence::mixture(germ);
    Credence nu = Credence::mixture({{make_rational(1, 2), Credence::lebesgue(unit)},
                                     {make_rational(1, 2), side_mix}});
    for (int i = 0; i < 50 && ok; ++i) {
      Rational eps = random_rational(rng, 64, make_rational(1, 64), make_rational(4, 10));
      ElementarySet piece = ElementarySet::single(ExtendedRational(0), ExtendedRational(eps), unit);
      if (eval(nu, piece) != (eps + phi_plus) / 2) {
        ok = false;
        detail = "mixture value failed at eps=" + format_rational(eps) + ", phi=" + phi_text;
      }
    }
  }
  report(7, "point-mass worked values", ok, ok ? "germ and mixture identities exact" : detail);
}

// 8. A zero tail under the end mass at +inf integrates to exactly zero,
//    and a strictly positive integrand on a massless set witnesses that
//    full support is needed for strict monotonicity.
void criterion_free_end() {
  Ambient line = Ambient::full_line();
  PiecewiseAffine g = PiecewiseAffine::make({Rational(0), Rational(1)}, {Rational(5), Rational(0)}, line);
  Credence at_inf = Credence::end_mass(line, EndKind::PosInf);
  ElementarySet full = ElementarySet::full(line);
  bool ok = integrate_exact(g, at_inf, full) == 0;
  ok = ok && integrate(g, at_inf, full, make_rational(1, 10)) == 0;
  ok = ok && integrate(g, at_inf, full, make_rational(1, 1000)) == 0;

  // Witness: g == 1 > 0 everywhere, B nonempty, integral exactly zero.
  Ambient unit = Ambient::open(ExtendedRational(0), ExtendedRational(1));
  Credence germ = Credence::point_mass(unit, make_rational(3, 4), Side::Right);
  ElementarySet b =
      ElementarySet::single(ExtendedRational(make_rational(1, 8)), ExtendedRational(make_rational(1, 4)), unit);
  PiecewiseAffine one = PiecewiseAffine::constant(Rational(1), unit);
  bool witness = !b.is_empty() && eval(germ, b) == 0 && integrate_exact(one, germ, b) == 0 &&
                 integrate(one, germ, b, make_rational(1, 100)) == 0;
  ok = ok && witness;
  report(8, "free-end integral and support witness", ok,
         witness ? "tail integral 0; positive g on massless B integrates to 0" : "witness failed");
}

// 9. Liminal identities over the exhaustive grid of one- and two-interval
//    sets with endpoint denominators up to 32, plus share consistency over
//    10^3 partitions.
void criterion_liminal_grid() {
  Ambient ambient = Ambient::closed(0, 1);
  Credence mu = Credence::mixture({
      {make_rational(7, 16), Credence::lebesgue(ambient)},
      {make_rational(1, 8), Credence::point_mass(ambient, Rational(0), Side::Right)},
      {make_rational(1, 8), Credence::point_mass(ambient, make_rational(1, 4), Side::Left)},
      {make_rational(1, 16), Credence::point_mass(ambient, make_rational(1, 4), Side::Right)},
      {make_rational(1, 8), Credence::point_mass(ambient, make_rational(3, 8), Side::Right)},
      {make_rational(1, 8), Credence::point_mass(ambient, Rational(1), Side::Left)},
  });
  LiminalDecomposition dec = decompose(mu);
  PiecewiseAffine g = PiecewiseAffine::make(
      {Rational(0), make_rational(1, 3), Rational(1)}, {Rational(2), Rational(-1), Rational(1)}, ambient);

  const int denom = 32;
  long checked = 0, mass_failures = 0, integral_failures = 0;
  for (int a = 0; a < denom; ++a) {
    for (int b = a + 1; b <= denom; ++b) {
      ElementarySet one_piece =
          ElementarySet::single(ExtendedRational(make_rational(a, denom)),
                                ExtendedRational(make_rational(b, denom)), ambient);
      ++checked;
      if (!verify_mass_identity(mu, dec, one_piece)) ++mass_failures;
      if (!verify_integral_identity(mu, dec, g, one_piece)) ++integral_failures;
      for (int c = b + 1; c < denom; ++c) {
        for (int d = c + 1; d <= denom; ++d) {
          ElementarySet two_piece = ElementarySet::from_normal_intervals(
              {Interval{ExtendedRational(make_rational(a, denom)), ExtendedRational(make_rational(b, denom))},
               Interval{ExtendedRational(make_rational(c, denom)), ExtendedRational(make_rational(d, denom))}},
              ambient);
          ++checked;
          if (!verify_mass_identity(mu, dec, two_piece)) ++mass_failures;
          if (!verify_integral_identity(mu, dec, g, two_piece)) ++integral_failures;
        }
      }
    }
  }

  long consistency_failures = 0;
  Rng rng(109);
  for (int round = 0; round < 1000; ++round) {
    BPartition partition = random_partition(rng, ElementarySet::full(ambient), 4, 32);
    for (const auto& atom : dec.borel.atoms) {
      Rational total = 0;
      for (const ElementarySet& cell : partition.cells) total += share_into(dec, cell, atom.x);
      if (total != 1) ++consistency_failures;
    }
  }
  bool ok = mass_failures == 0 && integral_failures == 0 && consistency_failures == 0;
  report(9, "liminal identities on the 1/32 grid", ok,
         std::to_string(checked) + " sets checked exactly; consistency over 1000 partitions");
}

// 10. Stone identity, exhaustively: every element and every simple function
//     with values in {0..5} on algebras with up to 5 atoms; refining limits
//     monotone and within eps of the exact integral.
void criterion_stone() {
  Ambient ambient = Ambient::open(ExtendedRational(0), ExtendedRational(1));
  bool ok = true;
  std::string detail;
  long comparisons = 0;
  for (int atoms = 1; atoms <= 5 && ok; ++atoms) {
    std::vector<Rational> cuts;
    for (int k = 1; k < atoms; ++k) cuts.push_back(make_rational(k, atoms));
    FiniteAlgebra alg = FiniteAlgebra::from_cuts(ambient, cuts);
    Credence mu = Credence::mixture(
        {{make_rational(2, 3), Credence::lebesgue(ambient)},
         {make_rational(1, 3), Credence::point_mass(ambient, make_rational(1, 2), Side::Left)}});
    BPartition atom_partition = BPartition::make(ElementarySet::full(ambient), alg.atoms());

    std::vector<Rational> values(static_cast<std::size_t>(atoms), Rational(0));
    long combos = 1;
    for (int i = 0; i < atoms; ++i) combos *= 6;
    for (long code = 0; code < combos && ok; ++code) {
      long rest = code;
      for (int i = 0; i < atoms; ++i) {
        values[static_cast<std::size_t>(i)] = Rational(rest % 6);
        rest /= 6;
      }
      SimpleFunction f = SimpleFunction::make(atom_partition, values);
      for (AtomMask mask = 1; mask < alg.element_count(); ++mask) {
        ElementarySet d = alg.element(mask);
        ++comparisons;
        if (star_integral(f, mu, alg, d) != simple_integral(f, mu, d)) {
          ok = false;
          detail = "mismatch at atoms=" + std::to_string(atoms) + " D=" + d.describe();
          break;
        }
      }
    }
  }

  if (ok) {
    // Refining dyadic chain against the exact value, eps = 1/100.
    PiecewiseAffine id = PiecewiseAffine::make({Rational(0), Rational(1)}, {Rational(0), Rational(1)}, ambient);
    std::vector<std::shared_ptr<const FiniteAlgebra>> chain;
    for (int depth = 1; depth <= 6; ++depth) {
      std::vector<Rational> cuts;
      for (long k = 1; k < (1L << depth); ++k) cuts.push_back(make_rational(k, 1L << depth));
      chain.push_back(std::make_shared<FiniteAlgebra>(FiniteAlgebra::from_cuts(ambient, cuts)));
    }
    for (const Credence& mu :
         {Credence::lebesgue(ambient), Credence::point_mass(ambient, make_rational(1, 3), Side::Right)}) {
      Rational exact = integrate_exact(id, mu, ElementarySet::full(ambient));
      RefiningReport rep = refining_limit(id, mu, chain, make_rational(1, 100), exact);
      if (!rep.reached_tolerance) {
        ok = false;
        detail = "refining limit missed the tolerance";
      }
      for (std::size_t i = 0; ok && i + 1 < rep.values.size(); ++i) {
        if (rep.values[i] > rep.values[i + 1]) {
          ok = false;
          detail = "refining limit not monotone";
        }
      }
      if (ok && exact - rep.final_value > make_rational(1, 100)) {
        ok = false;
        detail = "refining limit final value off target";
      }
    }
  }
  report(10, "stone identity", ok,
         ok ? std::to_string(comparisons) + " exhaustive comparisons; refining limits converged" : detail);
}

// 11. The finite oracle over every labeled topology on up to 4 points,
//     enumerated twice, within two minutes.
void criterion_oracle() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  long total_spaces = 0;
  for (int n = 1; n <= 4 && ok; ++n) {
    auto by_subsets = enumerate_topologies(n, TopologyEnumeration::SubsetScan);
    auto by_preorders = enumerate_topologies(n, TopologyEnumeration::PreorderScan);
    if (by_subsets.size() != by_preorders.size()) {
      ok = false;
      detail = "enumeration counts disagree at n=" + std::to_string(n);
      break;
    }
    for (std::size_t i = 0; i < by_subsets.size(); ++i) {
      if (by_subsets[i].opens != by_preorders[i].opens) {
        ok = false;
        detail = "enumeration contents disagree at n=" + std::to_string(n);
        break;
      }
    }
    total_spaces += static_cast<long>(by_subsets.size());
    for (const FiniteSpace& space : by_subsets) {
      RegularAlgebra ra = regular_algebra(space);
      if (!check_boolean_axioms(ra)) {
        ok = false;
        detail = "boolean axioms failed";
        break;
      }
      if (!baire_bijection_check(space)) {
        ok = false;
        detail = "baire bijection failed";
        break;
      }
      std::vector<PointSet> atoms = ra.atoms();
      std::vector<Rational> weights(atoms.size());
      long denom = static_cast<long>(atoms.size()) * (static_cast<long>(atoms.size()) + 1) / 2;
      std::vector<Rational> values;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        weights[i] = make_rational(static_cast<long>(i) + 1, denom);
        values.push_back(make_rational(static_cast<long>(3 * i) - 2, 5));
      }
      if (!baire_integral_check(space, weights, atoms, values, space.full(), make_rational(123, 11))) {
        ok = false;
        detail = "baire integral failed";
        break;
      }
    }
  }
  double elapsed = seconds_since(start);
  ok = ok && elapsed < 120.0;
  report(11, "finite oracle over all topologies on <= 4 points", ok,
         ok ? std::to_string(total_spaces) + " spaces (1+4+29+355), double-enumerated, " +
                  std::to_string(elapsed) + " s"
            : detail);
}

// 12. Fat Cantor with quarter ratios: lambda(L_n) + lambda(R_n) =
//     (1 - 2^{-n})/2 exactly for n <= 30, and max-gap below 2^{-n};
//     materialized stages cross-check the closed forms.
void criterion_cantor() {
  bool ok = true;
  std::string detail;
  std::vector<Rational> ratios = quarter_ratios(30);
  Rational previous_gap = 2;
  for (int n = 1; n <= 30 && ok; ++n) {
    CantorStage stage = fat_cantor(n, ratios, 12);
    Rational two_pow_n = 1;
    for (int k = 0; k < n; ++k) two_pow_n *= 2;
    Rational expected = (1 - 1 / two_pow_n) / 2;
    if (stage.removed_measure != expected) {
      ok = false;
      detail = "measure mismatch at n=" + std::to_string(n);
      break;
    }
    if (!(stage.max_gap < 1 / two_pow_n)) {
      ok = false;
      detail = "gap bound failed at n=" + std::to_string(n);
      break;
    }
    if (!(stage.max_gap < previous_gap)) {
      ok = false;
      detail = "gap not shrinking at n=" + std::to_string(n);
      break;
    }
    previous_gap = stage.max_gap;
    if (stage.removed) {
      auto [left, right] = left_right_halves(*stage.removed);
      Rational l = left.length().value(), r = right.length().value();
      if (l + r != expected || !disjoint(left, right) || !subset(right, neg(left))) {
        ok = false;
        detail = "materialized halves failed at n=" + std::to_string(n);
        break;
      }
      if (max_gap(*stage.removed) != stage.max_gap) {
        ok = false;
        detail = "materialized gap mismatch at n=" + std::to_string(n);
        break;
      }
    }
  }
  report(12, "fat Cantor mass deficit", ok,
         ok ? "lambda(L)+lambda(R) = (1-2^{-n})/2 exactly for n <= 30; gaps below 2^{-n}" : detail);
}

// 13. The atomless construction at depth 10 stays strictly below mass one
//     while densifying, and the atom branch produces its witness.
void criterion_dense_open() {
  PiecewiseAffine cdf =
      PiecewiseAffine::make({Rational(0), Rational(1)}, {Rational(0), Rational(1)}, Ambient::closed(0, 1));
  std::vector<Rational> points;
  for (int level = 1; static_cast<int>(points.size()) < 256; ++level) {
    for (long odd = 1; odd < (1L << level); odd += 2) points.push_back(make_rational(odd, 1L << level));
  }
  DenseOpenResult result = dense_open_below_one(cdf, points, 10);
  Rational bound = 1 - make_rational(1, 1 << 10);
  bool ok = result.mass < bound && result.mass < 1 && result.set.piece_count() == 10;

  auto [left, right] = left_right_halves(result.set);
  ok = ok && disjoint(left, right) && subset(right, neg(left));

  AtomBranchWitness w = atom_branch_witness(make_rational(2, 5), make_rational(1, 3));
  ok = ok && w.join_is_full && (w.left_mass + w.right_mass == 1 - w.atom_mass) &&
       (w.left_mass + w.right_mass < 1);
  report(13, "dense open below one", ok,
         "nu(U_10) = " + format_rational(result.mass) + " < " + format_rational(bound) +
             "; atom branch: nu(L)+nu(R) = " + format_rational(w.left_mass + w.right_mass) + " < 1");
}

}  // namespace

int main() {
  try {
    criterion_algebra_laws();
    criterion_join_value();
    criterion_additivity();
    criterion_tolerance();
    criterion_partition_bayes();
    criterion_change_of_variables();
    criterion_point_mass_values();
    criterion_free_end();
    criterion_liminal_grid();
    criterion_stone();
    criterion_oracle();
    criterion_cantor();
    criterion_dense_open();
  } catch (const Error& e) {
    std::cout << "[FAIL] unexpected error: " << e.what() << "\n";
    return 1;
  }
  if (g_failures == 0) {
    std::cout << "all 13 acceptance criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " acceptance criteria failed\n";
  return 1;
}
