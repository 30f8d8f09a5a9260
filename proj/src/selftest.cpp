#include "credal/selftest.hpp"

#include <sstream>

#include "credal/error.hpp"
#include "credal/integrator.hpp"
#include "credal/liminal.hpp"
#include "credal/sampling.hpp"
#include "credal/stone.hpp"

namespace credal {

namespace {

struct Recorder {
  SuiteResult result;

  explicit Recorder(std::string name) { result.name = std::move(name); }

  void tally(bool ok, const std::string& witness) {
    ++result.cases;
    if (!ok) {
      ++result.failures;
      if (result.witness.empty()) result.witness = witness;
    }
  }
};

std::string describe_pair(const ElementarySet& e, const ElementarySet& f) {
  return "{\"E\":\"" + e.describe() + "\",\"F\":\"" + f.describe() + "\"}";
}

}  // namespace

SuiteResult suite_algebra_laws(std::uint64_t seed, long cases, long max_den) {
  Rng rng(seed);
  Recorder rec("algebra-laws");
  std::vector<Ambient> ambients = sample_ambients();
  for (long i = 0; i < cases; ++i) {
    const Ambient& ambient = ambients[static_cast<std::size_t>(i) % ambients.size()];
    ElementarySet e = random_elementary(rng, ambient, 3, max_den);
    ElementarySet f = random_elementary(rng, ambient, 3, max_den);
    ElementarySet g = random_elementary(rng, ambient, 2, max_den);
    ElementarySet full = ElementarySet::full(ambient);

    bool ok = neg(neg(e)) == e;
    ok = ok && meet(e, neg(e)).is_empty();
    ok = ok && join(e, neg(e)) == full;
    ok = ok && neg(join(e, f)) == meet(neg(e), neg(f));
    ok = ok && neg(meet(e, f)) == join(neg(e), neg(f));
    ok = ok && join(e, f) == join(f, e) && meet(e, f) == meet(f, e);
    ok = ok && join(join(e, f), g) == join(e, join(f, g));
    ok = ok && meet(meet(e, f), g) == meet(e, meet(f, g));
    ok = ok && join(e, meet(e, f)) == e && meet(e, join(e, f)) == e;
    ok = ok && meet(e, join(f, g)) == join(meet(e, f), meet(e, g));
    // Minimality of the join: it is below every sampled regular upper
    // bound, and it adds no length beyond the plain union (only the
    // touch points get absorbed).
    ElementarySet joined = join(e, f);
    ElementarySet upper = join(joined, g);
    ok = ok && subset(joined, upper) && subset(e, upper) && subset(f, upper);
    ExtendedRational je = e.length(), jf = f.length(), jm = meet(e, f).length(), jj = joined.length();
    if (je.finite() && jf.finite() && jm.finite() && jj.finite())
      ok = ok && jj.value() == je.value() + jf.value() - jm.value();
    rec.tally(ok, describe_pair(e, f));
  }
  return rec.result;
}

SuiteResult suite_credence_additivity(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Recorder rec("credence-additivity");
  std::vector<Ambient> ambients = sample_ambients();
  for (long i = 0; i < cases; ++i) {
    const Ambient& ambient = ambients[static_cast<std::size_t>(i) % ambients.size()];
    ElementarySet target = random_nonempty_elementary(rng, ambient, 3, 60);
    BPartition partition = random_partition(rng, target, 4, 60);

    std::vector<Credence> rules;
    if (ambient.bounded()) rules.push_back(Credence::lebesgue(ambient));
    rules.push_back(random_mixture(rng, ambient, 40));
    rules.push_back(Credence::end_mass(ambient, EndKind::AmbientLeft));
    {
      Rational x = random_rational(rng, 40, Rational(-2), Rational(2));
      ExtendedRational p(x);
      if (ambient.lo() < p && p < ambient.hi())
        rules.push_back(Credence::point_mass(ambient, x, Side::Right));
    }
    {
      // Atom table over the algebra the partition itself generates.
      std::vector<ElementarySet> gens = partition.cells;
      gens.push_back(target);
      try {
        auto algebra = std::make_shared<FiniteAlgebra>(FiniteAlgebra::generate(gens, ambient));
        std::vector<Rational> weights(algebra->atom_count(), Rational(0));
        long total = 0;
        std::vector<long> raw(algebra->atom_count());
        for (auto& w : raw) {
          w = std::uniform_int_distribution<long>(0, 5)(rng);
          total += w;
        }
        if (total > 0) {
          for (std::size_t a = 0; a < raw.size(); ++a) weights[a] = make_rational(raw[a], total);
          rules.push_back(Credence::atom_table(algebra, weights));
        }
      } catch (const Error&) {
        // closure cap; skip the table rule for this case
      }
    }
    for (const Credence& mu : rules) {
      bool ok = false;
      try {
        ok = check_additivity(mu, partition);
      } catch (const Error&) {
        ok = false;
      }
      rec.tally(ok, "{\"target\":\"" + target.describe() + "\"}");
    }
  }
  return rec.result;
}

SuiteResult suite_integrator_tolerance(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Recorder rec("integrator-tolerance");
  const std::vector<Rational> eps_menu{make_rational(1, 10), make_rational(1, 100), make_rational(1, 1000)};
  std::vector<Ambient> ambients{Ambient::open(ExtendedRational(0), ExtendedRational(1)),
                                Ambient::closed(-1, 1), Ambient::full_line()};
  for (long i = 0; i < cases; ++i) {
    const Ambient& ambient = ambients[static_cast<std::size_t>(i) % ambients.size()];
    Credence mu = random_mixture(rng, ambient, 40);
    PiecewiseAffine g = random_piecewise(rng, ambient, 3, 40, 2);
    ElementarySet b = random_nonempty_elementary(rng, ambient, 2, 40);
    const Rational& eps =
        eps_menu[std::uniform_int_distribution<std::size_t>(0, eps_menu.size() - 1)(rng)];

    Rational exact = integrate_exact(g, mu, b);
    Rational approx = integrate(g, mu, b, eps);
    Rational gap = exact - approx;
    bool ok = gap >= 0 && gap <= eps * eval(mu, b);
    rec.tally(ok, "{\"B\":\"" + b.describe() + "\",\"eps\":\"" + format_rational(eps) + "\",\"gap\":\"" +
                      format_rational(gap) + "\"}");
  }
  return rec.result;
}

SuiteResult suite_partition_bayes(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Recorder rec("partition-bayes");
  std::vector<Ambient> ambients{Ambient::open(ExtendedRational(0), ExtendedRational(1)),
                                Ambient::closed(0, 2)};
  for (long i = 0; i < cases; ++i) {
    const Ambient& ambient = ambients[static_cast<std::size_t>(i) % ambients.size()];
    Credence mu = random_mixture(rng, ambient, 40);
    PiecewiseAffine g = random_piecewise(rng, ambient, 3, 40, 2);
    ElementarySet b = random_nonempty_elementary(rng, ambient, 2, 40);
    BPartition partition = random_partition(rng, b, 3, 40);

    // Decomposition over the partition, Eq-style: I_B = sum of I_{cells}.
    Rational whole = integrate_exact(g, mu, b);
    Rational pieces = 0;
    for (const ElementarySet& cell : partition.cells) pieces += integrate_exact(g, mu, cell);
    bool ok = whole == pieces;

    // Bayes: E_B = (1/mu[B]) sum mu[B_n] E_{B_n} over the massive cells.
    Rational mass = eval(mu, b);
    if (mass > 0) {
      Rational lhs = conditional_expectation_exact(g, mu, b);
      Rational rhs = 0;
      for (const ElementarySet& cell : partition.cells) {
        Rational cell_mass = eval(mu, cell);
        if (cell_mass > 0) rhs += cell_mass * conditional_expectation_exact(g, mu, cell);
      }
      ok = ok && lhs == rhs / mass;
    }
    rec.tally(ok, "{\"B\":\"" + b.describe() + "\"}");
  }
  return rec.result;
}

SuiteResult suite_change_of_variables(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Recorder rec("change-of-variables");
  std::vector<Ambient> ambients{Ambient::open(ExtendedRational(0), ExtendedRational(1)),
                                Ambient::closed(0, 1), Ambient::full_line()};
  for (long i = 0; i < cases; ++i) {
    const Ambient& domain = ambients[static_cast<std::size_t>(i) % ambients.size()];
    MonotoneAffineMap phi = random_monotone_map(rng, domain, 2, 20);
    Credence mu = random_mixture(rng, domain, 20);
    PiecewiseAffine g = random_piecewise(rng, phi.codomain(), 2, 20, 2);
    ElementarySet b = random_nonempty_elementary(rng, phi.codomain(), 2, 20);

    Rational lhs = integrate_exact(compose(g, phi), mu, preimage(phi, b));
    Rational rhs = integrate_exact(g, pushforward(phi, mu), b);
    bool ok = lhs == rhs;
    ok = ok && change_of_variables_check(phi, mu, g, b, make_rational(1, 16));
    rec.tally(ok, "{\"B\":\"" + b.describe() + "\"}");
  }
  return rec.result;
}

SuiteResult suite_liminal_identities(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Recorder rec("liminal-identities");
  for (long i = 0; i < cases; ++i) {
    Ambient ambient = i % 2 == 0 ? Ambient::closed(-1, 1) : Ambient::closed(0, 1);
    Credence mu = random_mixture(rng, ambient, 32);
    LiminalDecomposition dec = decompose(mu);
    ElementarySet r = random_elementary(rng, ambient, 3, 32);
    PiecewiseAffine g = random_piecewise(rng, ambient, 3, 32, 2);

    bool ok = verify_mass_identity(mu, dec, r);
    ok = ok && verify_integral_identity(mu, dec, g, r);

    // Consistency: the shares over any partition of S add to one at every
    // atom point.
    BPartition partition = random_partition(rng, ElementarySet::full(ambient), 4, 32);
    for (const auto& atom : dec.borel.atoms) {
      Rational total = 0;
      for (const ElementarySet& cell : partition.cells) total += share_into(dec, cell, atom.x);
      ok = ok && total == 1;
    }
    rec.tally(ok, "{\"R\":\"" + r.describe() + "\"}");
  }
  return rec.result;
}

SuiteResult suite_stone_identity(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Recorder rec("stone-identity");
  for (long i = 0; i < cases; ++i) {
    Ambient ambient = Ambient::open(ExtendedRational(0), ExtendedRational(1));
    std::vector<Rational> cuts = random_increasing(rng, 3, 24, Rational(0), Rational(1));
    auto algebra = std::make_shared<FiniteAlgebra>(FiniteAlgebra::from_cuts(ambient, cuts));
    Credence mu = random_mixture(rng, ambient, 24);

    std::vector<ElementarySet> cells = algebra->atoms();
    std::vector<Rational> values;
    for (std::size_t c = 0; c < cells.size(); ++c)
      values.push_back(random_rational(rng, 12, Rational(-2), Rational(2)));
    SimpleFunction f =
        SimpleFunction::make(BPartition::make(ElementarySet::full(ambient), cells), values);

    AtomMask mask = static_cast<AtomMask>(
        std::uniform_int_distribution<std::uint64_t>(0, algebra->element_count() - 1)(rng));
    ElementarySet d = algebra->element(mask);
    if (d.is_empty()) {
      rec.tally(true, "");
      continue;
    }
    bool ok = star_integral(f, mu, *algebra, d) == simple_integral(f, mu, d);
    rec.tally(ok, "{\"D\":\"" + d.describe() + "\"}");
  }
  return rec.result;
}

std::vector<SuiteResult> run_selftest(std::uint64_t seed, long scale) {
  return {
      suite_algebra_laws(seed, 40 * scale, 1000),
      suite_credence_additivity(seed + 1, 10 * scale),
      suite_integrator_tolerance(seed + 2, 4 * scale),
      suite_partition_bayes(seed + 3, 10 * scale),
      suite_change_of_variables(seed + 4, 6 * scale),
      suite_liminal_identities(seed + 5, 8 * scale),
      suite_stone_identity(seed + 6, 8 * scale),
  };
}

}  // namespace credal
