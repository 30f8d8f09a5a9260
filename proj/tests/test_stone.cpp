#include <doctest.h>

#include "credal/error.hpp"
#include "credal/integrator.hpp"
#include "credal/sampling.hpp"
#include "credal/stone.hpp"
#include "helpers.hpp"

using namespace credal;
using namespace credal::testing;

TEST_CASE("generate on worked examples") {
  Ambient ambient = open01();

  FiniteAlgebra one = FiniteAlgebra::generate({set_of(ambient, {"0", "1/2"})}, ambient);
  REQUIRE(one.atom_count() == 2);
  CHECK(one.atoms()[0] == set_of(ambient, {"0", "1/2"}));
  CHECK(one.atoms()[1] == set_of(ambient, {"1/2", "1"}));
  CHECK(one.element_count() == 4);
  CHECK(one.element(0b00).is_empty());
  CHECK(one.element(0b11) == ElementarySet::full(ambient));

  FiniteAlgebra two =
      FiniteAlgebra::generate({set_of(ambient, {"0", "1/2"}), set_of(ambient, {"1/4", "3/4"})}, ambient);
  REQUIRE(two.atom_count() == 4);
  CHECK(two.atoms()[0] == set_of(ambient, {"0", "1/4"}));
  CHECK(two.atoms()[1] == set_of(ambient, {"1/4", "1/2"}));
  CHECK(two.atoms()[2] == set_of(ambient, {"1/2", "3/4"}));
  CHECK(two.atoms()[3] == set_of(ambient, {"3/4", "1"}));

  FiniteAlgebra trivial = FiniteAlgebra::generate({}, ambient);
  CHECK(trivial.atom_count() == 1);
  CHECK(trivial.element_count() == 2);

  std::vector<ElementarySet> many;
  for (int i = 1; i <= 20; ++i)
    many.push_back(set_of(ambient, {"0", format_rational(make_rational(i, 21))}));
  CHECK_THROWS_AS(FiniteAlgebra::generate(many, ambient, 1 << 6), Error);
}

TEST_CASE("clopen map is a boolean isomorphism on small algebras") {
  Ambient ambient = open01();
  FiniteAlgebra alg = FiniteAlgebra::from_cuts(ambient, {rat("1/4"), rat("1/2"), rat("3/4")});
  REQUIRE(alg.atom_count() == 4);
  StoneSpace stone(std::make_shared<FiniteAlgebra>(alg));
  CHECK(stone.point_count() == 4);

  for (AtomMask a = 0; a < alg.element_count(); ++a) {
    for (AtomMask b = 0; b < alg.element_count(); ++b) {
      ElementarySet ea = alg.element(a), eb = alg.element(b);
      CHECK(alg.mask_of(join(ea, eb)) == (a | b));
      CHECK(alg.mask_of(meet(ea, eb)) == (a & b));
    }
    ElementarySet ea = alg.element(a);
    AtomMask complement = static_cast<AtomMask>(alg.element_count() - 1) & ~a;
    CHECK(alg.mask_of(neg(ea)) == complement);
    CHECK(stone.clopen(ea) == a);
  }
  CHECK(!alg.mask_of(set_of(ambient, {"0", "1/3"})).has_value());
}

TEST_CASE("star measure on worked examples") {
  Ambient ambient = open01();
  auto alg = std::make_shared<FiniteAlgebra>(FiniteAlgebra::from_cuts(ambient, {rat("1/2")}));

  std::vector<Rational> lw = star_measure(Credence::lebesgue(ambient), *alg);
  CHECK(lw == std::vector<Rational>{rat("1/2"), rat("1/2")});

  std::vector<Rational> gw = star_measure(Credence::point_mass(ambient, rat("1/2"), Side::Right), *alg);
  CHECK(gw == std::vector<Rational>{rat("0"), rat("1")});

  Credence table = Credence::atom_table(alg, {rat("1/3"), rat("2/3")});
  CHECK(star_measure(table, *alg) == std::vector<Rational>{rat("1/3"), rat("2/3")});

  // weights always total one and reproduce element masses
  Rng rng(17);
  for (int round = 0; round < 40; ++round) {
    Credence mu = random_mixture(rng, ambient, 20);
    std::vector<Rational> w = star_measure(mu, *alg);
    CHECK(w[0] + w[1] == 1);
    for (AtomMask mask = 0; mask < alg->element_count(); ++mask) {
      Rational sum = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (mask & (1u << i)) sum += w[i];
      }
      CHECK(sum == eval(mu, alg->element(mask)));
    }
  }
}

TEST_CASE("star integral equals the simple integral, exhaustively") {
  Ambient ambient = open01();
  FiniteAlgebra alg = FiniteAlgebra::from_cuts(ambient, {rat("1/4"), rat("1/2"), rat("3/4")});
  Credence mu = Credence::mixture({{rat("1/2"), Credence::lebesgue(ambient)},
                                   {rat("1/2"), Credence::point_mass(ambient, rat("1/2"), Side::Left)}});
  SimpleFunction f = SimpleFunction::make(
      BPartition::make(ElementarySet::full(ambient), alg.atoms()),
      {rat("0"), rat("2"), rat("-1"), rat("5")});
  CHECK(star_integral(f, mu, alg, ElementarySet::full(ambient)) ==
        simple_integral(f, mu, ElementarySet::full(ambient)));
  for (AtomMask mask = 1; mask < alg.element_count(); ++mask) {
    ElementarySet d = alg.element(mask);
    CHECK(star_integral(f, mu, alg, d) == simple_integral(f, mu, d));
  }
  CHECK(star_integral(f, mu, alg, set_of(ambient, {"0", "1/2"})) == rat("5/4"));

  SUBCASE("non subordinate inputs are rejected") {
    CHECK_THROWS_AS(star_integral(f, mu, alg, set_of(ambient, {"0", "1/3"})), Error);
    SimpleFunction off = SimpleFunction::make(
        BPartition::make(ElementarySet::full(ambient),
                         {set_of(ambient, {"0", "1/3"}), set_of(ambient, {"1/3", "1"})}),
        {rat("1"), rat("2")});
    CHECK_THROWS_AS(star_integral(off, mu, alg, ElementarySet::full(ambient)), Error);
  }
}

TEST_CASE("star integral exhaustive on a six-atom algebra") {
  Ambient ambient = open01();
  std::vector<Rational> cuts;
  for (int k = 1; k < 6; ++k) cuts.push_back(make_rational(k, 6));
  FiniteAlgebra alg = FiniteAlgebra::from_cuts(ambient, cuts);
  REQUIRE(alg.atom_count() == 6);
  Credence mu = Credence::mixture({{rat("1/2"), Credence::lebesgue(ambient)},
                                   {rat("1/4"), Credence::point_mass(ambient, rat("1/3"), Side::Left)},
                                   {rat("1/4"), Credence::end_mass(ambient, EndKind::AmbientRight)}});
  BPartition atoms = BPartition::make(ElementarySet::full(ambient), alg.atoms());
  std::vector<Rational> values(6, Rational(0));
  for (long code = 0; code < 729; ++code) {  // values in {0,1,2}
    long rest = code;
    for (int i = 0; i < 6; ++i) {
      values[static_cast<std::size_t>(i)] = Rational(rest % 3);
      rest /= 3;
    }
    SimpleFunction f = SimpleFunction::make(atoms, values);
    for (AtomMask mask = 1; mask < alg.element_count(); ++mask) {
      ElementarySet d = alg.element(mask);
      REQUIRE(star_integral(f, mu, alg, d) == simple_integral(f, mu, d));
    }
  }
}

TEST_CASE("pyramidal rewrite of a simple function integrates identically") {
  // Rewrite f as a stack of nested upper sets B_0 >= B_1 >= ... with
  // positive increments; the diamond integral must not notice.
  Ambient ambient = open01();
  Rng rng(31337);
  for (int round = 0; round < 60; ++round) {
    std::vector<Rational> cuts = random_increasing(rng, 3, 20, Rational(0), Rational(1));
    FiniteAlgebra alg = FiniteAlgebra::from_cuts(ambient, cuts);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < alg.atom_count(); ++i)
      values.push_back(random_rational(rng, 8, Rational(-2), Rational(3)));
    SimpleFunction f =
        SimpleFunction::make(BPartition::make(ElementarySet::full(ambient), alg.atoms()), values);

    // distinct values ascending; level sets as joins of atoms
    std::vector<Rational> levels = values;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    Credence mu = random_mixture(rng, ambient, 20);
    ElementarySet d = alg.element(static_cast<AtomMask>(
        std::uniform_int_distribution<std::uint64_t>(1, alg.element_count() - 1)(rng)));

    // integral of the pyramid: base value * mu(D) plus increments over the
    // shrinking upper sets
    Rational pyramid = levels.front() * eval(mu, d);
    for (std::size_t n = 1; n < levels.size(); ++n) {
      std::vector<Interval> upper_ivs;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= levels[n]) {
          const auto& ivs = alg.atoms()[i].intervals();
          upper_ivs.insert(upper_ivs.end(), ivs.begin(), ivs.end());
        }
      }
      ElementarySet upper = regularize(std::move(upper_ivs), ambient);
      pyramid += (levels[n] - levels[n - 1]) * eval(mu, meet(upper, d));
    }
    CHECK(pyramid == simple_integral(f, mu, d));
  }
}

TEST_CASE("refining dyadic limits walk up to the exact integral") {
  Ambient ambient = open01();
  PiecewiseAffine id = PiecewiseAffine::make({rat("0"), rat("1")}, {rat("0"), rat("1")}, ambient);
  Credence mu = Credence::lebesgue(ambient);

  std::vector<std::shared_ptr<const FiniteAlgebra>> chain;
  for (int depth = 1; depth <= 6; ++depth) {
    std::vector<Rational> cuts;
    for (int k = 1; k < (1 << depth); ++k) cuts.push_back(make_rational(k, 1 << depth));
    chain.push_back(std::make_shared<FiniteAlgebra>(FiniteAlgebra::from_cuts(ambient, cuts)));
  }
  Rational exact = integrate_exact(id, mu, ElementarySet::full(ambient));
  CHECK(exact == rat("1/2"));

  RefiningReport report = refining_limit(id, mu, chain, rat("1/100"), exact);
  CHECK(report.reached_tolerance);
  for (std::size_t i = 0; i < report.values.size(); ++i) {
    // closed form: the depth-k dyadic minorant integrates to 1/2 - 2^{-(k+1)}
    CHECK(report.values[i] == rat("1/2") - make_rational(1, 2L << (i + 1)));
    if (i > 0) CHECK(report.values[i] >= report.values[i - 1]);
  }

  // the germ credence converges to g(x) at the germ point
  Credence germ = Credence::point_mass(ambient, rat("1/3"), Side::Right);
  Rational target = integrate_exact(id, germ, ElementarySet::full(ambient));
  CHECK(target == rat("1/3"));
  RefiningReport germ_report = refining_limit(id, germ, chain, rat("1/50"), target);
  CHECK(germ_report.reached_tolerance);
  CHECK(target - germ_report.final_value <= rat("1/50"));

  // constants converge at the first algebra
  PiecewiseAffine c = PiecewiseAffine::constant(rat("3/7"), ambient);
  RefiningReport const_report =
      refining_limit(c, mu, chain, rat("1/100"), integrate_exact(c, mu, ElementarySet::full(ambient)));
  CHECK(const_report.reached_tolerance);
  CHECK(const_report.values.size() == 1);
  CHECK(const_report.final_value == rat("3/7"));

  // a non-refining chain is rejected
  std::vector<std::shared_ptr<const FiniteAlgebra>> bad{chain[1], chain[0]};
  CHECK_THROWS_AS(refining_limit(id, mu, bad, rat("1/100"), exact), Error);

  // without a target the report runs the whole chain
  RefiningReport open_ended = refining_limit(id, mu, chain, rat("1/100"), std::nullopt);
  CHECK(open_ended.values.size() == chain.size());
}

TEST_CASE("stone representation commutes with pushforward on a finite example") {
  Ambient dom = open01(), cod = openc("0", "2");
  MonotoneAffineMap twice = MonotoneAffineMap::affine(rat("2"), rat("0"), dom, cod);
  auto alg = std::make_shared<FiniteAlgebra>(FiniteAlgebra::from_cuts(dom, {rat("1/4"), rat("1/2")}));
  Credence mu = Credence::atom_table(alg, {rat("1/6"), rat("1/3"), rat("1/2")});
  Credence nu = pushforward(twice, mu);
  REQUIRE(nu.is_atom_table());
  const FiniteAlgebra& image_alg = *nu.as_atom_table().algebra;
  REQUIRE(image_alg.atom_count() == alg->atom_count());
  // the transported weights sit on the transported atoms
  for (std::size_t i = 0; i < alg->atom_count(); ++i) {
    ElementarySet image_atom = preimage(twice.inverse(), alg->atoms()[i]);
    CHECK(eval(nu, image_atom) == eval(mu, alg->atoms()[i]));
  }
}
