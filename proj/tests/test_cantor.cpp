#include <doctest.h>

#include "credal/cantor.hpp"
#include "credal/error.hpp"
#include "helpers.hpp"

using namespace credal;
using namespace credal::testing;

TEST_CASE("depth one middle-third removal") {
  CantorStage stage = fat_cantor(1, {rat("1/3")});
  CHECK(stage.removed_measure == rat("1/3"));
  REQUIRE(stage.removed.has_value());
  CHECK(*stage.removed == set_of(closedc("0", "1"), {"1/3", "2/3"}));
  CHECK(stage.block_width == rat("1/3"));
  CHECK(stage.block_count == 2);
  CHECK(stage.max_gap == rat("1/3"));
  CHECK_THROWS_AS(fat_cantor(1, {rat("1")}), Error);
  CHECK_THROWS_AS(fat_cantor(2, {rat("1/3")}), Error);
}

TEST_CASE("quarter ratios give the closed-form measures") {
  std::vector<Rational> ratios = quarter_ratios(12);
  for (int n = 1; n <= 12; ++n) {
    CantorStage stage = fat_cantor(n, ratios);
    // lambda(U_n) = (1 - 2^{-n})/2, from the geometric sum of 2^{k-1} 4^{-k}
    Rational expected = (1 - make_rational(1, 1L << n)) / 2;
    CHECK(stage.removed_measure == expected);
    REQUIRE(stage.removed.has_value());
    CHECK(stage.removed->length().value() == expected);  // materialized agrees
    CHECK(stage.removed->piece_count() == (std::uint64_t(1) << n) - 1);
    CHECK(max_gap(*stage.removed) == stage.max_gap);
    CHECK(stage.max_gap < make_rational(1, 1L << n));
  }
  // strictly increasing in n, below the series limit 1/2
  Rational prev = 0;
  for (int n = 1; n <= 12; ++n) {
    CantorStage stage = fat_cantor(n, ratios, 0);
    CHECK(stage.removed_measure > prev);
    CHECK(stage.removed_measure < rat("1/2"));
    CHECK(!stage.removed.has_value());  // closed forms only above the cap
    prev = stage.removed_measure;
  }
}

TEST_CASE("left and right halves split the removed mass") {
  CantorStage stage = fat_cantor(6, quarter_ratios(6));
  REQUIRE(stage.removed.has_value());
  const ElementarySet& u = *stage.removed;
  auto [left, right] = left_right_halves(u);
  CHECK(disjoint(left, right));
  CHECK(subset(right, neg(left)));
  CHECK(left.length().value() + right.length().value() == u.length().value());
  CHECK(left.length().value() == u.length().value() / 2);
  CHECK(join(left, right) == u);

  // halves of halves nest
  auto [ll, lr] = left_right_halves(left);
  CHECK(subset(ll, left));
  CHECK(subset(ll, u));

  // simple case: halving one interval
  auto [l1, r1] = left_right_halves(set_of(closedc("0", "1"), {"0", "1"}));
  CHECK(l1 == set_of(closedc("0", "1"), {"0", "1/2"}));
  CHECK(r1 == set_of(closedc("0", "1"), {"1/2", "1"}));
}

namespace {

PiecewiseAffine uniform_cdf() {
  return PiecewiseAffine::make({parse_rational("0"), parse_rational("1")},
                               {parse_rational("0"), parse_rational("1")}, Ambient::closed(0, 1));
}

std::vector<Rational> dyadic_points(int count) {
  // 1/2, 1/4, 3/4, 1/8, 3/8, 5/8, 7/8, ...
  std::vector<Rational> out;
  for (int level = 1; static_cast<int>(out.size()) < count; ++level) {
    for (long odd = 1; odd < (1L << level) && static_cast<int>(out.size()) < count; odd += 2)
      out.push_back(make_rational(odd, 1L << level));
  }
  return out;
}

}  // namespace

TEST_CASE("dense open construction stays below one") {
  PiecewiseAffine cdf = uniform_cdf();

  DenseOpenResult one = dense_open_below_one(cdf, {rat("1/2")}, 1);
  REQUIRE(one.stages.size() == 1);
  CHECK(one.stages[0].center == rat("1/2"));
  CHECK(2 * one.stages[0].radius < rat("1/2"));  // nu below the 1/2 bound
  CHECK(one.set.piece_count() == 1);
  CHECK(one.mass < rat("1/2"));

  DenseOpenResult five = dense_open_below_one(cdf, dyadic_points(64), 5);
  CHECK(five.mass < rat("31/32"));
  CHECK(five.mass < 1);
  CHECK(five.set.piece_count() == 5);
  CHECK(five.coverage_radius > 0);

  DenseOpenResult empty = dense_open_below_one(cdf, dyadic_points(8), 0);
  CHECK(empty.set.is_empty());
  CHECK(empty.mass == 0);

  // deeper runs densify: the coverage radius shrinks
  DenseOpenResult ten = dense_open_below_one(cdf, dyadic_points(256), 10);
  CHECK(ten.mass < 1 - make_rational(1, 1 << 10));
  CHECK(ten.coverage_radius <= five.coverage_radius);
  CHECK(subset(five.set, ten.set));

  // a non-uniform strictly increasing cdf works too
  PiecewiseAffine bent = PiecewiseAffine::make(
      {rat("0"), rat("1/3"), rat("1")}, {rat("0"), rat("3/4"), rat("1")}, Ambient::closed(0, 1));
  DenseOpenResult warped = dense_open_below_one(bent, dyadic_points(64), 6);
  CHECK(warped.mass < 1 - make_rational(1, 1 << 6));
}

TEST_CASE("dense open halves are regular and disjoint") {
  DenseOpenResult r = dense_open_below_one(uniform_cdf(), dyadic_points(64), 6);
  auto [left, right] = left_right_halves(r.set);
  CHECK(disjoint(left, right));
  CHECK(subset(right, neg(left)));
  CHECK(join(left, right) == r.set);
  CHECK(left.length().value() + right.length().value() == r.set.length().value());
}

TEST_CASE("the atom branch witness") {
  AtomBranchWitness w = atom_branch_witness(rat("1/3"), rat("1/4"));
  CHECK(w.join_is_full);
  CHECK(w.left_mass + w.right_mass == 1 - rat("1/4"));
  CHECK(w.left_mass + w.right_mass < 1);
  CHECK(w.left.contains_point(rat("0")));
  CHECK(w.right.contains_point(rat("1")));
  CHECK(!w.left.contains_point(rat("1/3")));
  CHECK(!w.right.contains_point(rat("1/3")));
}

TEST_CASE("exhausted enumerations are reported") {
  // one point cannot feed two stages
  CHECK_THROWS_AS(dense_open_below_one(uniform_cdf(), {parse_rational("1/2")}, 2), Error);
  try {
    dense_open_below_one(uniform_cdf(), {parse_rational("1/2")}, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Exhausted);
  }
}

TEST_CASE("bad cdfs are rejected") {
  PiecewiseAffine flat = PiecewiseAffine::make(
      {parse_rational("0"), parse_rational("1/2"), parse_rational("1")},
      {parse_rational("0"), parse_rational("0"), parse_rational("1")}, Ambient::closed(0, 1));
  CHECK_THROWS_AS(dense_open_below_one(flat, {parse_rational("1/2")}, 1), Error);
  PiecewiseAffine shifted = PiecewiseAffine::make(
      {parse_rational("0"), parse_rational("1")},
      {parse_rational("1/4"), parse_rational("1")}, Ambient::closed(0, 1));
  CHECK_THROWS_AS(dense_open_below_one(shifted, {parse_rational("1/2")}, 1), Error);
}
