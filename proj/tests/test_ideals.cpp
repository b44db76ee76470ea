#include "gwitt/ideals.hpp"
#include "gwitt/random.hpp"
#include "gwitt/structure.hpp"
#include "gwitt/syntax.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gwitt;

namespace {

Element e(std::string_view text, int n = 1) { return parse_element(text, n); }

const AlgebraConfig unit1 = AlgebraConfig::standard(1);

bool all_lower_positive(const Element& x) {
  for (const auto& t : x)
    for (Index i : t.key.lower())
      if (i < 1) return false;
  return true;
}

}  // namespace

TEST_CASE("box membership and enumeration") {
  const Box box{1, 2};
  CHECK(box.contains(basis1(-1, 2)));
  CHECK_FALSE(box.contains(basis1(2, 0)));
  CHECK_FALSE(box.contains(basis1(0, -3)));
  const auto all = enumerate_box(AlgebraConfig::standard(2), box);
  CHECK(all.size() == 9 * 25 * 2);
  CHECK(std::is_sorted(all.begin(), all.end(), std::greater<>{}));
}

TEST_CASE("lemma1_multiplier examples") {
  const Lemma1Result r = lemma1_multiplier(unit1, e("(1|0)_1"));
  CHECK(r.multiplier == basis1(0, 2));
  CHECK(r.result == e("(1|2)_1 - 2*(1|1)_1"));

  // c = 1 gives -5*(0|-2)_1 and c = 2 gives -7*(0|0)_1; c = 3 is the first
  // with positive lower indices.
  const Lemma1Result s = lemma1_multiplier(unit1, e("(0|-3)_1"));
  CHECK(s.attempt == 3);
  CHECK(s.multiplier == basis1(0, 6));
  CHECK(s.result == e("-9*(0|2)_1"));
  CHECK(bracket(unit1, e("(0|4)_1"), e("(0|-3)_1")) == e("-7*(0|0)_1"));

  CHECK_THROWS_AS(lemma1_multiplier(unit1, Element()), std::invalid_argument);
}

TEST_CASE("lemma1_multiplier shape and postcondition on random elements") {
  RandomSource rng(101);
  for (int n = 1; n <= 3; ++n) {
    const AlgebraConfig cfg(n, std::vector<Rational>(static_cast<std::size_t>(n), Rational(2, 3)));
    for (int t = 0; t < 70; ++t) {
      const Element l = rng.element(cfg, {3, 3});
      const Lemma1Result r = lemma1_multiplier(cfg, l);
      CHECK_FALSE(r.result.is_zero());
      CHECK(all_lower_positive(r.result));
      CHECK(r.result == bracket(cfg, Element(r.multiplier), l));
      for (Index a : r.multiplier.upper()) CHECK(a == 0);
      for (std::size_t k = 1; k < r.multiplier.rank(); ++k) CHECK(r.multiplier.lower(k - 1) > r.multiplier.lower(k));
      CHECK(r.multiplier.lower(r.multiplier.rank() - 1) > 0);
    }
  }
}

TEST_CASE("ideal closure examples") {
  const IdealClosure trivial = ideal_closure(unit1, e("(0|0)_1"), {1, 1}, {1, 1}, 5);
  CHECK(trivial.report.reached_targets == std::vector<int>{1});
  CHECK(trivial.report.iterations == 0);
  CHECK(trivial.report.saturated);

  const IdealClosure c = ideal_closure(unit1, e("(1|0)_1"), {2, 2}, {3, 3}, 20);
  CHECK(c.report.reached_targets == std::vector<int>{1});
  CHECK(c.report.saturated);
  CHECK(c.report.stop == StopReason::targets_reached);
  CHECK(is_member(c, e("(0|0)_1")));
  CHECK(is_member(c, e("(1|0)_1")));
  CHECK(is_member(c, Element()));
  // [(-1|0)_1, (1|0)_1] = 2*(0|0)_1.
  CHECK(bracket(unit1, e("(-1|0)_1"), e("(1|0)_1")) == e("2*(0|0)_1"));

  CHECK_THROWS_AS(ideal_closure(unit1, Element(), {1, 1}, {1, 1}, 5), std::invalid_argument);
  CHECK_THROWS_AS(ideal_closure(unit1, e("(3|0)_1"), {1, 1}, {2, 2}, 5), std::invalid_argument);
}

TEST_CASE("closure stops at the iteration limit or a fixpoint") {
  const IdealClosure none = ideal_closure(unit1, e("(1|1)_1"), {1, 1}, {1, 1}, 0);
  CHECK(none.report.stop == StopReason::iteration_limit);
  CHECK(none.report.rank == 1);
  CHECK_FALSE(none.report.saturated);

  // In a tiny result box almost every product leaves it.
  const IdealClosure tight = ideal_closure(unit1, e("(1|1)_1"), {0, 0}, {1, 1}, 50);
  CHECK(tight.report.stop == StopReason::fixpoint);
}

TEST_CASE("closure rows are genuine ideal members") {
  RandomSource rng(7);
  const AlgebraConfig cfg(2, {Rational(1), Rational(-5)});
  for (int t = 0; t < 5; ++t) {
    const Element l = rng.element(cfg, {1, 1}, 3);
    const IdealClosure c = ideal_closure(cfg, l, {1, 1}, {3, 3}, 20);
    CHECK(c.report.rank == c.entries.size());
    for (int k = 0; k < 10; ++k) {
      const auto index = static_cast<std::size_t>(rng.uniform(0, static_cast<Index>(c.entries.size()) - 1));
      CHECK(replay_entry(cfg, c, index) == c.entries[index].value);
      CHECK(is_member(c, c.entries[index].value));
    }
  }
}

TEST_CASE("closure agrees with a dense replica") {
  RandomSource rng(13);
  const AlgebraConfig one(1, {Rational(2, 3)});
  const AlgebraConfig two = AlgebraConfig::standard(2);
  for (int t = 0; t < 10; ++t) {
    const Element l = rng.element(one, {1, 1}, 3);
    const IdealClosure c = ideal_closure(one, l, {1, 1}, {3, 3}, 6);
    const oracle::DenseClosure d = oracle::dense_closure(one, l, {1, 1}, {3, 3}, 6);
    CHECK(c.report.rank == d.rank);
    CHECK(c.report.reached_targets == d.reached_targets);
  }
  for (int t = 0; t < 3; ++t) {
    const Element l = rng.element(two, {1, 1}, 2);
    const IdealClosure c = ideal_closure(two, l, {1, 1}, {1, 1}, 4);
    const oracle::DenseClosure d = oracle::dense_closure(two, l, {1, 1}, {1, 1}, 4);
    CHECK(c.report.rank == d.rank);
    CHECK(c.report.reached_targets == d.reached_targets);
  }
}

TEST_CASE("enlarging the boxes keeps reached targets") {
  RandomSource rng(19);
  const AlgebraConfig cfg = AlgebraConfig::standard(1);
  for (int t = 0; t < 20; ++t) {
    const Element l = rng.element(cfg, {1, 1}, 3);
    const auto small = ideal_closure(cfg, l, {1, 1}, {2, 2}, 20).report.reached_targets;
    const auto large = ideal_closure(cfg, l, {2, 2}, {4, 4}, 20).report.reached_targets;
    for (int k : small) CHECK(std::ranges::find(large, k) != large.end());
  }
}

TEST_CASE("ad_diag_check examples") {
  CHECK(ad_diag_check(unit1, e("(0|1)_1"), {1, 1}) == basis1(1, 0));
  CHECK(bracket(unit1, e("(0|1)_1"), e("(1|0)_1")) == e("(1|1)_1 - (1|0)_1"));

  CHECK_FALSE(ad_diag_check(unit1, e("(0|0)_1"), {1, 0}).has_value());
  const auto witness = ad_diag_check(unit1, e("(0|0)_1"), {1, 1});
  REQUIRE(witness.has_value());
  CHECK(witness->lower(0) == 1);

  CHECK(ad_diag_check(unit1, e("(1|0)_1 + (0|0)_1"), {1, 1}).has_value());
  CHECK_THROWS_AS(ad_diag_check(unit1, Element(), {1, 1}), std::invalid_argument);
}

TEST_CASE("no Euler-type element is ad-diagonalizable") {
  RandomSource rng(29);
  for (int n = 1; n <= 3; ++n) {
    const AlgebraConfig cfg(n, std::vector<Rational>(static_cast<std::size_t>(n), Rational(-5)));
    for (int t = 0; t < 20; ++t) {
      std::vector<Term<BasisElement>> terms;
      const IndexVector zeros(static_cast<std::size_t>(n), 0);
      for (int p = 1; p <= n; ++p) {
        IndexVector unit = zeros;
        unit[static_cast<std::size_t>(p - 1)] = 1;
        terms.push_back({BasisElement(zeros, unit, p), rng.rational()});
      }
      const Element candidate = Element::from_terms(std::move(terms));
      const auto witness = ad_diag_check(cfg, candidate, {2, 1});
      REQUIRE(witness.has_value());
      const Element image = bracket(cfg, candidate, Element(*witness));
      CHECK_FALSE((image.is_zero() || (image.size() == 1 && image.leading().key == *witness)));
    }
  }
}
