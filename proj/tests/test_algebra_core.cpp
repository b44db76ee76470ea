#include "gwitt/algebra.hpp"
#include "gwitt/ideals.hpp"
#include "gwitt/random.hpp"
#include "gwitt/syntax.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gwitt;

namespace {

Element e(std::string_view text, int n = 1) { return parse_element(text, n); }
FunctionElement fn(std::string_view text, int n = 1) { return parse_function(text, n); }

const AlgebraConfig unit1 = AlgebraConfig::standard(1);

std::vector<AlgebraConfig> mixed_configs() {
  std::vector<AlgebraConfig> out;
  const Rational pool[] = {Rational(1), Rational(2, 3), Rational(-5)};
  for (int n = 1; n <= 3; ++n) {
    std::vector<Rational> slopes;
    for (int p = 0; p < n; ++p) slopes.push_back(pool[(p + n) % 3]);
    out.emplace_back(n, slopes);
  }
  return out;
}

}  // namespace

TEST_CASE("configuration") {
  CHECK_THROWS_AS(AlgebraConfig(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraConfig(2, {Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraConfig(2, {Rational(1), Rational(0)}), std::invalid_argument);
  CHECK(AlgebraConfig::standard(3).slopes().size() == 3);
}

TEST_CASE("g_eval") {
  CHECK(g_eval(unit1, 1, 5) == 5);
  CHECK(g_eval(unit1, 1, 0) == 0);
  const AlgebraConfig cfg(2, {Rational(1), Rational(2, 3)});
  CHECK(g_eval(cfg, 2, -3) == -2);
  CHECK(g_eval(cfg, 2, 0) == 0);
  CHECK_THROWS_AS(g_eval(cfg, 3, 1), std::out_of_range);
  CHECK_THROWS_AS(g_eval(cfg, 0, 1), std::out_of_range);
}

TEST_CASE("bracket examples") {
  const Element x = e("(1|0)_1 - 1/2*(0|3)_1");
  CHECK(bracket(unit1, x, x).is_zero());

  CHECK(bracket(unit1, e("(1|0)_1"), e("(2|0)_1")) == e("(3|0)_1"));
  CHECK(bracket(unit1, e("(0|1)_1"), e("(2|0)_1")) == e("2*(2|1)_1 - (2|0)_1"));

  const AlgebraConfig two = AlgebraConfig::standard(2);
  CHECK(bracket(two, e("(1,0|0,0)_1", 2), e("(0,1|0,0)_2", 2)).is_zero());

  // x^2 d against e^x d: x^2 e^x d - 2x e^x d.
  CHECK(bracket(unit1, e("(0|2)_1"), e("(1|0)_1")) == e("(1|2)_1 - 2*(1|1)_1"));

  // The slope scales the exponential factor only.
  const AlgebraConfig slope(1, {Rational(2, 3)});
  CHECK(bracket(slope, e("(1|0)_1"), e("(2|0)_1")) == e("2/3*(3|0)_1"));
}

TEST_CASE("bracket rejects rank mismatch") {
  const AlgebraConfig two = AlgebraConfig::standard(2);
  CHECK_THROWS_AS(bracket(two, e("(1|0)_1"), e("(1,0|0,0)_1", 2)), std::invalid_argument);
}

TEST_CASE("apply_operator") {
  CHECK(apply_operator(unit1, partial(), function1(3, 2)) == fn("3*(3|2) + 2*(3|1)"));
  CHECK(apply_operator(unit1, partial(), function1(-2, 0)) == fn("-2*(-2|0)"));
  CHECK(apply_operator(unit1, basis1(4, -1), function1(0, 0)).is_zero());
  CHECK(apply_operator(unit1, basis1(1, 1), function1(1, 0)) == fn("(2|1)"));

  const AlgebraConfig two = AlgebraConfig::standard(2);
  const Index z[] = {0, 0};
  CHECK(apply_operator(two, BasisElement(z, z, 2), FunctionTerm(z, z)).is_zero());
}

TEST_CASE("oracle_commutator examples") {
  const Element x = e("(1|0)_1"), y = e("(2|0)_1");
  CHECK(oracle_commutator(unit1, x, x, function1(1, 3)).is_zero());
  CHECK(oracle_commutator(unit1, x, y, function1(1, 0)) == fn("(4|0)"));
  CHECK(oracle_commutator(unit1, x, y, function1(1, 0)) == apply_operator(unit1, basis1(3, 0), function1(1, 0)));

  RandomSource rng(17);
  for (const auto& cfg : mixed_configs()) {
    for (int t = 0; t < 50; ++t) {
      const Element a = rng.element(cfg, {2, 2}), b = rng.element(cfg, {2, 2});
      const FunctionTerm f = rng.function_term(cfg, {2, 2});
      CHECK((oracle_commutator(cfg, a, b, f) + oracle_commutator(cfg, b, a, f)).is_zero());
    }
  }
}

TEST_CASE("bracket laws on random elements") {
  RandomSource rng(23);
  for (const auto& cfg : mixed_configs()) {
    CAPTURE(cfg.rank());
    for (int t = 0; t < 100; ++t) {
      const Element x = rng.element(cfg, {2, 2}, 3), y = rng.element(cfg, {2, 2}, 3), z = rng.element(cfg, {2, 2}, 3);
      CHECK(bracket(cfg, x, y) == -bracket(cfg, y, x));

      Element jacobi = bracket(cfg, x, bracket(cfg, y, z));
      jacobi += bracket(cfg, y, bracket(cfg, z, x));
      jacobi += bracket(cfg, z, bracket(cfg, x, y));
      CHECK(jacobi.is_zero());

      const FunctionTerm f = rng.function_term(cfg, {2, 2});
      CHECK(apply_operator(cfg, bracket(cfg, x, y), FunctionElement(f)) == oracle_commutator(cfg, x, y, f));

      const Rational alpha = rng.rational(), beta = rng.rational();
      Element combo = alpha * x;
      combo.add_scaled(z, beta);
      Element expected = alpha * bracket(cfg, x, y);
      expected.add_scaled(bracket(cfg, z, y), beta);
      CHECK(bracket(cfg, combo, y) == expected);
    }
  }
}

TEST_CASE("degree-zero part reproduces the polynomial Witt bracket") {
  for (int n = 1; n <= 3; ++n) {
    const AlgebraConfig cfg = AlgebraConfig::standard(n);
    const std::vector<BasisElement> basis = enumerate_box(cfg, {0, n == 3 ? 1 : 2});
    std::size_t checked = 0;
    for (const auto& x : basis)
      for (const auto& y : basis) {
        CHECK(bracket(cfg, x, y) == oracle::witt_bracket(x, y));
        ++checked;
      }
    CHECK(checked == basis.size() * basis.size());
  }
}
