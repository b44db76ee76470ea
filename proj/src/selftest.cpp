#include "gwitt/selftest.hpp"

#include "gwitt/derivations.hpp"
#include "gwitt/ideals.hpp"
#include "gwitt/random.hpp"
#include "gwitt/structure.hpp"
#include "gwitt/syntax.hpp"

#include <algorithm>
#include <functional>

namespace gwitt {

namespace {

class SuiteRunner {
 public:
  SuiteRunner(std::string name, int trials) {
    result_.name = std::move(name);
    result_.trials = trials;
  }

  /// check returns an empty string on success, a description otherwise.
  SuiteResult run(const std::function<std::string()>& check) {
    for (int t = 0; t < result_.trials; ++t) {
      std::string failure;
      try {
        failure = check();
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure.empty()) continue;
      if (result_.failures++ == 0) result_.first_failure = std::move(failure);
    }
    return result_;
  }

 private:
  SuiteResult result_;
};

std::string describe(const char* what, const Element& x) { return std::string(what) + " " + format_element(x); }

Element rescaled_sum(const Element& x, const Rational& alpha, const Element& y, const Rational& beta) {
  Element out = alpha * x;
  out.add_scaled(y, beta);
  return out;
}

}  // namespace

std::vector<SuiteResult> run_selftest(const AlgebraConfig& cfg, std::uint64_t seed, int trials) {
  RandomSource rng(seed);
  const Box small{2, 2};
  std::vector<SuiteResult> out;

  out.push_back(SuiteRunner("antisymmetry", trials).run([&] {
    const Element x = rng.element(cfg, small), y = rng.element(cfg, small);
    const Element sum = bracket(cfg, x, y) + bracket(cfg, y, x);
    return sum.is_zero() ? "" : describe("[x,y]+[y,x] =", sum);
  }));

  out.push_back(SuiteRunner("jacobi", trials).run([&] {
    const Element x = rng.element(cfg, small, 3), y = rng.element(cfg, small, 3), z = rng.element(cfg, small, 3);
    Element sum = bracket(cfg, x, bracket(cfg, y, z));
    sum += bracket(cfg, y, bracket(cfg, z, x));
    sum += bracket(cfg, z, bracket(cfg, x, y));
    return sum.is_zero() ? "" : describe("jacobiator =", sum);
  }));

  out.push_back(SuiteRunner("operator-oracle", trials).run([&] {
    const Element x = rng.element(cfg, small), y = rng.element(cfg, small);
    const FunctionTerm f = rng.function_term(cfg, small);
    const FunctionElement via_bracket = apply_operator(cfg, bracket(cfg, x, y), FunctionElement(f));
    const FunctionElement via_operators = oracle_commutator(cfg, x, y, f);
    return via_bracket == via_operators ? "" : "mismatch on f = " + format_function_term(f);
  }));

  out.push_back(SuiteRunner("bilinearity", trials).run([&] {
    const Element x = rng.element(cfg, small), x2 = rng.element(cfg, small), y = rng.element(cfg, small);
    const Rational alpha = rng.rational(), beta = rng.rational();
    const Element lhs = bracket(cfg, rescaled_sum(x, alpha, x2, beta), y);
    const Element rhs = rescaled_sum(bracket(cfg, x, y), alpha, bracket(cfg, x2, y), beta);
    return lhs == rhs ? "" : describe("bilinearity fails for x =", x);
  }));

  out.push_back(SuiteRunner("grading", trials).run([&] {
    const Element x = rng.homogeneous(cfg, small), y = rng.homogeneous(cfg, small);
    Degree expected = degree_of(x.leading().key);
    const Degree dy = degree_of(y.leading().key);
    for (std::size_t r = 0; r < expected.values.size(); ++r) expected.values[r] += dy.values[r];
    for (const auto& t : bracket(cfg, x, y))
      if (degree_of(t.key) != expected) return describe("degree not additive in term of", Element(t.key));
    return std::string();
  }));

  out.push_back(SuiteRunner("lex-order", trials).run([&] {
    const BasisElement a = rng.basis(cfg, {1, 1}), b = rng.basis(cfg, {1, 1}), c = rng.basis(cfg, {1, 1});
    if ((lex_cmp(a, b) < 0) != (lex_cmp(b, a) > 0) || (lex_cmp(a, b) == 0) != (a == b))
      return std::string("not antisymmetric");
    if (lex_cmp(a, b) <= 0 && lex_cmp(b, c) <= 0 && lex_cmp(a, c) > 0) return std::string("not transitive");
    return std::string();
  }));

  out.push_back(SuiteRunner("print-parse", trials).run([&] {
    const Element x = rng.element(cfg, {3, 3}, 5, true);
    const std::string text = format_element(x);
    return parse_element(text, cfg.rank()) == x ? "" : "round trip failed for " + text;
  }));

  out.push_back(SuiteRunner("reduce-linearity", std::max(1, trials / 10)).run([&] {
    RowSpace space;
    for (int r = 0; r < 8; ++r) space.insert(rng.element(cfg, {1, 1}, 3));
    const Element v = rng.element(cfg, {1, 1}, 4, true), w = rng.element(cfg, {1, 1}, 4, true);
    const Element lhs = space.reduce(v + w);
    const Element rhs = space.reduce(v) + space.reduce(w);
    return lhs == rhs ? "" : describe("reduce not linear on v =", v);
  }));

  out.push_back(SuiteRunner("lemma1", trials).run([&] {
    const Element l = rng.element(cfg, {3, 3});
    const Lemma1Result r = lemma1_multiplier(cfg, l);
    for (const auto& t : r.result)
      for (Index i : t.key.lower())
        if (i < 1) return describe("non-positive lower index for l =", l);
    return r.result.is_zero() ? describe("zero product for l =", l) : std::string();
  }));

  out.push_back(SuiteRunner("ad-diag", trials).run([&] {
    std::vector<Term<BasisElement>> terms;
    const IndexVector zeros(static_cast<std::size_t>(cfg.rank()), 0);
    for (int p = 1; p <= cfg.rank(); ++p) {
      IndexVector unit = zeros;
      unit[static_cast<std::size_t>(p - 1)] = 1;
      terms.push_back({BasisElement(zeros, unit, p), rng.rational()});
    }
    const Element candidate = Element::from_terms(std::move(terms));
    return ad_diag_check(cfg, candidate, {2, 1}) ? "" : describe("no counterexample for", candidate);
  }));

  if (cfg.rank() <= 2) {
    out.push_back(SuiteRunner("ideal-closure", std::max(1, trials / 5)).run([&] {
      const Element l = rng.element(cfg, {1, 1}, 3);
      const IdealClosure closure = ideal_closure(cfg, l, {2, 2}, {4, 4}, 20);
      return closure.report.saturated ? "" : describe("targets not reached for l =", l);
    }));
  }

  const AlgebraConfig line(1, {cfg.slope(1)});

  out.push_back(SuiteRunner("integrate", trials).run([&] {
    FunctionElement f;
    for (const auto& t : rng.function(line, {3, 3}))
      f.add_scaled(FunctionElement(function1(t.key.upper(0), std::abs(t.key.lower(0)))), t.coef);
    return differentiate(line, integrate(line, f)) == f ? "" : "d(integrate(f)) != f for " + format_function(f);
  }));

  out.push_back(SuiteRunner("derivation-round-trip", std::max(1, trials / 5)).run([&] {
    const Element g = rng.plus_element(2, 2, 3);
    const Rational c0 = rng.rational(false), s0 = rng.rational(false);
    const Decomposition truth{g, c0, s0, {}};
    const DerivationTable table = DerivationTable::tabulate(recompose(line, truth), {4, 4});
    const Decomposition found = decompose(line, table);
    const DerivationRule rule = recompose(line, found);
    for (const auto& [key, image] : table.images())
      if (rule(key) != image) return "recomposition differs at " + format_basis(key);
    return std::string();
  }));

  return out;
}

}  // namespace gwitt
