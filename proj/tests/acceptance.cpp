// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic.
#include "gwitt/cli.hpp"
#include "gwitt/derivations.hpp"
#include "gwitt/ideals.hpp"
#include "gwitt/random.hpp"
#include "gwitt/syntax.hpp"
#include "oracles.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace gwitt;

namespace {

using Clock = std::chrono::steady_clock;

const std::array<Rational, 3> kSlopes{Rational(1), Rational(2, 3), Rational(-5)};

AlgebraConfig random_config(RandomSource& rng, int n) {
  std::vector<Rational> slopes;
  for (int p = 0; p < n; ++p) slopes.push_back(kSlopes[static_cast<std::size_t>(rng.uniform(0, 2))]);
  return AlgebraConfig(n, std::move(slopes));
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  std::function<Outcome()> run;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

Outcome bracket_laws() {
  const auto start = Clock::now();
  RandomSource rng(1001);
  std::size_t failures = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 500; ++t) {
      const AlgebraConfig cfg = random_config(rng, n);
      const Element x = rng.element(cfg, {2, 2}), y = rng.element(cfg, {2, 2}), z = rng.element(cfg, {2, 2});
      if (!(bracket(cfg, x, y) + bracket(cfg, y, x)).is_zero()) ++failures;
      const Element jacobi = bracket(cfg, x, bracket(cfg, y, z)) + bracket(cfg, y, bracket(cfg, z, x)) +
                             bracket(cfg, z, bracket(cfg, x, y));
      if (!jacobi.is_zero()) ++failures;
    }
  }
  const double elapsed = seconds_since(start);
  return {failures == 0 && elapsed < 30,
          std::to_string(failures) + " failures, 1500 pairs/triples, " + fmt_seconds(elapsed)};
}

Outcome operator_oracle() {
  RandomSource rng(1002);
  std::size_t failures = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 500; ++t) {
      const AlgebraConfig cfg = random_config(rng, n);
      const Element x = rng.element(cfg, {2, 2}), y = rng.element(cfg, {2, 2});
      const FunctionTerm f = rng.function_term(cfg, {2, 2});
      const FunctionElement lhs = apply_operator(cfg, bracket(cfg, x, y), FunctionElement(f));
      if (lhs != oracle_commutator(cfg, x, y, f)) ++failures;
    }
  }
  return {failures == 0, std::to_string(failures) + " failures in 1500 triples"};
}

Outcome witt_embedding() {
  std::size_t mismatches = 0, pairs = 0;
  for (int n = 1; n <= 3; ++n) {
    const AlgebraConfig cfg = AlgebraConfig::standard(n);
    std::vector<BasisElement> zero_degree;
    for (const auto& b : enumerate_box(cfg, {0, 2})) zero_degree.push_back(b);
    for (const auto& x : zero_degree)
      for (const auto& y : zero_degree) {
        ++pairs;
        if (bracket(cfg, x, y) != oracle::witt_bracket(x, y)) ++mismatches;
      }
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches in " + std::to_string(pairs) + " pairs"};
}

Outcome lemma1_engine() {
  RandomSource rng(1004);
  std::size_t failures = 0, exhausted = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const AlgebraConfig cfg = random_config(rng, n);
    const Element l = rng.element(cfg, {3, 3});
    try {
      const Lemma1Result r = lemma1_multiplier(cfg, l);
      bool ok = !r.result.is_zero() && r.result == bracket(cfg, Element(r.multiplier), l);
      for (const auto& term : r.result)
        for (Index i : term.key.lower()) ok = ok && i >= 1;
      if (!ok) ++failures;
    } catch (const SearchExhausted&) {
      ++exhausted;
    }
  }
  return {failures == 0 && exhausted == 0,
          std::to_string(failures) + " failures, " + std::to_string(exhausted) + " exhaustions in 200 runs"};
}

Outcome simplicity_witnesses() {
  const auto start = Clock::now();
  RandomSource rng(1005);
  Outcome out;
  std::string misses;
  for (int n = 1; n <= 2; ++n) {
    int reached = 0;
    for (int t = 0; t < 50; ++t) {
      const AlgebraConfig cfg = random_config(rng, n);
      const Element l = rng.element(cfg, {1, 1});
      const ClosureReport r = ideal_closure(cfg, l, {2, 2}, {4, 4}, 20).report;
      if (r.saturated) {
        ++reached;
      } else {
        misses += "\n    miss n=" + std::to_string(n) + " l=" + format_element(l) + " rank=" +
                  std::to_string(r.rank) + " reached=" + std::to_string(r.reached_targets.size()) +
                  " iterations=" + std::to_string(r.iterations);
      }
    }
    out.pass = out.pass && reached * 100 >= 95 * 50;
    out.detail += "n=" + std::to_string(n) + ": " + std::to_string(reached) + "/50 saturated, ";
  }
  const double elapsed = seconds_since(start);
  out.pass = out.pass && elapsed < 300;
  out.detail += fmt_seconds(elapsed) + misses;
  return out;
}

Outcome no_ad_diagonalizable() {
  RandomSource rng(1006);
  std::size_t passes_box = 0, wrong = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const AlgebraConfig cfg = random_config(rng, n);
    const IndexVector zeros(static_cast<std::size_t>(n), 0);
    std::vector<Term<BasisElement>> terms;
    for (int p = 1; p <= n; ++p) {
      IndexVector unit = zeros;
      unit[static_cast<std::size_t>(p - 1)] = 1;
      terms.push_back({BasisElement(zeros, unit, p), rng.rational()});
    }
    const Element candidate = Element::from_terms(std::move(terms));
    const Box box{2, 1};
    const auto witness = ad_diag_check(cfg, candidate, box);
    if (!witness) {
      ++passes_box;
      continue;
    }
    const Element image = bracket(cfg, candidate, Element(*witness));
    const bool proportional = image.is_zero() || (image.size() == 1 && image.leading().key == *witness);
    if (proportional || !box.contains(*witness)) ++wrong;
  }
  return {passes_box == 0 && wrong == 0,
          std::to_string(passes_box) + " pass-box outcomes, " + std::to_string(wrong) + " bad witnesses in 100"};
}

Outcome derivation_round_trip() {
  RandomSource rng(1007);
  std::size_t failures = 0, integrate_failures = 0;
  const PlusWindow window{4, 4};
  for (int t = 0; t < 200; ++t) {
    const AlgebraConfig cfg(1, {kSlopes[static_cast<std::size_t>(t % 3)]});
    const Decomposition truth{rng.plus_element(2, 2), rng.rational(false), rng.rational(false), {}};
    const DerivationTable table = DerivationTable::tabulate(recompose(cfg, truth), window);
    try {
      const Decomposition found = decompose(cfg, table);
      const DerivationRule rule = recompose(cfg, found);
      bool ok = found.residuals.empty();
      for (const auto& [key, image] : table.images()) ok = ok && rule(key) == image;
      if (!ok) ++failures;
    } catch (const NotADerivation&) {
      ++failures;
    }
  }
  for (int t = 0; t < 200; ++t) {
    const AlgebraConfig cfg(1, {kSlopes[static_cast<std::size_t>(t % 3)]});
    FunctionElement f;
    for (int k = 0; k < 4; ++k)
      f.add_scaled(FunctionElement(function1(rng.uniform(-3, 3), rng.uniform(0, 3))), rng.rational(false));
    if (differentiate(cfg, integrate(cfg, f)) != f) ++integrate_failures;
  }
  return {failures == 0 && integrate_failures == 0,
          std::to_string(failures) + " round-trip failures in 200, " + std::to_string(integrate_failures) +
              " integrate failures in 200"};
}

Outcome scalar_family() {
  Outcome out;
  for (const Rational& m : kSlopes) {
    const auto family = oracle::scalar_derivation_family(m, 3, 3);
    out.pass = out.pass && family.dimension == 1 && family.contains_upper_index;
    if (!out.detail.empty()) out.detail += ", ";
    out.detail += "m=" + to_string(m) + ": dim " + std::to_string(family.dimension) +
                  (family.contains_upper_index ? " spanned by s*a" : " missing s*a");
  }
  return out;
}

Outcome cli_examples() {
  RandomSource rng(1009);
  std::size_t round_trip_failures = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const Element x = rng.element(AlgebraConfig::standard(n), {3, 3}, 5, true);
    if (parse_element(format_element(x), n) != x) ++round_trip_failures;
  }

  auto invoke = [](std::vector<std::string> args, int& code) {
    std::istringstream in;
    std::ostringstream out, err;
    code = run_cli(args, in, out, err);
    return out.str();
  };
  int code = 0;
  std::size_t example_failures = 0;
  if (invoke({"bracket", "(1|0)_1", "(2|0)_1", "--n", "1", "--m", "1"}, code) != "(3|0)_1\n" || code != 0)
    ++example_failures;
  if (invoke({"ad-diag", "(0|1)_1", "--n", "1", "--m", "1", "--box", "1,1"}, code) != "(1|0)_1\n" || code != 0)
    ++example_failures;
  const std::string summary = invoke({"selftest", "--seed", "7", "--n", "2"}, code);
  if (code != 0 || summary.find("suites passed") == std::string::npos) ++example_failures;

  return {round_trip_failures == 0 && example_failures == 0,
          std::to_string(round_trip_failures) + " round-trip failures in 500, " + std::to_string(example_failures) +
              " of 3 command examples wrong"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "bracket laws", bracket_laws},
      {2, "operator realization", operator_oracle},
      {3, "polynomial Witt subalgebra", witt_embedding},
      {4, "positive-lower-index multiplier", lemma1_engine},
      {5, "ideal closure saturation", simplicity_witnesses},
      {6, "no ad-diagonalizable Euler element", no_ad_diagonalizable},
      {7, "derivation round trip", derivation_round_trip},
      {8, "scalar derivation family", scalar_family},
      {9, "command line", cli_examples},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name << "): " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
