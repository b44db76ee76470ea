#include "gwitt/random.hpp"

namespace gwitt {

Rational RandomSource::rational(bool nonzero) {
  for (;;) {
    const Index p = uniform(-9, 9);
    const Index q = uniform(1, 4);
    if (nonzero && p == 0) continue;
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
}

BasisElement RandomSource::basis(const AlgebraConfig& cfg, const Box& box) {
  const auto n = static_cast<std::size_t>(cfg.rank());
  IndexVector upper(n), lower(n);
  for (auto& a : upper) a = uniform(-box.upper_bound, box.upper_bound);
  for (auto& i : lower) i = uniform(-box.lower_bound, box.lower_bound);
  return BasisElement(upper, lower, static_cast<int>(uniform(1, cfg.rank())));
}

BasisElement RandomSource::plus_basis(Index upper_bound, Index lower_bound) {
  return basis1(uniform(-upper_bound, upper_bound), uniform(0, lower_bound));
}

FunctionTerm RandomSource::function_term(const AlgebraConfig& cfg, const Box& box) {
  const BasisElement b = basis(cfg, box);
  return FunctionTerm(b.upper(), b.lower());
}

Element RandomSource::element(const AlgebraConfig& cfg, const Box& box, int max_terms, bool allow_zero) {
  for (;;) {
    std::vector<Term<BasisElement>> terms;
    const auto count = uniform(1, max_terms);
    for (Index t = 0; t < count; ++t) terms.push_back({basis(cfg, box), rational()});
    Element x = Element::from_terms(std::move(terms));
    if (allow_zero || !x.is_zero()) return x;
  }
}

Element RandomSource::homogeneous(const AlgebraConfig& cfg, const Box& box, int max_terms) {
  const BasisElement anchor = basis(cfg, box);
  for (;;) {
    std::vector<Term<BasisElement>> terms;
    const auto count = uniform(1, max_terms);
    for (Index t = 0; t < count; ++t) {
      const BasisElement b = basis(cfg, box);
      terms.push_back({BasisElement(anchor.upper(), b.lower(), b.dir()), rational()});
    }
    Element x = Element::from_terms(std::move(terms));
    if (!x.is_zero()) return x;
  }
}

Element RandomSource::plus_element(Index upper_bound, Index lower_bound, int max_terms) {
  for (;;) {
    std::vector<Term<BasisElement>> terms;
    const auto count = uniform(1, max_terms);
    for (Index t = 0; t < count; ++t) terms.push_back({plus_basis(upper_bound, lower_bound), rational()});
    Element x = Element::from_terms(std::move(terms));
    if (!x.is_zero()) return x;
  }
}

FunctionElement RandomSource::function(const AlgebraConfig& cfg, const Box& box, int max_terms) {
  std::vector<Term<FunctionTerm>> terms;
  const auto count = uniform(1, max_terms);
  for (Index t = 0; t < count; ++t) terms.push_back({function_term(cfg, box), rational()});
  return FunctionElement::from_terms(std::move(terms));
}

}  // namespace gwitt
