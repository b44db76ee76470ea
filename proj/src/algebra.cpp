#include "gwitt/algebra.hpp"

#include <stdexcept>
#include <string>

namespace gwitt {

AlgebraConfig::AlgebraConfig(int n, std::vector<Rational> slopes) : n_(n), slopes_(std::move(slopes)) {
  if (n_ < 1) throw std::invalid_argument("rank n must be at least 1");
  if (slopes_.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("expected " + std::to_string(n_) + " slopes, got " +
                                std::to_string(slopes_.size()));
  for (std::size_t p = 0; p < slopes_.size(); ++p)
    if (slopes_[p] == 0)
      throw std::invalid_argument("slope m_" + std::to_string(p + 1) +
                                  " is zero; g_p must be injective (g_p(a) = m_p * a)");
}

AlgebraConfig AlgebraConfig::standard(int n) {
  return AlgebraConfig(n, std::vector<Rational>(n < 1 ? 0 : static_cast<std::size_t>(n), Rational(1)));
}

const Rational& AlgebraConfig::slope(int p) const {
  if (p < 1 || p > n_) throw std::out_of_range("direction index " + std::to_string(p) + " out of range");
  return slopes_[static_cast<std::size_t>(p - 1)];
}

Rational g_eval(const AlgebraConfig& cfg, int p, Index a) { return cfg.slope(p) * Rational(a); }

void check_rank(const AlgebraConfig& cfg, const BasisElement& b) {
  if (b.rank() != static_cast<std::size_t>(cfg.rank()))
    throw std::invalid_argument("basis element of rank " + std::to_string(b.rank()) +
                                " used with configuration of rank " + std::to_string(cfg.rank()));
}

void check_rank(const AlgebraConfig& cfg, const Element& x) {
  for (const auto& t : x) check_rank(cfg, t.key);
}

namespace {

void push_bracket_terms(const AlgebraConfig& cfg, const BasisElement& x, const BasisElement& y,
                        const Rational& scale, std::vector<Term<BasisElement>>& out) {
  const std::size_t n = x.rank();
  const int k = x.dir();
  const int l = y.dir();
  IndexVector upper(n), lower(n);
  for (std::size_t r = 0; r < n; ++r) {
    upper[r] = x.upper(r) + y.upper(r);
    lower[r] = x.lower(r) + y.lower(r);
  }
  const auto kk = static_cast<std::size_t>(k - 1);
  const auto ll = static_cast<std::size_t>(l - 1);

  const Rational first = g_eval(cfg, k, y.upper(kk));
  const Rational third = g_eval(cfg, l, x.upper(ll));
  if (first != 0) out.push_back({BasisElement(upper, lower, l), scale * first});
  if (third != 0) out.push_back({BasisElement(upper, lower, k), -scale * third});

  if (const Index jk = y.lower(kk); jk != 0) {
    IndexVector shifted = lower;
    --shifted[kk];
    out.push_back({BasisElement(upper, shifted, l), scale * Rational(jk)});
  }
  if (const Index il = x.lower(ll); il != 0) {
    IndexVector shifted = lower;
    --shifted[ll];
    out.push_back({BasisElement(upper, shifted, k), -scale * Rational(il)});
  }
}

void push_operator_terms(const AlgebraConfig& cfg, const BasisElement& x, const FunctionTerm& f,
                         const Rational& scale, std::vector<Term<FunctionTerm>>& out) {
  const std::size_t n = x.rank();
  if (f.rank() != n) throw std::invalid_argument("operator and function rank differ");
  const int k = x.dir();
  const auto kk = static_cast<std::size_t>(k - 1);
  IndexVector upper(n), lower(n);
  for (std::size_t r = 0; r < n; ++r) {
    upper[r] = x.upper(r) + f.upper(r);
    lower[r] = x.lower(r) + f.lower(r);
  }
  // d/dx_k of e^{g(b).x} x^j, then multiply by e^{g(a).x} x^i.
  if (const Rational growth = g_eval(cfg, k, f.upper(kk)); growth != 0)
    out.push_back({FunctionTerm(upper, lower), scale * growth});
  if (const Index jk = f.lower(kk); jk != 0) {
    --lower[kk];
    out.push_back({FunctionTerm(upper, lower), scale * Rational(jk)});
  }
}

}  // namespace

Element bracket(const AlgebraConfig& cfg, const BasisElement& x, const BasisElement& y) {
  check_rank(cfg, x);
  check_rank(cfg, y);
  std::vector<Term<BasisElement>> out;
  push_bracket_terms(cfg, x, y, Rational(1), out);
  return Element::from_terms(std::move(out));
}

Element bracket(const AlgebraConfig& cfg, const Element& x, const Element& y) {
  check_rank(cfg, x);
  check_rank(cfg, y);
  std::vector<Term<BasisElement>> out;
  out.reserve(4 * x.size() * y.size());
  for (const auto& s : x)
    for (const auto& t : y) push_bracket_terms(cfg, s.key, t.key, s.coef * t.coef, out);
  return Element::from_terms(std::move(out));
}

FunctionElement apply_operator(const AlgebraConfig& cfg, const BasisElement& x, const FunctionTerm& f) {
  check_rank(cfg, x);
  std::vector<Term<FunctionTerm>> out;
  push_operator_terms(cfg, x, f, Rational(1), out);
  return FunctionElement::from_terms(std::move(out));
}

FunctionElement apply_operator(const AlgebraConfig& cfg, const Element& x, const FunctionElement& f) {
  check_rank(cfg, x);
  std::vector<Term<FunctionTerm>> out;
  for (const auto& s : x)
    for (const auto& t : f) push_operator_terms(cfg, s.key, t.key, s.coef * t.coef, out);
  return FunctionElement::from_terms(std::move(out));
}

FunctionElement oracle_commutator(const AlgebraConfig& cfg, const Element& x, const Element& y,
                                  const FunctionTerm& f) {
  const FunctionElement base(f);
  FunctionElement xy = apply_operator(cfg, x, apply_operator(cfg, y, base));
  xy -= apply_operator(cfg, y, apply_operator(cfg, x, base));
  return xy;
}

}  // namespace gwitt
