#include "gwitt/derivations.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <string>

namespace gwitt {

namespace {

void require_rank_one(const AlgebraConfig& cfg) {
  if (cfg.rank() != 1) throw std::invalid_argument("derivations of W(g,1)_+ require rank n = 1");
}

}  // namespace

bool in_bplus(const BasisElement& b) { return b.rank() == 1 && b.lower(0) >= 0; }

bool in_bplus(const Element& x) {
  return std::ranges::all_of(x, [](const auto& t) { return in_bplus(t.key); });
}

DerivationRule scalar_derivation(Rational s) {
  return [s = std::move(s)](const BasisElement& b) {
    return Element(b, s * Rational(b.upper(0)));
  };
}

DerivationRule inner_derivation(const AlgebraConfig& cfg, Element g) {
  require_rank_one(cfg);
  return [cfg, g = std::move(g)](const BasisElement& b) { return bracket(cfg, g, Element(b)); };
}

bool PlusWindow::contains(const BasisElement& b) const {
  return in_bplus(b) && std::abs(b.upper(0)) <= upper_bound && b.lower(0) <= lower_bound;
}

std::vector<BasisElement> PlusWindow::elements() const {
  std::vector<BasisElement> out;
  for (Index a = upper_bound; a >= -upper_bound; --a)
    for (Index i = lower_bound; i >= 0; --i) out.push_back(basis1(a, i));
  return out;
}

DerivationTable::DerivationTable(PlusWindow window, std::map<BasisElement, Element> images)
    : window_(window), images_(std::move(images)) {
  for (const auto& [key, image] : images_) {
    if (!window_.contains(key)) throw std::invalid_argument("derivation table key outside the B_+ window");
    for (const auto& t : image)
      if (t.key.rank() != 1) throw std::invalid_argument("derivation table image is not rank one");
  }
}

DerivationTable DerivationTable::tabulate(const DerivationRule& rule, PlusWindow window) {
  std::map<BasisElement, Element> images;
  for (const auto& b : window.elements()) images.emplace(b, rule(b));
  return DerivationTable(window, std::move(images));
}

const Element* DerivationTable::find(const BasisElement& b) const {
  auto it = images_.find(b);
  return it == images_.end() ? nullptr : &it->second;
}

FunctionElement differentiate(const AlgebraConfig& cfg, const FunctionElement& f) {
  require_rank_one(cfg);
  return apply_operator(cfg, Element(partial()), f);
}

FunctionElement integrate(const AlgebraConfig& cfg, const FunctionElement& f) {
  require_rank_one(cfg);
  const Rational& m = cfg.slope(1);
  std::vector<Term<FunctionTerm>> out;

  // Terms are lex-descending: grouped by upper index, lower index descending
  // within a group, which is the order back-substitution needs.
  auto it = f.begin();
  while (it != f.end()) {
    const Index a = it->key.upper(0);
    auto group_end = std::find_if(it, f.end(), [a](const auto& t) { return t.key.upper(0) != a; });
    if (std::prev(group_end)->key.lower(0) < 0)
      throw std::invalid_argument("integrate needs non-negative lower indices");

    if (a == 0) {
      for (auto t = it; t != group_end; ++t) {
        const Index i = t->key.lower(0);
        out.push_back({function1(0, i + 1), t->coef / Rational(i + 1)});
      }
    } else {
      // diag * g_i + (i + 1) * g_{i+1} = f_i, solved for i = top .. 0.
      const Rational diag = m * Rational(a);
      Rational above = 0;
      auto t = it;
      for (Index i = it->key.lower(0); i >= 0; --i) {
        Rational fi = 0;
        if (t != group_end && t->key.lower(0) == i) {
          fi = t->coef;
          ++t;
        }
        Rational gi = (fi - Rational(i + 1) * above) / diag;
        if (gi != 0) out.push_back({function1(a, i), gi});
        above = std::move(gi);
      }
    }
    it = group_end;
  }
  return FunctionElement::from_terms(std::move(out));
}

FunctionElement as_function(const Element& x) {
  std::vector<Term<FunctionTerm>> out;
  for (const auto& t : x) out.push_back({FunctionTerm(t.key.upper(), t.key.lower()), t.coef});
  return FunctionElement::from_terms(std::move(out));
}

Element as_vector_field(const FunctionElement& f) {
  std::vector<Term<BasisElement>> out;
  for (const auto& t : f) out.push_back({BasisElement(t.key.upper(), t.key.lower(), 1), t.coef});
  return Element::from_terms(std::move(out));
}

std::vector<DerivationViolation> verify_derivation(const AlgebraConfig& cfg, const DerivationTable& table) {
  require_rank_one(cfg);
  std::vector<DerivationViolation> violations;
  const auto& images = table.images();
  for (auto x = images.rbegin(); x != images.rend(); ++x) {
    for (auto y = images.rbegin(); y != images.rend(); ++y) {
      const Element xy = bracket(cfg, x->first, y->first);
      Element lhs;
      bool resolvable = true;
      for (const auto& t : xy) {
        const Element* image = table.find(t.key);
        if (image == nullptr) {
          resolvable = false;
          break;
        }
        lhs.add_scaled(*image, t.coef);
      }
      if (!resolvable) continue;
      Element rhs = bracket(cfg, x->second, Element(y->first));
      rhs += bracket(cfg, Element(x->first), y->second);
      if (lhs != rhs) violations.push_back({x->first, y->first});
    }
  }
  return violations;
}

DerivationRule recompose(const AlgebraConfig& cfg, const Decomposition& d) {
  require_rank_one(cfg);
  return [cfg, d](const BasisElement& b) {
    Element out = bracket(cfg, d.inner, Element(b));
    out.add_scaled(bracket(cfg, partial(), b), d.c);
    out.add_scaled(Element(b), d.s * Rational(b.upper(0)));
    return out;
  };
}

Decomposition decompose(const AlgebraConfig& cfg, const DerivationTable& table) {
  require_rank_one(cfg);
  const BasisElement d = partial();
  const BasisElement x1 = basis1(0, 1);
  const BasisElement e1 = basis1(1, 0);
  const Element* d_image = table.find(d);
  const Element* x1_image = table.find(x1);
  const Element* e1_image = table.find(e1);
  if (d_image == nullptr || x1_image == nullptr || e1_image == nullptr)
    throw std::invalid_argument("decompose needs table entries for (0|0)_1, (0|1)_1 and (1|0)_1");

  Decomposition out;
  if (!in_bplus(*d_image))
    throw NotADerivation("not a derivation: D((0|0)_1) leaves W(g,1)_+", out);

  // [h d, d] = -d(h) d, so ad_h(d) = D(d) = f d needs d(h) = -f.
  out.inner = as_vector_field(integrate(cfg, -as_function(*d_image)));

  const Element r_x1 = *x1_image - bracket(cfg, out.inner, Element(x1));
  const Element r_e1 = *e1_image - bracket(cfg, out.inner, Element(e1));
  out.c = r_x1.coefficient(d);
  out.s = r_e1.coefficient(e1) - out.c * cfg.slope(1);

  const DerivationRule rule = recompose(cfg, out);
  for (const auto& [key, image] : table.images())
    if (rule(key) != image) out.residuals.push_back(key);
  if (!out.residuals.empty())
    throw NotADerivation("not a derivation: " + std::to_string(out.residuals.size()) +
                             " table entries disagree with inner + scalar recomposition",
                         out);
  return out;
}

}  // namespace gwitt
