#include "gwitt/structure.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gwitt {

Degree degree_of(const BasisElement& b) {
  const auto up = b.upper();
  return Degree{IndexVector(up.begin(), up.end())};
}

std::vector<std::pair<Degree, Element>> decompose(const Element& x) {
  // Terms are lex-descending and the degree is the leading part of the key,
  // so equal degrees are already contiguous and in descending order.
  std::vector<std::pair<Degree, Element>> parts;
  std::vector<Term<BasisElement>> pending;
  Degree current;
  for (const auto& t : x) {
    Degree d = degree_of(t.key);
    if (!pending.empty() && d != current) {
      parts.emplace_back(current, Element::from_terms(std::move(pending)));
      pending.clear();
    }
    current = std::move(d);
    pending.push_back(t);
  }
  if (!pending.empty()) parts.emplace_back(current, Element::from_terms(std::move(pending)));
  return parts;
}

std::strong_ordering lex_cmp(const BasisElement& x, const BasisElement& y) { return x <=> y; }

std::size_t string_number(const Element& x) {
  std::size_t count = 0;
  const BasisElement* prev = nullptr;
  for (const auto& t : x) {
    if (prev == nullptr || !std::ranges::equal(prev->upper(), t.key.upper())) ++count;
    prev = &t.key;
  }
  return count;
}

Index lp(const Element& x) {
  if (x.is_zero()) throw std::domain_error("lp is undefined on the zero element");
  Index best = std::numeric_limits<Index>::min();
  for (const auto& t : x)
    for (Index i : t.key.lower()) best = std::max(best, i);
  return best;
}

}  // namespace gwitt
