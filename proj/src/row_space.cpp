#include "gwitt/row_space.hpp"

#include <functional>
#include <map>

namespace gwitt {

Element RowSpace::reduce(const Element& v) const {
  if (rows_.empty()) return v;
  // Every term of a row sits at or below its pivot, so eliminating from the
  // top down never revisits a column.
  std::map<BasisElement, Rational, std::greater<>> acc;
  for (const auto& t : v) acc.emplace_hint(acc.end(), t.key, t.coef);
  std::vector<Term<BasisElement>> rest;
  while (!acc.empty()) {
    auto top = acc.begin();
    if (top->second == 0) {
      acc.erase(top);
      continue;
    }
    auto row = rows_.find(top->first);
    if (row == rows_.end()) {
      rest.push_back({top->first, std::move(top->second)});
      acc.erase(top);
      continue;
    }
    const Rational c = top->second;
    acc.erase(top);
    const Element& r = row->second;
    for (auto it = std::next(r.begin()); it != r.end(); ++it) {
      auto [slot, fresh] = acc.try_emplace(it->key);
      slot->second -= c * it->coef;
    }
  }
  return Element::from_terms(std::move(rest));
}

bool RowSpace::insert(const Element& v) {
  Element r = reduce(v);
  if (r.is_zero()) return false;
  const Rational lead = r.leading().coef;
  if (lead != 1) r *= Rational(1) / lead;
  const BasisElement pivot = r.leading().key;
  rows_.emplace(pivot, std::move(r));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace gwitt
