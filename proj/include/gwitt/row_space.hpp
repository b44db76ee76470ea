#pragma once

#include "gwitt/linear_combination.hpp"

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace gwitt {

/// Echelon span of Elements.
///
/// Each row is keyed by its pivot, the lex-greatest basis element of its
/// support, and has pivot coefficient 1. Pivots are distinct; rows are not
/// back-substituted, which keeps them sparse.
class RowSpace {
 public:
  /// v minus the combination of rows that clears every pivot column of v.
  /// The remainder is unique, linear in v, and zero iff v is in the span.
  Element reduce(const Element& v) const;

  /// Reduces v and, if the remainder is non-zero, adds it as a new row.
  /// Returns true iff the rank grew.
  bool insert(const Element& v);

  bool contains(const Element& v) const { return reduce(v).is_zero(); }

  std::size_t rank() const { return pivots_.size(); }

  /// Pivots in insertion order.
  const std::vector<BasisElement>& pivots() const { return pivots_; }
  const Element& row(const BasisElement& pivot) const { return rows_.at(pivot); }

 private:
  std::unordered_map<BasisElement, Element, BasisElementHash> rows_;
  std::vector<BasisElement> pivots_;
};

}  // namespace gwitt
