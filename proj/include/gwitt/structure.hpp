#pragma once

#include "gwitt/linear_combination.hpp"

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace gwitt {

/// Weight in the Z^n-gradation: the upper-index tuple.
struct Degree {
  IndexVector values;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& x, const Degree& y) {
    return detail::compare_coords(x.values, y.values);
  }
};

Degree degree_of(const BasisElement& b);

/// Homogeneous components, degrees strictly decreasing. The components sum
/// back to x.
std::vector<std::pair<Degree, Element>> decompose(const Element& x);

/// Lexicographic order on (a_1..a_n, i_1..i_n, k).
std::strong_ordering lex_cmp(const BasisElement& x, const BasisElement& y);

/// Number of distinct degrees in the support; 0 for the zero element.
std::size_t string_number(const Element& x);

/// Largest lower index over all terms and coordinates. Throws
/// std::domain_error on the zero element.
Index lp(const Element& x);

}  // namespace gwitt
