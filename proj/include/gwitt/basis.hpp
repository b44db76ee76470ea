#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace gwitt {

using Index = std::int64_t;
using IndexVector = boost::container::small_vector<Index, 8>;

namespace detail {

inline std::strong_ordering compare_coords(const IndexVector& x, const IndexVector& y) {
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace detail

/// A generator (a_1..a_n | i_1..i_n)_k of W(g_p, n).
///
/// Stored as the flat tuple (a_1, ..., a_n, i_1, ..., i_n, k) so that the
/// natural lexicographic order on Z^{2n+1} is plain tuple comparison.
class BasisElement {
 public:
  BasisElement() = default;
  BasisElement(std::span<const Index> upper, std::span<const Index> lower, int dir);
  BasisElement(const IndexVector& upper, const IndexVector& lower, int dir)
      : BasisElement(std::span<const Index>(upper.data(), upper.size()),
                     std::span<const Index>(lower.data(), lower.size()), dir) {}

  std::size_t rank() const { return (coords_.size() - 1) / 2; }
  std::span<const Index> upper() const { return {coords_.data(), rank()}; }
  std::span<const Index> lower() const { return {coords_.data() + rank(), rank()}; }
  /// 1-based direction k.
  int dir() const { return static_cast<int>(coords_.back()); }
  Index upper(std::size_t r) const { return coords_[r]; }
  Index lower(std::size_t r) const { return coords_[rank() + r]; }

  const IndexVector& coords() const { return coords_; }

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
  friend std::strong_ordering operator<=>(const BasisElement& x, const BasisElement& y) {
    return detail::compare_coords(x.coords_, y.coords_);
  }

 private:
  IndexVector coords_;
};

/// A monomial e^{g_1(a_1)x_1} ... e^{g_n(a_n)x_n} x^i of F[e^{±x}, x]; a basis
/// element without its direction.
class FunctionTerm {
 public:
  FunctionTerm() = default;
  FunctionTerm(std::span<const Index> upper, std::span<const Index> lower);
  FunctionTerm(const IndexVector& upper, const IndexVector& lower)
      : FunctionTerm(std::span<const Index>(upper.data(), upper.size()),
                     std::span<const Index>(lower.data(), lower.size())) {}

  std::size_t rank() const { return coords_.size() / 2; }
  std::span<const Index> upper() const { return {coords_.data(), rank()}; }
  std::span<const Index> lower() const { return {coords_.data() + rank(), rank()}; }
  Index upper(std::size_t r) const { return coords_[r]; }
  Index lower(std::size_t r) const { return coords_[rank() + r]; }

  const IndexVector& coords() const { return coords_; }

  friend bool operator==(const FunctionTerm&, const FunctionTerm&) = default;
  friend std::strong_ordering operator<=>(const FunctionTerm& x, const FunctionTerm& y) {
    return detail::compare_coords(x.coords_, y.coords_);
  }

 private:
  IndexVector coords_;
};

/// Convenience constructors for rank one, mostly used by W(g,1)_+ code.
inline BasisElement basis1(Index a, Index i) {
  const Index up[] = {a};
  const Index lo[] = {i};
  return BasisElement(up, lo, 1);
}
inline FunctionTerm function1(Index a, Index i) {
  const Index up[] = {a};
  const Index lo[] = {i};
  return FunctionTerm(up, lo);
}

struct BasisElementHash {
  std::size_t operator()(const BasisElement& b) const noexcept;
};

}  // namespace gwitt
