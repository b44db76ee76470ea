#include "gwitt/basis.hpp"

#include <boost/container_hash/hash.hpp>

namespace gwitt {

BasisElement::BasisElement(std::span<const Index> upper, std::span<const Index> lower, int dir) {
  if (upper.size() != lower.size() || upper.empty())
    throw std::invalid_argument("basis element needs equally long, non-empty index tuples");
  if (dir < 1 || static_cast<std::size_t>(dir) > upper.size())
    throw std::invalid_argument("direction out of range");
  coords_.assign(upper.begin(), upper.end());
  coords_.insert(coords_.end(), lower.begin(), lower.end());
  coords_.push_back(dir);
}

FunctionTerm::FunctionTerm(std::span<const Index> upper, std::span<const Index> lower) {
  if (upper.size() != lower.size() || upper.empty())
    throw std::invalid_argument("function term needs equally long, non-empty index tuples");
  coords_.assign(upper.begin(), upper.end());
  coords_.insert(coords_.end(), lower.begin(), lower.end());
}

std::size_t BasisElementHash::operator()(const BasisElement& b) const noexcept {
  return boost::hash_range(b.coords().begin(), b.coords().end());
}

}  // namespace gwitt
