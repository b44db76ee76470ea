#pragma once

#include "gwitt/ideals.hpp"

#include <cstdint>
#include <random>

namespace gwitt {

/// Seeded generator of random algebra data for property checks.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  Index uniform(Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// p/q with |p| <= 9, 1 <= q <= 4; never zero when nonzero is set.
  Rational rational(bool nonzero = true);

  BasisElement basis(const AlgebraConfig& cfg, const Box& box);
  /// Basis element of B_+ inside the window.
  BasisElement plus_basis(Index upper_bound, Index lower_bound);
  FunctionTerm function_term(const AlgebraConfig& cfg, const Box& box);

  /// Up to max_terms terms inside the box; may cancel to zero only if
  /// allow_zero is set.
  Element element(const AlgebraConfig& cfg, const Box& box, int max_terms = 4, bool allow_zero = false);
  /// Terms share one random degree.
  Element homogeneous(const AlgebraConfig& cfg, const Box& box, int max_terms = 3);
  Element plus_element(Index upper_bound, Index lower_bound, int max_terms = 4);
  FunctionElement function(const AlgebraConfig& cfg, const Box& box, int max_terms = 4);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gwitt
