#pragma once

#include "gwitt/algebra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gwitt {

struct SuiteResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  /// Description of the first failing instance, empty when all passed.
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

/// Randomized property suites over cfg: bracket laws, the operator oracle,
/// gradation, ordering, text round-trip, row reduction, the positive-multiplier search,
/// ad-diagonalizability refutation, ideal closure, and (on the rank-one
/// algebra with slope m_1) integration and derivation decomposition.
/// Deterministic for a fixed seed.
std::vector<SuiteResult> run_selftest(const AlgebraConfig& cfg, std::uint64_t seed, int trials);

}  // namespace gwitt
