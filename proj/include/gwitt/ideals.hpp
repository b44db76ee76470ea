#pragma once

#include "gwitt/algebra.hpp"
#include "gwitt/row_space.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gwitt {

/// Truncation window: b is inside iff every |a_r| <= upper_bound and every
/// |i_r| <= lower_bound.
struct Box {
  Index upper_bound = 0;
  Index lower_bound = 0;

  bool contains(const BasisElement& b) const;
  bool contains(const Element& x) const;
};

/// Every basis element of rank cfg.rank() inside the box, lex-descending.
std::vector<BasisElement> enumerate_box(const AlgebraConfig& cfg, const Box& box);

struct Lemma1Result {
  BasisElement multiplier;
  Element result;
  /// Value of the schedule counter c that succeeded.
  int attempt = 0;
};

/// Finds M = (0..0|j_1..j_n)_t with j_1 > ... > j_n > 0 such that [M, l] is
/// non-zero and every lower index of every term is positive.
///
/// t is the first coordinate with a_t != 0 or i_t != 0 in the lex-greatest
/// term of l that has one (1 if none does); j_r = c * K^(n-r+1) with
/// K = max(2, lp(l) + 2) for c = 1..16. Throws std::invalid_argument for
/// l = 0 and SearchExhausted when no c works.
Lemma1Result lemma1_multiplier(const AlgebraConfig& cfg, const Element& l);

inline constexpr int kLemma1MaxAttempts = 16;

class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StopReason { targets_reached, fixpoint, iteration_limit };

/// One spanning vector of a closure run, recorded with its provenance: it is
/// bracket(multiplier, entries[parent].value), or the generator itself.
struct ClosureEntry {
  Element value;
  std::optional<std::size_t> parent;
  std::optional<BasisElement> multiplier;
  int depth = 0;
};

struct ClosureReport {
  Element generator;
  std::size_t multiplier_count = 0;
  std::size_t rank = 0;
  /// Directions k whose target (0..0|0..0)_k is a member, ascending.
  std::vector<int> reached_targets;
  /// Deepest bracket round started: one more than the largest depth of an
  /// entry that was bracketed with a multiplier.
  int iterations = 0;
  /// All n targets reached, hence the ideal is the whole algebra.
  bool saturated = false;
  StopReason stop = StopReason::fixpoint;
};

struct IdealClosure {
  ClosureReport report;
  RowSpace space;
  std::vector<ClosureEntry> entries;
};

/// Spans an inner approximation of the ideal <l>: brackets every recorded
/// vector with every basis element of mbox and keeps a product only if its
/// whole support lies in rbox (products are never truncated, so every row
/// stays a genuine member of the ideal). A product of an entry at depth d has
/// depth d + 1; entries at depth max_iter are not bracketed further.
///
/// Pairs (entry, m) are tried best-first by score, then depth, entry index
/// and lex-descending position of m. The score is the smallest sum of
/// |a_r + b_r| over the entry's terms (b the upper indices of m) plus the sum
/// of |lower indices of m|, so products near degree zero come first. Stops
/// once all targets (0..0|0..0)_k are members, or when no pair is left
/// (a fixpoint, or the iteration limit if some entry hit max_iter).
IdealClosure ideal_closure(const AlgebraConfig& cfg, const Element& l, const Box& mbox, const Box& rbox,
                           int max_iter);

bool is_member(const RowSpace& space, const Element& x);
inline bool is_member(const IdealClosure& closure, const Element& x) { return is_member(closure.space, x); }

/// Recomputes entry `index` from the generator by re-applying the recorded
/// chain of multipliers.
Element replay_entry(const AlgebraConfig& cfg, const IdealClosure& closure, std::size_t index);

/// Target (0..0|0..0)_k.
BasisElement closure_target(const AlgebraConfig& cfg, int k);

/// Scans the basis elements m of the box, lower-index shells first (by
/// sum of |i_r|) and lex-descending within a shell, and returns the first m
/// for which [l, m] is not a scalar multiple of m. std::nullopt means every m
/// in the box is an eigenvector of ad_l.
std::optional<BasisElement> ad_diag_check(const AlgebraConfig& cfg, const Element& l, const Box& box);

}  // namespace gwitt
