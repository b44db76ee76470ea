#include "gwitt/ideals.hpp"

#include "gwitt/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <queue>
#include <tuple>
#include <stdexcept>

namespace gwitt {

bool Box::contains(const BasisElement& b) const {
  for (Index a : b.upper())
    if (std::abs(a) > upper_bound) return false;
  for (Index i : b.lower())
    if (std::abs(i) > lower_bound) return false;
  return true;
}

bool Box::contains(const Element& x) const {
  return std::ranges::all_of(x, [this](const auto& t) { return contains(t.key); });
}

std::vector<BasisElement> enumerate_box(const AlgebraConfig& cfg, const Box& box) {
  if (box.upper_bound < 0 || box.lower_bound < 0) throw std::invalid_argument("box bounds must be non-negative");
  const auto n = static_cast<std::size_t>(cfg.rank());
  IndexVector upper(n, -box.upper_bound);
  IndexVector lower(n, -box.lower_bound);
  std::vector<BasisElement> out;

  // Odometer over the 2n index coordinates.
  auto advance = [&]() {
    for (std::size_t r = n; r-- > 0;) {
      if (lower[r] < box.lower_bound) {
        ++lower[r];
        return true;
      }
      lower[r] = -box.lower_bound;
    }
    for (std::size_t r = n; r-- > 0;) {
      if (upper[r] < box.upper_bound) {
        ++upper[r];
        return true;
      }
      upper[r] = -box.upper_bound;
    }
    return false;
  };
  do {
    for (int k = 1; k <= cfg.rank(); ++k) out.emplace_back(upper, lower, k);
  } while (advance());

  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

Lemma1Result lemma1_multiplier(const AlgebraConfig& cfg, const Element& l) {
  if (l.is_zero()) throw std::invalid_argument("lemma1_multiplier needs a non-zero element");
  check_rank(cfg, l);
  const int n = cfg.rank();

  int t = 1;
  bool found = false;
  for (const auto& term : l) {
    for (int r = 0; r < n && !found; ++r) {
      if (term.key.upper(r) != 0 || term.key.lower(r) != 0) {
        t = r + 1;
        found = true;
      }
    }
    if (found) break;
  }

  const Index base = std::max<Index>(2, lp(l) + 2);
  const IndexVector zeros(static_cast<std::size_t>(n), 0);
  for (int c = 1; c <= kLemma1MaxAttempts; ++c) {
    IndexVector lower(static_cast<std::size_t>(n));
    Index power = 1;
    for (int r = n; r-- > 0;) {
      power *= base;
      lower[static_cast<std::size_t>(r)] = c * power;
    }
    BasisElement m(zeros, lower, t);
    Element result = bracket(cfg, Element(m), l);
    if (result.is_zero()) continue;
    const bool positive = std::ranges::all_of(result, [](const auto& term) {
      return std::ranges::all_of(term.key.lower(), [](Index i) { return i >= 1; });
    });
    if (positive) return {std::move(m), std::move(result), c};
  }
  throw SearchExhausted("lemma1_multiplier: search exhausted after " + std::to_string(kLemma1MaxAttempts) +
                        " attempts");
}

BasisElement closure_target(const AlgebraConfig& cfg, int k) {
  const IndexVector zeros(static_cast<std::size_t>(cfg.rank()), 0);
  return BasisElement(zeros, zeros, k);
}

bool is_member(const RowSpace& space, const Element& x) { return space.contains(x); }

namespace {

bool update_targets(const AlgebraConfig& cfg, const RowSpace& space, std::vector<bool>& reached) {
  bool all = true;
  for (int k = 1; k <= cfg.rank(); ++k) {
    auto slot = reached.begin() + (k - 1);
    if (!*slot) *slot = space.contains(Element(closure_target(cfg, k)));
    all = all && *slot;
  }
  return all;
}

// Candidate products are scored by how far the product can land from degree
// zero plus the multiplier's lower-index spread; smaller is tried first.
std::vector<std::pair<Index, std::uint32_t>> scored_multipliers(const std::vector<BasisElement>& multipliers,
                                                               const Element& x) {
  std::vector<std::pair<Index, std::uint32_t>> out;
  out.reserve(multipliers.size());
  for (std::size_t j = 0; j < multipliers.size(); ++j) {
    const BasisElement& m = multipliers[j];
    Index distance = -1;
    for (const auto& t : x) {
      Index d = 0;
      for (std::size_t r = 0; r < m.rank(); ++r) d += std::abs(m.upper(r) + t.key.upper(r));
      if (distance < 0 || d < distance) distance = d;
    }
    for (Index i : m.lower()) distance += std::abs(i);
    out.emplace_back(distance, static_cast<std::uint32_t>(j));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
  return out;
}

}  // namespace

IdealClosure ideal_closure(const AlgebraConfig& cfg, const Element& l, const Box& mbox, const Box& rbox,
                           int max_iter) {
  if (l.is_zero()) throw std::invalid_argument("ideal_closure needs a non-zero generator");
  check_rank(cfg, l);
  if (!rbox.contains(l)) throw std::invalid_argument("generator support must lie inside the result box");
  if (max_iter < 0) throw std::invalid_argument("max_iter must be non-negative");

  const std::vector<BasisElement> multipliers = enumerate_box(cfg, mbox);

  IdealClosure out;
  out.report.generator = l;
  out.report.multiplier_count = multipliers.size();
  out.space.insert(l);
  out.entries.push_back({l, std::nullopt, std::nullopt, 0});

  std::vector<bool> reached(static_cast<std::size_t>(cfg.rank()), false);
  bool done = update_targets(cfg, out.space, reached);
  out.report.stop = done ? StopReason::targets_reached : StopReason::fixpoint;

  // Best-first over (entry, multiplier) pairs: each entry keeps a cursor
  // into its scored multiplier list and the heap holds every live cursor.
  struct Cursor {
    Index score;
    int depth;
    std::size_t entry;
    std::size_t position;
    bool operator>(const Cursor& o) const {
      return std::tie(score, depth, entry, position) > std::tie(o.score, o.depth, o.entry, o.position);
    }
  };
  std::priority_queue<Cursor, std::vector<Cursor>, std::greater<>> frontier;
  std::vector<std::vector<std::pair<Index, std::uint32_t>>> schedule;
  bool capped = false;
  auto enqueue = [&](std::size_t q) {
    schedule.resize(out.entries.size());
    if (out.entries[q].depth >= max_iter) {
      capped = true;
      return;
    }
    schedule[q] = scored_multipliers(multipliers, out.entries[q].value);
    if (!schedule[q].empty()) frontier.push({schedule[q][0].first, out.entries[q].depth, q, 0});
  };
  if (!done) enqueue(0);

  while (!done && !frontier.empty()) {
    const Cursor c = frontier.top();
    frontier.pop();
    auto& list = schedule[c.entry];
    const BasisElement& m = multipliers[list[c.position].second];
    if (c.position + 1 < list.size()) frontier.push({list[c.position + 1].first, c.depth, c.entry, c.position + 1});
    else list = {};
    out.report.iterations = std::max(out.report.iterations, c.depth + 1);

    Element product = bracket(cfg, Element(m), out.entries[c.entry].value);
    if (product.is_zero() || !rbox.contains(product)) continue;
    if (!out.space.insert(product)) continue;
    out.entries.push_back({std::move(product), c.entry, m, c.depth + 1});
    if (update_targets(cfg, out.space, reached)) {
      done = true;
      out.report.stop = StopReason::targets_reached;
      break;
    }
    enqueue(out.entries.size() - 1);
  }
  if (!done) out.report.stop = capped ? StopReason::iteration_limit : StopReason::fixpoint;

  out.report.rank = out.space.rank();
  for (int k = 1; k <= cfg.rank(); ++k)
    if (reached[static_cast<std::size_t>(k - 1)]) out.report.reached_targets.push_back(k);
  out.report.saturated = done;
  return out;
}

Element replay_entry(const AlgebraConfig& cfg, const IdealClosure& closure, std::size_t index) {
  std::vector<BasisElement> chain;
  std::size_t at = index;
  while (closure.entries.at(at).parent) {
    chain.push_back(*closure.entries[at].multiplier);
    at = *closure.entries[at].parent;
  }
  Element value = closure.report.generator;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) value = bracket(cfg, Element(*it), value);
  return value;
}

namespace {

Index lower_shell(const BasisElement& b) {
  Index s = 0;
  for (Index i : b.lower()) s += std::abs(i);
  return s;
}

bool is_eigenvector(const Element& image, const BasisElement& m) {
  return image.is_zero() || (image.size() == 1 && image.leading().key == m);
}

}  // namespace

std::optional<BasisElement> ad_diag_check(const AlgebraConfig& cfg, const Element& l, const Box& box) {
  if (l.is_zero()) throw std::invalid_argument("ad_diag_check needs a non-zero element");
  check_rank(cfg, l);
  std::vector<BasisElement> candidates = enumerate_box(cfg, box);
  std::stable_sort(candidates.begin(), candidates.end(), [](const BasisElement& x, const BasisElement& y) {
    return lower_shell(x) < lower_shell(y);
  });
  for (const auto& m : candidates)
    if (!is_eigenvector(bracket(cfg, l, Element(m)), m)) return m;
  return std::nullopt;
}

}  // namespace gwitt
