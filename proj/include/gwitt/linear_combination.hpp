#pragma once

#include "gwitt/basis.hpp"
#include "gwitt/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace gwitt {

template <class Key>
struct Term {
  Key key;
  Rational coef;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Finitely supported Key -> Rational map in canonical form: terms sorted
/// lex-descending by key, keys distinct, no zero coefficient. Two values are
/// equal iff their term lists are equal.
template <class Key>
class LinearCombination {
 public:
  using term_type = Term<Key>;

  LinearCombination() = default;
  explicit LinearCombination(Key key, Rational coef = 1) {
    if (coef != 0) terms_.push_back({std::move(key), std::move(coef)});
  }

  /// Builds a canonical value from an arbitrary term list (unsorted, with
  /// repeats and zeros allowed).
  static LinearCombination from_terms(std::vector<term_type> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const term_type& x, const term_type& y) { return x.key > y.key; });
    LinearCombination out;
    out.terms_.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.terms_.empty() && out.terms_.back().key == t.key) {
        out.terms_.back().coef += t.coef;
      } else {
        if (!out.terms_.empty() && out.terms_.back().coef == 0) out.terms_.pop_back();
        out.terms_.push_back(std::move(t));
      }
    }
    if (!out.terms_.empty() && out.terms_.back().coef == 0) out.terms_.pop_back();
    return out;
  }

  std::span<const term_type> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Lex-greatest term. Precondition: non-zero.
  const term_type& leading() const { return terms_.front(); }

  Rational coefficient(const Key& key) const {
    auto it = find(key);
    return it == terms_.end() ? Rational(0) : it->coef;
  }
  bool contains(const Key& key) const { return find(key) != terms_.end(); }

  /// this += factor * other, merging in one pass.
  LinearCombination& add_scaled(const LinearCombination& other, const Rational& factor) {
    if (factor == 0 || other.is_zero()) return *this;
    std::vector<term_type> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto x = terms_.begin();
    auto y = other.terms_.begin();
    while (x != terms_.end() || y != other.terms_.end()) {
      if (y == other.terms_.end() || (x != terms_.end() && x->key > y->key)) {
        merged.push_back(std::move(*x++));
      } else if (x == terms_.end() || y->key > x->key) {
        merged.push_back({y->key, factor * y->coef});
        ++y;
      } else {
        Rational c = x->coef + factor * y->coef;
        if (c != 0) merged.push_back({std::move(x->key), std::move(c)});
        ++x;
        ++y;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }

  LinearCombination& operator+=(const LinearCombination& o) { return add_scaled(o, 1); }
  LinearCombination& operator-=(const LinearCombination& o) { return add_scaled(o, -1); }
  LinearCombination& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.coef *= c;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination x, const LinearCombination& y) { return x += y; }
  friend LinearCombination operator-(LinearCombination x, const LinearCombination& y) { return x -= y; }
  friend LinearCombination operator-(LinearCombination x) { return x *= Rational(-1); }
  friend LinearCombination operator*(const Rational& c, LinearCombination x) { return x *= c; }
  friend LinearCombination operator*(LinearCombination x, const Rational& c) { return x *= c; }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  auto find(const Key& key) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const term_type& t, const Key& k) { return t.key > k; });
    return (it != terms_.end() && it->key == key) ? it : terms_.end();
  }

  std::vector<term_type> terms_;
};

using Element = LinearCombination<BasisElement>;
using FunctionElement = LinearCombination<FunctionTerm>;

}  // namespace gwitt
