#pragma once

#include "gwitt/linear_combination.hpp"

#include <cstddef>
#include <vector>

namespace gwitt {

/// Rank n and the slopes m_p = g_p(1) of the additive maps g_p : Z -> F.
/// An additive map on Z is g(a) = a * g(1), so injectivity is m_p != 0.
class AlgebraConfig {
 public:
  /// Throws std::invalid_argument when n < 1, the slope count differs from n,
  /// or some slope is zero.
  AlgebraConfig(int n, std::vector<Rational> slopes);

  /// Rank n with every slope equal to 1 (g_p the inclusion Z -> Q).
  static AlgebraConfig standard(int n);

  int rank() const { return n_; }
  const std::vector<Rational>& slopes() const { return slopes_; }
  const Rational& slope(int p) const;

  friend bool operator==(const AlgebraConfig&, const AlgebraConfig&) = default;

 private:
  int n_;
  std::vector<Rational> slopes_;
};

/// g_p(a) = m_p * a for 1 <= p <= n; std::out_of_range otherwise.
Rational g_eval(const AlgebraConfig& cfg, int p, Index a);

/// Throws std::invalid_argument if b does not have the config's rank.
void check_rank(const AlgebraConfig& cfg, const BasisElement& b);
void check_rank(const AlgebraConfig& cfg, const Element& x);

/// The structure constants of W(g_p, n):
///   [(a|i)_k, (b|j)_l] = g_k(b_k) (a+b|i+j)_l + j_k (a+b|i+j-e_k)_l
///                      - g_l(a_l) (a+b|i+j)_k - i_l (a+b|i+j-e_l)_k
Element bracket(const AlgebraConfig& cfg, const BasisElement& x, const BasisElement& y);

/// Bilinear extension of the basis bracket.
Element bracket(const AlgebraConfig& cfg, const Element& x, const Element& y);

/// (a|i)_k acting as the operator e^{g(a).x} x^i d/dx_k on e^{g(b).x} x^j.
FunctionElement apply_operator(const AlgebraConfig& cfg, const BasisElement& x, const FunctionTerm& f);
FunctionElement apply_operator(const AlgebraConfig& cfg, const Element& x, const FunctionElement& f);

/// X(Y(f)) - Y(X(f)), computed only through apply_operator. Independent of
/// the structure constants in bracket().
FunctionElement oracle_commutator(const AlgebraConfig& cfg, const Element& x, const Element& y,
                                  const FunctionTerm& f);

/// The derivation d/dx = (0|0)_1 of rank one.
inline BasisElement partial() { return basis1(0, 0); }

}  // namespace gwitt
