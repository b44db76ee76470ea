#pragma once

#include "gwitt/algebra.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gwitt {

// Derivations of the subalgebra W(g,1)_+ spanned by (a|i)_1 with a in Z and
// i >= 0. Everything here requires rank one.

/// True iff b lies in B_+ (rank one, lower index >= 0).
bool in_bplus(const BasisElement& b);
bool in_bplus(const Element& x);

using DerivationRule = std::function<Element(const BasisElement&)>;

/// b -> s * a(b) * b, where a(b) is the upper index.
DerivationRule scalar_derivation(Rational s);

/// ad_G : b -> [G, b].
DerivationRule inner_derivation(const AlgebraConfig& cfg, Element g);

/// Finite window of B_+: (a|i)_1 with |a| <= upper_bound and 0 <= i <= lower_bound.
struct PlusWindow {
  Index upper_bound = 0;
  Index lower_bound = 0;

  bool contains(const BasisElement& b) const;
  /// Window elements, lex-descending.
  std::vector<BasisElement> elements() const;
};

/// A derivation given by its values on a window of B_+.
class DerivationTable {
 public:
  /// Throws std::invalid_argument if a key lies outside the window or B_+, or
  /// an image is not a rank-one element.
  DerivationTable(PlusWindow window, std::map<BasisElement, Element> images);

  static DerivationTable tabulate(const DerivationRule& rule, PlusWindow window);

  const PlusWindow& window() const { return window_; }
  const std::map<BasisElement, Element>& images() const { return images_; }
  const Element* find(const BasisElement& b) const;

 private:
  PlusWindow window_;
  std::map<BasisElement, Element> images_;
};

/// d/dx on F[e^{±x}, x]: (a, i) -> m a (a, i) + i (a, i-1).
FunctionElement differentiate(const AlgebraConfig& cfg, const FunctionElement& f);

/// An antiderivative g with differentiate(g) = f. Terms with a != 0 are
/// solved by back-substitution from the top lower index down; (0, i)
/// integrates to (0, i+1) / (i+1). The result has no constant term.
/// Requires rank one and f with non-negative lower indices.
FunctionElement integrate(const AlgebraConfig& cfg, const FunctionElement& f);

/// Reinterprets (a|i)_1 as the function (a, i) and back.
FunctionElement as_function(const Element& x);
Element as_vector_field(const FunctionElement& f);

struct DerivationViolation {
  BasisElement left;
  BasisElement right;

  friend bool operator==(const DerivationViolation&, const DerivationViolation&) = default;
};

/// Checks D([b1, b2]) = [D b1, b2] + [b1, D b2] for every pair of table keys
/// whose bracket is supported on table keys.
std::vector<DerivationViolation> verify_derivation(const AlgebraConfig& cfg, const DerivationTable& table);

/// D = ad_G + c ad_d + S_s, where S_s is scalar_derivation(s) and d = (0|0)_1.
struct Decomposition {
  Element inner;
  Rational c;
  Rational s;
  /// Window elements on which the recomposed rule disagrees with the table.
  std::vector<BasisElement> residuals;
};

DerivationRule recompose(const AlgebraConfig& cfg, const Decomposition& d);

class NotADerivation : public std::runtime_error {
 public:
  NotADerivation(const std::string& what, Decomposition partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const Decomposition& partial() const { return partial_; }

 private:
  Decomposition partial_;
};

/// Splits a tabulated derivation into inner and scalar parts.
///
/// G solves d(G) = -f where D(d) = f d, so that ad_G(d) = D(d). The rest
/// R = D - ad_G kills d; c is read from R((0|1)_1) = c (0|0)_1 and s from
/// R((1|0)_1) = (c m + s) (1|0)_1. Every table entry is then checked against
/// the recomposition. Throws NotADerivation when D(d) is not of the form f d
/// with f in F[e^{±x}, x], or when some entry disagrees.
Decomposition decompose(const AlgebraConfig& cfg, const DerivationTable& table);

}  // namespace gwitt
