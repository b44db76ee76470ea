#pragma once

#include "gwitt/derivations.hpp"
#include "gwitt/linear_combination.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gwitt {

// Text form of elements (whitespace insignificant):
//
//   element  := term (('+' | '-') term)*  |  '0'
//   term     := [rational '*'] '(' ints '|' ints ')' '_' int
//   rational := ['-'] digits ['/' digits]
//   ints     := int (',' int)*
//
// A leading sign on the first term is accepted. Functions of F[e^{±x}, x]
// use the same grammar without the '_' direction suffix.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses an element of rank n. Throws ParseError on syntax errors, index
/// tuples whose length differs from n, and directions outside 1..n.
Element parse_element(std::string_view text, int n);
BasisElement parse_basis(std::string_view text, int n);
FunctionElement parse_function(std::string_view text, int n);

/// Canonical text, terms lex-descending; "0" for the zero element.
std::string format_element(const Element& x);
std::string format_basis(const BasisElement& b);
std::string format_function(const FunctionElement& f);
std::string format_function_term(const FunctionTerm& f);

/// Derivation table file: one `<basis> -> <element>` entry per line; blank
/// lines and lines starting with '#' are ignored. Rank one. Without a window
/// the smallest window holding every key is used.
DerivationTable parse_derivation_table(std::string_view text, std::optional<PlusWindow> window = std::nullopt);

std::string format_derivation_table(const DerivationTable& table);

}  // namespace gwitt
