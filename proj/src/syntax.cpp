#include "gwitt/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <type_traits>
#include <sstream>

namespace gwitt {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n, std::size_t line = 1, std::size_t column_offset = 0)
      : text_(text), n_(n), line_(line), column_offset_(column_offset) {}

  template <class Key>
  LinearCombination<Key> parse_sum() {
    skip_space();
    if (peek() == '0') {
      // Bare "0" is the zero element; "0*(...)" is a coefficient.
      std::size_t save = pos_;
      ++pos_;
      skip_space();
      if (at_end()) return {};
      pos_ = save;
    }
    std::vector<Term<Key>> terms;
    Rational sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    for (;;) {
      auto term = parse_term<Key>();
      term.coef *= sign;
      terms.push_back(std::move(term));
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+', '-' or end of input");
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    return LinearCombination<Key>::from_terms(std::move(terms));
  }

  BasisElement parse_single_basis() {
    skip_space();
    auto t = parse_term<BasisElement>();
    if (t.coef != 1) fail("expected a bare basis element");
    skip_space();
    return std::move(t.key);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw ParseError(message, line_, column_offset_ + at + 1);
  }

 private:
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view digits() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  Index parse_int() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    const std::string_view d = digits();
    Integer value{std::string(d)};
    if (negative) value = -value;
    if (!value.fits_slong_p()) fail_at("integer out of range", start);
    return value.get_si();
  }

  Rational parse_rational_literal() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    Integer num{std::string(digits())};
    Integer den = 1;
    skip_space();
    if (peek() == '/') {
      ++pos_;
      den = Integer{std::string(digits())};
      if (den == 0) fail_at("zero denominator", start);
    }
    Rational q(num, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  IndexVector parse_ints() {
    IndexVector out;
    out.push_back(parse_int());
    skip_space();
    while (peek() == ',') {
      ++pos_;
      out.push_back(parse_int());
      skip_space();
    }
    return out;
  }

  template <class Key>
  Term<Key> parse_term() {
    skip_space();
    Rational coef = 1;
    if (peek() != '(') {
      coef = parse_rational_literal();
      expect('*');
    }
    skip_space();
    const std::size_t open = pos_;
    expect('(');
    const IndexVector upper = parse_ints();
    expect('|');
    const IndexVector lower = parse_ints();
    expect(')');
    if (upper.size() != static_cast<std::size_t>(n_) || lower.size() != static_cast<std::size_t>(n_))
      fail_at("expected " + std::to_string(n_) + " indices on each side of '|' (rank n = " +
                  std::to_string(n_) + ")",
              open);
    if constexpr (std::is_same_v<Key, BasisElement>) {
      expect('_');
      const std::size_t at = pos_;
      const Index dir = parse_int();
      if (dir < 1 || dir > n_) fail_at("direction " + std::to_string(dir) + " out of range 1.." + std::to_string(n_), at);
      return {BasisElement(upper, lower, static_cast<int>(dir)), coef};
    } else {
      return {FunctionTerm(upper, lower), coef};
    }
  }

  std::string_view text_;
  int n_;
  std::size_t line_;
  std::size_t column_offset_;
  std::size_t pos_ = 0;
};

void append_coefficient(std::ostringstream& out, const Rational& coef, bool first) {
  const bool negative = coef < 0;
  if (first) {
    if (negative) out << '-';
  } else {
    out << (negative ? " - " : " + ");
  }
  const Rational magnitude = abs(coef);
  if (magnitude != 1) out << to_string(magnitude) << '*';
}

template <class Key, class Print>
std::string format_sum(const LinearCombination<Key>& x, Print print_key) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : x) {
    append_coefficient(out, t.coef, first);
    print_key(out, t.key);
    first = false;
  }
  return out.str();
}

void print_tuple(std::ostream& out, std::span<const Index> upper, std::span<const Index> lower) {
  out << '(';
  for (std::size_t r = 0; r < upper.size(); ++r) out << (r ? "," : "") << upper[r];
  out << '|';
  for (std::size_t r = 0; r < lower.size(); ++r) out << (r ? "," : "") << lower[r];
  out << ')';
}

}  // namespace

Element parse_element(std::string_view text, int n) { return Parser(text, n).parse_sum<BasisElement>(); }

BasisElement parse_basis(std::string_view text, int n) {
  Parser p(text, n);
  BasisElement b = p.parse_single_basis();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return b;
}

FunctionElement parse_function(std::string_view text, int n) {
  return Parser(text, n).parse_sum<FunctionTerm>();
}

std::string format_basis(const BasisElement& b) {
  std::ostringstream out;
  print_tuple(out, b.upper(), b.lower());
  out << '_' << b.dir();
  return out.str();
}

std::string format_function_term(const FunctionTerm& f) {
  std::ostringstream out;
  print_tuple(out, f.upper(), f.lower());
  return out.str();
}

std::string format_element(const Element& x) {
  return format_sum(x, [](std::ostream& out, const BasisElement& b) { out << format_basis(b); });
}

std::string format_function(const FunctionElement& f) {
  return format_sum(f, [](std::ostream& out, const FunctionTerm& t) { out << format_function_term(t); });
}

DerivationTable parse_derivation_table(std::string_view text, std::optional<PlusWindow> window) {
  std::map<BasisElement, Element> images;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError("expected '<basis> -> <element>'", line_no, first + 1);

    Parser key_parser(line.substr(0, arrow), 1, line_no);
    BasisElement key = key_parser.parse_single_basis();
    if (!key_parser.at_end()) key_parser.fail("unexpected input before '->'");
    if (!in_bplus(key)) throw ParseError("key " + format_basis(key) + " is not in B_+", line_no, first + 1);

    Element image = Parser(line.substr(arrow + 2), 1, line_no, arrow + 2).parse_sum<BasisElement>();
    if (!images.emplace(key, std::move(image)).second)
      throw ParseError("duplicate entry for " + format_basis(key), line_no, first + 1);
  }

  if (!window) {
    PlusWindow w;
    for (const auto& [key, image] : images) {
      w.upper_bound = std::max(w.upper_bound, std::abs(key.upper(0)));
      w.lower_bound = std::max(w.lower_bound, key.lower(0));
    }
    window = w;
  }
  return DerivationTable(*window, std::move(images));
}

std::string format_derivation_table(const DerivationTable& table) {
  std::ostringstream out;
  for (auto it = table.images().rbegin(); it != table.images().rend(); ++it)
    out << format_basis(it->first) << " -> " << format_element(it->second) << '\n';
  return out.str();
}

}  // namespace gwitt
