#pragma once

#include "eulersym/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eulersym {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

class HomogeneityError : public std::invalid_argument {
 public:
  HomogeneityError(unsigned high, unsigned low);
  unsigned high() const { return high_; }
  unsigned low() const { return low_; }

 private:
  unsigned high_;
  unsigned low_;
};

struct ParsedPolynomial {
  Polynomial polynomial;
  std::vector<std::string> names;  // names[i] is variable i
};

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*      division by nonzero constants only
//   factor  := ('-' | '+') factor | power
//   power   := primary ('^' factor)?             right-associative, constant exponent
//   primary := integer | identifier | '(' expr ')'
// Identifiers xK (K >= 1) are variable K; any other identifier (x_12, a_11, ...)
// gets the next free index after the largest xK, in sorted name order. With
// explicit names, exactly those identifiers are accepted, in that order.
// The zero polynomial is rejected.
ParsedPolynomial parse_polynomial(std::string_view text);
ParsedPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

// Throws HomogeneityError naming the largest and smallest degrees present.
void require_homogeneous(const Polynomial& p);

}  // namespace eulersym
