// Tokenizer and parser for the shared textual expression grammar.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ['^' ['-'] integer]
//   atom   := integer | symbol | '(' expr ')'
//
// A symbol is a run of letters followed by a run of digits (x2, Gd1, h12).
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "redalg/poly.hpp"

namespace redalg {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

struct Expr {
  enum class Kind { number, symbol, add, sub, mul, div, neg, pow };
  Kind kind;
  std::size_t pos = 0;
  Integer value;       // number
  std::string letters;  // symbol
  std::string digits;   // symbol
  int exponent = 0;     // pow
  std::unique_ptr<Expr> lhs, rhs;
};

std::unique_ptr<Expr> parse_expression(std::string_view text);

}  // namespace redalg
