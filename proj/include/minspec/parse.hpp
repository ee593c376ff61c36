#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "minspec/algebra.hpp"
#include "minspec/term.hpp"

namespace minspec {

struct ParseError : std::runtime_error {
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + message),
        offset(offset) {}
  std::size_t offset;
};

// Grammar (whitespace insignificant):
//   equation := term ('=' | '≈') term
//   term     := factor { '*' factor }          left-associative
//   factor   := variable | 'f' '(' term ')' | '(' term ')'
//   variable := [a-z][a-z0-9]*
// 'f' immediately followed by '(' is the unary symbol, otherwise it is
// an ordinary variable. Mixing 'f' and '*' in one equation is rejected,
// as are more than four distinct variables. The result is canonical.
Equation parse_equation(std::string_view text);

// Either a constructor line:
//   Z n | Zab n a b | C n | ILeft n a | IRight n a | D4 | sheffer |
//   and2 | proj n | prod(<spec>, <spec>) | pow(<spec>, m)
// or an explicit block: "groupoid n" followed by n rows of n entries,
// or "unary n" followed by one row (rows are the left operand).
Algebra parse_algebra(std::string_view text);

// Fully parenthesized, variables x y z w, '=' between the sides;
// parse_equation(render(e)) == e.
std::string render(const Equation& e);

// Explicit block form; parse_algebra(render(g)) == g.
std::string render(const Algebra& g);

}  // namespace minspec
