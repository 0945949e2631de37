// Polynomial expression grammar shared by every input format:
//   expr   := term (('+'|'-') term)*
//   term   := ('-')* factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := uint | identifier | '(' expr ')'
// Juxtaposition is not multiplication; `2x` is a parse error.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "adjlab/polynomial.hpp"

namespace adjlab {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line, std::size_t col)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col)),
        line(line),
        col(col) {}
  std::size_t line;
  std::size_t col;
};

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace adjlab
