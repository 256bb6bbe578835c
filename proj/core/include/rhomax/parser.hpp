#pragma once

// Textual polynomial syntax used by the catalog:
//   integers and rationals (via '/'), identifiers, + - * / ^ and parentheses.
// Identifiers naming a constant symbol of the tower become constants; all
// other identifiers are polynomial variables. '^' takes an integer exponent
// (negative only where a rational function is allowed).

#include <stdexcept>
#include <string>

#include "rhomax/rational_function.hpp"

namespace rhomax::sym {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

RationalFunction parse_rational_function(const std::string& text, const TowerPtr& tower);
/// Throws ParseError when the parsed expression has a non-constant denominator.
MPoly parse_polynomial(const std::string& text, const TowerPtr& tower);

}  // namespace rhomax::sym
