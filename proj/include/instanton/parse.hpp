#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "instanton/laurent.hpp"
#include "instanton/plane_poly.hpp"
#include "instanton/rational.hpp"

namespace instanton {

/// Curves use x, y with nonnegative exponents. Extension classes use z, u,
/// where only z may carry a negative exponent, written z^(-k).
enum class ParseContext { kCurve, kBundle };

/// Syntax tree of
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | var ['^' exp] | '(' expr ')'
///   exp    := integer | '(' '-' integer ')'
/// A leading sign is accepted only at the very start of the input.
struct PolyExpr {
  enum class Kind { kNumber, kVariable, kSum, kProduct };

  Kind kind = Kind::kNumber;
  std::size_t position = 0;
  Rat value;              // kNumber
  char variable = 0;      // kVariable
  int exponent = 1;       // kVariable
  std::vector<PolyExpr> children;
  std::vector<int> signs;  // kSum: +1 or -1 per child
};

/// Throws ParseError carrying the 0-based offset of the offending character.
PolyExpr parse_polynomial(std::string_view text, ParseContext context);

PlanePoly to_plane_poly(const PolyExpr& expr);
LaurentZU to_laurent(const PolyExpr& expr);

PlanePoly parse_curve(std::string_view text);
LaurentZU parse_extension(std::string_view text);

}  // namespace instanton
