#include "instanton/poly_format.hpp"

namespace instanton {

std::string format_terms(const std::vector<FormattedTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : terms) {
    const bool negative = sgn(term.coeff) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const Rat magnitude = abs(term.coeff);
    std::string body;
    for (const auto& [var, exp] : term.powers) {
      if (exp == 0) continue;
      if (!body.empty()) body += "*";
      body += var;
      if (exp < 0) {
        body += "^(" + std::to_string(exp) + ")";
      } else if (exp != 1) {
        body += "^" + std::to_string(exp);
      }
    }
    if (body.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += body;
    } else {
      out += magnitude.get_str() + "*" + body;
    }
  }
  return out;
}

}  // namespace instanton
