#pragma once

#include <string>
#include <utility>
#include <vector>

#include "instanton/rational.hpp"

namespace instanton {

struct FormattedTerm {
  Rat coeff;
  std::vector<std::pair<std::string, int>> powers;  // zero exponents are skipped
};

/// Renders "c1*x^a*y^b - c2*y + 3/2" in the given term order; "0" for no terms.
std::string format_terms(const std::vector<FormattedTerm>& terms);

}  // namespace instanton
