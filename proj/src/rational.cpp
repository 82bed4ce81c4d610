#include "instanton/rational.hpp"

#include <stdexcept>

namespace instanton {

std::string to_string(const Rat& value) { return value.get_str(); }

Rat parse_rat(std::string_view text) {
  Rat out;
  if (text.empty() || out.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("not a rational number: " + std::string(text));
  }
  if (out.get_den() == 0) throw std::invalid_argument("zero denominator");
  out.canonicalize();
  return out;
}

}  // namespace instanton
