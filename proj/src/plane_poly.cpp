#include "instanton/plane_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "instanton/poly_format.hpp"

namespace instanton {

PlanePoly PlanePoly::constant(const Rat& c) { return monomial(c, 0, 0); }

PlanePoly PlanePoly::monomial(const Rat& c, int x_exp, int y_exp) {
  PlanePoly out;
  out.add_term(c, x_exp, y_exp);
  return out;
}

void PlanePoly::add_term(const Rat& coeff, int x_exp, int y_exp) {
  if (x_exp < 0 || y_exp < 0) throw std::invalid_argument("negative exponent in plane polynomial");
  if (instanton::is_zero(coeff)) return;
  const XYExponent key{x_exp, y_exp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (instanton::is_zero(it->second)) terms_.erase(it);
}

Rat PlanePoly::coefficient(int x_exp, int y_exp) const {
  auto it = terms_.find(XYExponent{x_exp, y_exp});
  return it == terms_.end() ? Rat(0) : it->second;
}

int PlanePoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
int PlanePoly::order() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

int PlanePoly::degree_in_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x);
  return d;
}

int PlanePoly::degree_in_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.y);
  return d;
}

PlanePoly PlanePoly::homogeneous_part(int degree) const {
  PlanePoly out;
  for (const auto& [e, c] : terms_) {
    if (e.degree() == degree) out.terms_.emplace(e, c);
  }
  return out;
}

PlanePoly PlanePoly::truncated(int max_degree) const {
  PlanePoly out;
  for (const auto& [e, c] : terms_) {
    if (e.degree() > max_degree) break;
    out.terms_.emplace(e, c);
  }
  return out;
}

PlanePoly PlanePoly::d_dx() const {
  PlanePoly out;
  for (const auto& [e, c] : terms_) {
    if (e.x > 0) out.add_term(c * e.x, e.x - 1, e.y);
  }
  return out;
}

PlanePoly PlanePoly::d_dy() const {
  PlanePoly out;
  for (const auto& [e, c] : terms_) {
    if (e.y > 0) out.add_term(c * e.y, e.x, e.y - 1);
  }
  return out;
}

PlanePoly PlanePoly::swapped_xy() const {
  PlanePoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(XYExponent{e.y, e.x}, c);
  return out;
}

PlanePoly PlanePoly::scaled(const Rat& factor) const {
  PlanePoly out;
  if (instanton::is_zero(factor)) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
  return out;
}

PlanePoly PlanePoly::shifted(int x_exp, int y_exp) const {
  PlanePoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(XYExponent{e.x + x_exp, e.y + y_exp}, c);
  return out;
}

PlanePoly& PlanePoly::operator+=(const PlanePoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e.x, e.y);
  return *this;
}

PlanePoly& PlanePoly::operator-=(const PlanePoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(-c, e.x, e.y);
  return *this;
}

PlanePoly operator*(const PlanePoly& a, const PlanePoly& b) {
  PlanePoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea.x + eb.x, ea.y + eb.y);
  }
  return out;
}

std::string PlanePoly::to_string() const {
  std::vector<FormattedTerm> items;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    items.push_back({it->second, {{"x", it->first.x}, {"y", it->first.y}}});
  }
  return format_terms(items);
}

}  // namespace instanton
