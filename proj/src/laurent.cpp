#include "instanton/laurent.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "instanton/poly_format.hpp"

namespace instanton {

LaurentZU LaurentZU::monomial(const Rat& coeff, int z_exp, int u_exp) {
  LaurentZU out;
  out.add_term(coeff, z_exp, u_exp);
  return out;
}

void LaurentZU::add_term(const Rat& coeff, int z_exp, int u_exp) {
  if (u_exp < 0) throw std::invalid_argument("negative u exponent");
  if (instanton::is_zero(coeff)) return;
  const ZUExponent key{u_exp, z_exp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (instanton::is_zero(it->second)) terms_.erase(it);
}

Rat LaurentZU::coefficient(int z_exp, int u_exp) const {
  auto it = terms_.find(ZUExponent{u_exp, z_exp});
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<int> LaurentZU::min_u_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.u;
}

std::optional<int> LaurentZU::max_u_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.u;
}

std::optional<int> LaurentZU::min_z_degree() const {
  std::optional<int> out;
  for (const auto& [e, c] : terms_) out = out ? std::min(*out, e.z) : e.z;
  return out;
}

std::optional<int> LaurentZU::max_z_degree() const {
  std::optional<int> out;
  for (const auto& [e, c] : terms_) out = out ? std::max(*out, e.z) : e.z;
  return out;
}

std::optional<int> LaurentZU::min_z_degree(int u_exp) const {
  auto it = terms_.lower_bound(ZUExponent{u_exp, std::numeric_limits<int>::min()});
  if (it == terms_.end() || it->first.u != u_exp) return std::nullopt;
  return it->first.z;
}

std::optional<int> LaurentZU::max_z_degree(int u_exp) const {
  auto it = terms_.upper_bound(ZUExponent{u_exp, std::numeric_limits<int>::max()});
  if (it == terms_.begin()) return std::nullopt;
  --it;
  if (it->first.u != u_exp) return std::nullopt;
  return it->first.z;
}

LaurentZU LaurentZU::scaled(const Rat& factor) const {
  LaurentZU out;
  if (instanton::is_zero(factor)) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
  return out;
}

LaurentZU& LaurentZU::operator+=(const LaurentZU& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e.z, e.u);
  return *this;
}

LaurentZU& LaurentZU::operator-=(const LaurentZU& other) {
  for (const auto& [e, c] : other.terms_) add_term(-c, e.z, e.u);
  return *this;
}

LaurentZU operator*(const LaurentZU& a, const LaurentZU& b) {
  LaurentZU out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea.z + eb.z, ea.u + eb.u);
  }
  return out;
}

LaurentZU zu_multiply(const LaurentZU& a, const LaurentZU& b) { return a * b; }

std::string LaurentZU::to_string() const {
  std::vector<FormattedTerm> items;
  items.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    items.push_back({c, {{"z", e.z}, {"u", e.u}}});
  }
  return format_terms(items);
}

}  // namespace instanton
