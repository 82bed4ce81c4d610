#include "instanton/field_tower.hpp"

#include <stdexcept>

namespace instanton {

bool TowerElem::is_structural_zero() const noexcept {
  return level_ == 0 ? sgn(value_) == 0 : coeffs_.empty();
}

std::size_t Tower::degree_over_q() const {
  std::size_t d = 1;
  for (const auto& q : moduli_) d *= q.size() - 1;
  return d;
}

int Tower::nontrivial_levels() const {
  int n = 0;
  for (const auto& q : moduli_) n += q.size() > 2 ? 1 : 0;
  return n;
}

TowerElem Tower::zero_at(int level) const {
  TowerElem e;
  e.level_ = level;
  return e;
}

TowerElem Tower::from_rat_at(const Rat& value, int level) const {
  if (level == 0) return TowerElem(value);
  TowerElem e = zero_at(level);
  if (sgn(value) != 0) e.coeffs_.push_back(from_rat_at(value, level - 1));
  return e;
}

TowerElem Tower::from_rat(const Rat& value) const { return from_rat_at(value, levels()); }

TowerElem Tower::generator() const {
  if (levels() == 0) throw std::logic_error("the rationals have no generator");
  const int top = levels();
  if (modulus(top).size() == 2) {
    // degree-1 modulus t + c: the root is -c
    TowerElem e = zero_at(top);
    TowerElem c = neg_at(modulus(top)[0], top - 1);
    if (!c.is_structural_zero()) e.coeffs_.push_back(std::move(c));
    return e;
  }
  TowerElem e = zero_at(top);
  e.coeffs_ = {zero_at(top - 1), from_rat_at(Rat(1), top - 1)};
  return e;
}

TowerElem Tower::lift_to(const TowerElem& e, int level) const {
  if (e.level_ > level) throw std::logic_error("cannot lower a tower element");
  TowerElem cur = e;
  while (cur.level_ < level) {
    TowerElem up = zero_at(cur.level_ + 1);
    if (!cur.is_structural_zero()) up.coeffs_.push_back(std::move(cur));
    cur = std::move(up);
  }
  return cur;
}

TowerElem Tower::lift(const TowerElem& e) const { return lift_to(e, levels()); }

TowerPoly Tower::trim(TowerPoly p) const {
  while (!p.empty() && p.back().is_structural_zero()) p.pop_back();
  return p;
}

TowerElem Tower::normalize_at(std::vector<TowerElem> coeffs, int level) const {
  TowerElem e = zero_at(level);
  e.coeffs_ = reduce_mod(trim(std::move(coeffs)), level - 1);
  return e;
}

TowerElem Tower::add_at(const TowerElem& a, const TowerElem& b, int level) const {
  if (level == 0) return TowerElem(a.value_ + b.value_);
  TowerElem out = zero_at(level);
  out.coeffs_ = padd(a.coeffs_, b.coeffs_, level - 1);
  return out;
}

TowerElem Tower::neg_at(const TowerElem& a, int level) const {
  if (level == 0) return TowerElem(-a.value_);
  TowerElem out = zero_at(level);
  for (const auto& c : a.coeffs_) out.coeffs_.push_back(neg_at(c, level - 1));
  return out;
}

TowerElem Tower::scale_at(const TowerElem& a, const Rat& f, int level) const {
  if (level == 0) return TowerElem(a.value_ * f);
  if (sgn(f) == 0) return zero_at(level);
  TowerElem out = zero_at(level);
  for (const auto& c : a.coeffs_) out.coeffs_.push_back(scale_at(c, f, level - 1));
  return out;
}

TowerElem Tower::mul_at(const TowerElem& a, const TowerElem& b, int level) const {
  if (level == 0) return TowerElem(a.value_ * b.value_);
  if (a.is_structural_zero() || b.is_structural_zero()) return zero_at(level);
  return normalize_at(pmul(a.coeffs_, b.coeffs_, level - 1), level);
}

TowerElem Tower::add(const TowerElem& a, const TowerElem& b) const { return add_at(a, b, levels()); }
TowerElem Tower::sub(const TowerElem& a, const TowerElem& b) const {
  return add_at(a, neg_at(b, levels()), levels());
}
TowerElem Tower::mul(const TowerElem& a, const TowerElem& b) const { return mul_at(a, b, levels()); }
TowerElem Tower::neg(const TowerElem& a) const { return neg_at(a, levels()); }
TowerElem Tower::scale(const TowerElem& a, const Rat& f) const { return scale_at(a, f, levels()); }

TowerElem Tower::pow(const TowerElem& a, unsigned exp) const {
  TowerElem result = one();
  TowerElem base = a;
  while (exp > 0) {
    if (exp & 1U) result = mul(result, base);
    exp >>= 1U;
    if (exp > 0) base = mul(base, base);
  }
  return result;
}

TowerPoly Tower::padd(const TowerPoly& a, const TowerPoly& b, int level) const {
  TowerPoly out(std::max(a.size(), b.size()), zero_at(level));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size() && i < b.size()) {
      out[i] = add_at(a[i], b[i], level);
    } else {
      out[i] = i < a.size() ? a[i] : b[i];
    }
  }
  return trim(std::move(out));
}

TowerPoly Tower::pmul(const TowerPoly& a, const TowerPoly& b, int level) const {
  if (a.empty() || b.empty()) return {};
  TowerPoly out(a.size() + b.size() - 1, zero_at(level));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_structural_zero()) continue;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (b[k].is_structural_zero()) continue;
      out[i + k] = add_at(out[i + k], mul_at(a[i], b[k], level), level);
    }
  }
  return trim(std::move(out));
}

TowerPoly Tower::pscale(const TowerPoly& a, const TowerElem& c, int level) const {
  TowerPoly out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(mul_at(x, c, level));
  return trim(std::move(out));
}

TowerPoly Tower::reduce_mod(TowerPoly a, int level) const {
  const TowerPoly& q = moduli_[static_cast<std::size_t>(level)];
  const std::size_t d = q.size() - 1;
  a = trim(std::move(a));
  while (a.size() > d) {
    const TowerElem lc = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i < d; ++i) {
      a[shift + i] = add_at(a[shift + i], neg_at(mul_at(lc, q[i], level), level), level);
    }
    a.pop_back();
    a = trim(std::move(a));
  }
  return a;
}

int Tower::pdegree(TowerPoly& a, int level) const {
  a = trim(std::move(a));
  while (!a.empty() && is_zero_at(a.back(), level)) {
    a.pop_back();
    a = trim(std::move(a));
  }
  return static_cast<int>(a.size()) - 1;
}

std::pair<TowerPoly, TowerPoly> Tower::pdivmod(TowerPoly a, TowerPoly b, int level) const {
  const int db = pdegree(b, level);
  if (db < 0) throw std::domain_error("division by zero");
  const TowerElem inv_lc = inverse_at(b.back(), level);
  a = trim(std::move(a));
  TowerPoly quot;
  if (static_cast<int>(a.size()) - 1 >= db) quot.assign(a.size() - static_cast<std::size_t>(db), zero_at(level));
  while (static_cast<int>(a.size()) - 1 >= db) {
    const std::size_t shift = a.size() - 1 - static_cast<std::size_t>(db);
    const TowerElem f = mul_at(a.back(), inv_lc, level);
    quot[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = add_at(a[shift + i], neg_at(mul_at(f, b[i], level), level), level);
    }
    // the leading coefficient cancels exactly
    a.pop_back();
    a = trim(std::move(a));
  }
  return {trim(std::move(quot)), a};
}

TowerPoly Tower::pgcd(TowerPoly a, TowerPoly b, int level) const {
  while (pdegree(b, level) >= 0) {
    TowerPoly r = pdivmod(a, b, level).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (pdegree(a, level) < 0) return {};
  return pscale(a, inverse_at(a.back(), level), level);
}

TowerElem Tower::inverse_at(const TowerElem& e, int level) const {
  if (e.is_structural_zero()) throw std::domain_error("division by zero");
  if (level == 0) return TowerElem(1 / e.value_);
  const int cl = level - 1;
  const TowerPoly& q = moduli_[static_cast<std::size_t>(cl)];
  TowerPoly r0 = q;
  TowerPoly r1 = e.coeffs_;
  TowerPoly s0;
  TowerPoly s1{from_rat_at(Rat(1), cl)};
  while (pdegree(r1, cl) >= 0) {
    auto [quot, rem] = pdivmod(r0, r1, cl);
    TowerPoly s2 = padd(s0, pscale(pmul(quot, s1, cl), from_rat_at(Rat(-1), cl), cl), cl);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const int d = pdegree(r0, cl);
  if (d == 0) {
    TowerElem out = zero_at(level);
    out.coeffs_ = reduce_mod(pscale(s0, inverse_at(r0[0], cl), cl), cl);
    return out;
  }
  TowerPoly g = pscale(r0, inverse_at(r0.back(), cl), cl);
  TowerPoly cofactor = pdivmod(q, g, cl).first;
  throw TowerSplit(level, std::move(g), std::move(cofactor));
}

bool Tower::is_zero_at(const TowerElem& e, int level) const {
  if (e.is_structural_zero()) return true;
  if (level == 0) return false;
  (void)inverse_at(e, level);
  return false;
}

TowerElem Tower::inverse(const TowerElem& e) const { return inverse_at(e, levels()); }
bool Tower::is_zero(const TowerElem& e) const { return is_zero_at(e, levels()); }

Tower Tower::extend(const TowerPoly& monic_squarefree) const {
  TowerPoly q = trim(monic_squarefree);
  if (q.size() < 2) throw std::invalid_argument("extension modulus must have positive degree");
  if (!(q.back() == from_rat(Rat(1)))) throw std::invalid_argument("extension modulus must be monic");
  Tower out = *this;
  out.moduli_.push_back(std::move(q));
  return out;
}

Tower Tower::branch(const TowerSplit& split, std::size_t which) const {
  Tower out = *this;
  const auto k = static_cast<std::size_t>(split.level());
  out.moduli_[k - 1] = split.factor(which);
  for (std::size_t above = k + 1; above <= out.moduli_.size(); ++above) {
    TowerPoly reduced;
    for (const auto& c : out.moduli_[above - 1]) {
      reduced.push_back(out.reduce_at(c, static_cast<int>(above) - 1));
    }
    out.moduli_[above - 1] = out.trim(std::move(reduced));
  }
  return out;
}

TowerElem Tower::reduce_at(const TowerElem& e, int level) const {
  if (level == 0) return e;
  std::vector<TowerElem> coeffs;
  coeffs.reserve(e.coeffs_.size());
  for (const auto& c : e.coeffs_) coeffs.push_back(reduce_at(c, level - 1));
  return normalize_at(std::move(coeffs), level);
}

TowerElem Tower::reduce(const TowerElem& e) const { return reduce_at(e, e.level_); }

TowerPoly Tower::reduce(const TowerPoly& p) const {
  TowerPoly out;
  for (const auto& c : p) out.push_back(reduce(c));
  return trim(std::move(out));
}

std::string Tower::to_string(const TowerElem& e) const {
  if (e.level_ == 0) return e.value_.get_str();
  if (e.coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < e.coeffs_.size(); ++i) {
    if (e.coeffs_[i].is_structural_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(e.coeffs_[i]) + ")";
    if (i > 0) out += "*t" + std::to_string(e.level_) + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out;
}

TowerPoly Tower::poly_add(const TowerPoly& a, const TowerPoly& b) const { return padd(a, b, levels()); }

TowerPoly Tower::poly_sub(const TowerPoly& a, const TowerPoly& b) const {
  return padd(a, pscale(b, from_rat(Rat(-1)), levels()), levels());
}

TowerPoly Tower::poly_mul(const TowerPoly& a, const TowerPoly& b) const { return pmul(a, b, levels()); }

TowerPoly Tower::poly_derivative(const TowerPoly& a) const {
  TowerPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(scale(a[i], Rat(static_cast<long>(i))));
  return trim(std::move(out));
}

int Tower::poly_degree(const TowerPoly& a) const {
  TowerPoly copy = a;
  return pdegree(copy, levels());
}

TowerPoly Tower::poly_monic(const TowerPoly& a) const {
  TowerPoly copy = a;
  if (pdegree(copy, levels()) < 0) return {};
  return pscale(copy, inverse(copy.back()), levels());
}

std::pair<TowerPoly, TowerPoly> Tower::poly_divmod(const TowerPoly& a, const TowerPoly& b) const {
  return pdivmod(a, b, levels());
}

TowerPoly Tower::poly_gcd(const TowerPoly& a, const TowerPoly& b) const { return pgcd(a, b, levels()); }

TowerPoly Tower::poly_squarefree_part(const TowerPoly& f) const {
  TowerPoly monic = poly_monic(f);
  if (monic.empty()) return {};
  TowerPoly g = poly_gcd(monic, poly_derivative(monic));
  return poly_monic(poly_divmod(monic, g).first);
}

TowerPoly rational_poly(const Tower& tower, const std::vector<Rat>& coeffs) {
  TowerPoly out;
  for (const auto& c : coeffs) out.push_back(tower.from_rat(c));
  while (!out.empty() && out.back().is_structural_zero()) out.pop_back();
  return out;
}

}  // namespace instanton
