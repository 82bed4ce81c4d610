#pragma once

#include <cstddef>
#include <exception>
#include <string>
#include <vector>

#include "instanton/rational.hpp"

namespace instanton {

/// Element of a tower Q[t_1, ..., t_L] / (q_1(t_1), ..., q_L(t_1..t_L)).
/// Level 0 is a rational; level k is a polynomial in t_k of degree below
/// deg q_k whose coefficients live on level k - 1.
class TowerElem {
 public:
  TowerElem() = default;
  explicit TowerElem(Rat value) : value_(std::move(value)) {}

  int level() const noexcept { return level_; }
  const Rat& rational() const noexcept { return value_; }
  const std::vector<TowerElem>& coeffs() const noexcept { return coeffs_; }
  /// True only for the normalized zero representation.
  bool is_structural_zero() const noexcept;

  friend bool operator==(const TowerElem&, const TowerElem&) = default;

 private:
  friend class Tower;
  int level_ = 0;
  Rat value_;
  std::vector<TowerElem> coeffs_;
};

/// Univariate polynomial over one tower level, coefficients low to high.
using TowerPoly = std::vector<TowerElem>;

/// Raised when an inversion meets a zero divisor: the modulus on `level`
/// factors as factors[0] * factors[1] (both monic). Callers rerun their
/// computation once per factor on Tower::branch(split, i).
class TowerSplit : public std::exception {
 public:
  TowerSplit(int level, TowerPoly first, TowerPoly second)
      : level_(level), factors_{std::move(first), std::move(second)} {}
  int level() const noexcept { return level_; }
  const TowerPoly& factor(std::size_t i) const { return factors_[i]; }
  const char* what() const noexcept override { return "field tower split"; }

 private:
  int level_;
  TowerPoly factors_[2];
};

/// A stack of monic squarefree extensions of Q. Because the moduli are only
/// squarefree, the tower is a product of number fields; zero divisors are
/// discovered lazily (dynamic evaluation) and reported as TowerSplit.
class Tower {
 public:
  Tower() = default;

  int levels() const noexcept { return static_cast<int>(moduli_.size()); }
  /// Modulus of level k (1-based); its coefficients are level k - 1 elements.
  const TowerPoly& modulus(int k) const { return moduli_.at(static_cast<std::size_t>(k - 1)); }
  /// Dimension of the tower algebra over Q.
  std::size_t degree_over_q() const;
  /// Number of levels whose modulus has degree at least 2.
  int nontrivial_levels() const;

  TowerElem zero() const { return from_rat(Rat(0)); }
  TowerElem one() const { return from_rat(Rat(1)); }
  TowerElem from_rat(const Rat& value) const;
  /// The adjoined root t_L of the top level.
  TowerElem generator() const;
  /// Embeds an element of a lower level into the top level.
  TowerElem lift(const TowerElem& e) const;

  TowerElem add(const TowerElem& a, const TowerElem& b) const;
  TowerElem sub(const TowerElem& a, const TowerElem& b) const;
  TowerElem mul(const TowerElem& a, const TowerElem& b) const;
  TowerElem neg(const TowerElem& a) const;
  TowerElem scale(const TowerElem& a, const Rat& factor) const;
  TowerElem pow(const TowerElem& a, unsigned exp) const;

  /// Throws std::domain_error("division by zero") on structural zero and
  /// TowerSplit when `e` is a zero divisor.
  TowerElem inverse(const TowerElem& e) const;
  /// Zero test with dynamic evaluation: may throw TowerSplit.
  bool is_zero(const TowerElem& e) const;

  /// Adjoins a root of `monic_squarefree` (coefficients on the top level).
  Tower extend(const TowerPoly& monic_squarefree) const;
  /// The branch of `split` that keeps factor `which`.
  Tower branch(const TowerSplit& split, std::size_t which) const;
  /// Renormalizes an element carried over from a tower this one branched from.
  TowerElem reduce(const TowerElem& e) const;
  TowerPoly reduce(const TowerPoly& p) const;

  std::string to_string(const TowerElem& e) const;

  // Univariate polynomials over the top level.
  TowerPoly poly_add(const TowerPoly& a, const TowerPoly& b) const;
  TowerPoly poly_sub(const TowerPoly& a, const TowerPoly& b) const;
  TowerPoly poly_mul(const TowerPoly& a, const TowerPoly& b) const;
  TowerPoly poly_derivative(const TowerPoly& a) const;
  /// Degree after discarding zero leading coefficients (zero-tested; may split).
  /// -1 for the zero polynomial.
  int poly_degree(const TowerPoly& a) const;
  TowerPoly poly_monic(const TowerPoly& a) const;
  /// Division with remainder by a nonzero divisor.
  std::pair<TowerPoly, TowerPoly> poly_divmod(const TowerPoly& a, const TowerPoly& b) const;
  /// Monic gcd; zero only if both inputs are zero.
  TowerPoly poly_gcd(const TowerPoly& a, const TowerPoly& b) const;
  /// Monic squarefree part f / gcd(f, f').
  TowerPoly poly_squarefree_part(const TowerPoly& f) const;

 private:
  TowerElem zero_at(int level) const;
  TowerElem from_rat_at(const Rat& value, int level) const;
  TowerElem lift_to(const TowerElem& e, int level) const;
  TowerElem normalize_at(std::vector<TowerElem> coeffs, int level) const;
  TowerElem add_at(const TowerElem& a, const TowerElem& b, int level) const;
  TowerElem neg_at(const TowerElem& a, int level) const;
  TowerElem mul_at(const TowerElem& a, const TowerElem& b, int level) const;
  TowerElem scale_at(const TowerElem& a, const Rat& f, int level) const;
  TowerElem inverse_at(const TowerElem& e, int level) const;
  bool is_zero_at(const TowerElem& e, int level) const;
  TowerElem reduce_at(const TowerElem& e, int level) const;

  // Polynomials with coefficients on `level`.
  TowerPoly trim(TowerPoly p) const;
  TowerPoly padd(const TowerPoly& a, const TowerPoly& b, int level) const;
  TowerPoly pmul(const TowerPoly& a, const TowerPoly& b, int level) const;
  TowerPoly pscale(const TowerPoly& a, const TowerElem& c, int level) const;
  int pdegree(TowerPoly& a, int level) const;
  std::pair<TowerPoly, TowerPoly> pdivmod(TowerPoly a, TowerPoly b, int level) const;
  TowerPoly pgcd(TowerPoly a, TowerPoly b, int level) const;
  /// Remainder modulo the monic modulus of `level + 1`.
  TowerPoly reduce_mod(TowerPoly a, int level) const;

  std::vector<TowerPoly> moduli_;
};

/// Polynomial over Q viewed on the base level of `tower`.
TowerPoly rational_poly(const Tower& tower, const std::vector<Rat>& coeffs);

}  // namespace instanton
