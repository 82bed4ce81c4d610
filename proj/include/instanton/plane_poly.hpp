#pragma once

#include <compare>
#include <map>
#include <string>

#include "instanton/rational.hpp"

namespace instanton {

/// Exponent pair of x^x y^y, ordered by total degree, then x-degree descending
/// (so x^2 precedes x*y precedes y^2 inside one degree).
struct XYExponent {
  int x = 0;
  int y = 0;
  int degree() const noexcept { return x + y; }
  friend std::strong_ordering operator<=>(const XYExponent& a, const XYExponent& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return b.x <=> a.x;
  }
  friend bool operator==(const XYExponent&, const XYExponent&) = default;
};

/// Sparse polynomial in x, y over the rationals (plane curves and jets).
class PlanePoly {
 public:
  using Terms = std::map<XYExponent, Rat>;

  PlanePoly() = default;
  static PlanePoly constant(const Rat& c);
  static PlanePoly monomial(const Rat& c, int x_exp, int y_exp);

  void add_term(const Rat& coeff, int x_exp, int y_exp);
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rat coefficient(int x_exp, int y_exp) const;
  Rat constant_term() const { return coefficient(0, 0); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Lowest total degree of a monomial (the multiplicity at the origin); -1 for zero.
  int order() const;
  int degree_in_x() const;
  int degree_in_y() const;

  PlanePoly homogeneous_part(int degree) const;
  /// Drops every monomial of total degree > max_degree.
  PlanePoly truncated(int max_degree) const;
  PlanePoly d_dx() const;
  PlanePoly d_dy() const;
  PlanePoly swapped_xy() const;
  PlanePoly scaled(const Rat& factor) const;
  /// x^a y^b * this
  PlanePoly shifted(int x_exp, int y_exp) const;

  PlanePoly& operator+=(const PlanePoly& other);
  PlanePoly& operator-=(const PlanePoly& other);
  friend PlanePoly operator+(PlanePoly a, const PlanePoly& b) { return a += b; }
  friend PlanePoly operator-(PlanePoly a, const PlanePoly& b) { return a -= b; }
  friend PlanePoly operator*(const PlanePoly& a, const PlanePoly& b);
  friend bool operator==(const PlanePoly& a, const PlanePoly& b) { return a.terms_ == b.terms_; }

  /// Graded order, highest degree first: "x^5*y - y^4".
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace instanton
