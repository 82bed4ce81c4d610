#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "instanton/rational.hpp"

namespace instanton {

/// Exponent pair of a monomial z^z u^u on the chart U = {(z, u)} of the
/// blown-up plane. The second chart is (xi, v) = (1/z, z u).
/// Ordered by u-degree first, then z-degree.
struct ZUExponent {
  int u = 0;
  int z = 0;
  auto operator<=>(const ZUExponent&) const = default;
};

/// Sparse polynomial in u (nonnegative exponents) and z, 1/z.
/// Zero coefficients are never stored.
class LaurentZU {
 public:
  using Terms = std::map<ZUExponent, Rat>;

  LaurentZU() = default;

  static LaurentZU monomial(const Rat& coeff, int z_exp, int u_exp);

  /// Adds coeff * z^z_exp u^u_exp. Throws std::invalid_argument on u_exp < 0.
  void add_term(const Rat& coeff, int z_exp, int u_exp);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rat coefficient(int z_exp, int u_exp) const;

  std::optional<int> min_u_degree() const;
  std::optional<int> max_u_degree() const;
  std::optional<int> min_z_degree() const;
  std::optional<int> max_z_degree() const;
  /// z-degree range of the u^u_exp slice, if nonempty.
  std::optional<int> min_z_degree(int u_exp) const;
  std::optional<int> max_z_degree(int u_exp) const;

  LaurentZU scaled(const Rat& factor) const;

  LaurentZU& operator+=(const LaurentZU& other);
  LaurentZU& operator-=(const LaurentZU& other);
  friend LaurentZU operator+(LaurentZU a, const LaurentZU& b) { return a += b; }
  friend LaurentZU operator-(LaurentZU a, const LaurentZU& b) { return a -= b; }
  friend LaurentZU operator*(const LaurentZU& a, const LaurentZU& b);
  friend bool operator==(const LaurentZU& a, const LaurentZU& b) { return a.terms_ == b.terms_; }

  /// Fixed monomial order (u-degree, then z-degree, ascending); "0" for zero.
  /// Negative z exponents are written z^(-k). The output parses back in the
  /// bundle context.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Exact product.
LaurentZU zu_multiply(const LaurentZU& a, const LaurentZU& b);

}  // namespace instanton
