#pragma once

#include <cstddef>
#include <vector>

#include "instanton/laurent.hpp"
#include "instanton/plane_poly.hpp"

namespace instanton {

/// True iff z^z_exp u^u_exp lies in the coefficient window of splitting type j:
/// 1 <= u <= 2j-2 and u-j+1 <= z <= j-1. Monomials outside it are coboundaries.
bool in_canonical_window(int j, int z_exp, int u_exp);

/// Window monomials ordered by u-degree, then z-degree.
std::vector<ZUExponent> canonical_window(int j);

/// (j-1)(2j-1), the number of window coefficients.
std::size_t window_size(int j);

/// Extension data (j, p) before reduction; p has no u-degree-0 monomial.
struct RawExtensionData {
  int j = 0;
  LaurentZU p;
};

/// Rank-2 bundle on the blown-up plane with transition matrix
///
///     [ z^j   p      ]
///     [ 0     z^(-j) ]
///
/// from the chart (z, u) to the chart (1/z, z u), with p inside the window.
class CanonicalBundle {
 public:
  /// Throws ValidationError if j < 1 or p leaves the window.
  CanonicalBundle(int j, LaurentZU p);

  int j() const noexcept { return j_; }
  const LaurentZU& p() const noexcept { return p_; }
  bool is_split() const noexcept { return p_.is_zero(); }

  friend bool operator==(const CanonicalBundle&, const CanonicalBundle&) = default;

 private:
  int j_;
  LaurentZU p_;
};

/// Throws ValidationError on a u-degree-0 term or j < 1.
void validate_extension_class(int j, const LaurentZU& p);

/// Deletes the monomials with z-degree >= j, z-degree <= u-degree - j, or
/// u-degree > 2j - 2.
CanonicalBundle canonicalize(const RawExtensionData& raw);

/// x^a y^b -> z^b u^(a+b), the blow-up map in the chart (z, u).
LaurentZU blow_up_substitution(const PlanePoly& curve);

/// The bundle E(j, p(u, zu)) attached to a curve through the origin.
CanonicalBundle from_curve(const PlanePoly& curve, int j);

/// (j, p) -> (j + 1, z u^2 p).
CanonicalBundle embed_next(const CanonicalBundle& b);

/// True iff p has no monomial of u-degree <= n, i.e. the extension is trivial
/// on the n-th formal neighborhood of the exceptional line.
bool splits_on_neighborhood(const CanonicalBundle& b, int n);

}  // namespace instanton
