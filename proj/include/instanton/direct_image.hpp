#pragma once

#include <cstddef>
#include <vector>

#include "instanton/jets.hpp"
#include "instanton/laurent.hpp"
#include "instanton/linalg.hpp"

namespace instanton {

/// Truncation bounds for the direct-image computation. Results do not depend
/// on them once certified; bounds that are too small raise CertificationError.
struct DirectImageBounds {
  int gen_bound = 0;   // largest u-degree searched for module generators
  int rel_bound = 0;   // largest filtration degree searched for relations
  int coker_cap = 0;   // hard cap for the Ext^1 colength

  /// gen = 2j+2, rel = gen + 2j + 2, cap = rel + j^2 + 2.
  static DirectImageBounds defaults(int j);
  /// gen = max_degree, the others derived as in defaults().
  static DirectImageBounds from_max_degree(int j, int max_degree);
};

struct InstantonNumbers {
  int width = 0;
  int height = 0;
  int charge() const noexcept { return width + height; }
  friend bool operator==(const InstantonNumbers&, const InstantonNumbers&) = default;
};

/// Cech model for R^1 pi_* of the bundle. In units of z^j, the first-row
/// cochains that survive both charts form the windows
///   W_m = span{ z^k u^m : m-j+1 <= k <= -1 },  0 <= m <= j-2,
/// and the coboundaries still available are p * d with
///   d = z^k' u^m',  0 <= m' <= j-3,  -j <= k' <= m'.
/// `psi` maps the d's (columns) to the windows (rows).
struct HeightProblem {
  std::vector<ZUExponent> window;   // row labels
  std::vector<ZUExponent> sources;  // column labels
  QMatrix psi;
};

HeightProblem height_problem(int j, const LaurentZU& p);

/// h = dim of the windows - rank psi. Accepts raw or canonical p.
int height(int j, const LaurentZU& p);

/// A polynomial section (a, b) of the bundle on the chart (z, u): z-degrees
/// are nonnegative, deg_z b_m <= m + j, and every u^m slice of z^j a + p b
/// has z-degree <= m. The ring Q[x, y] acts by x = u, y = z u.
struct Section {
  LaurentZU a;
  LaurentZU b;
  friend bool operator==(const Section&, const Section&) = default;
};

/// Dimensions of the successive quotients M_{<=m} / M_{<=m-1}, m = 0..max_degree,
/// where M_{<=m} is the space of sections of u-degree at most m.
std::vector<std::size_t> section_space_dim(int j, const LaurentZU& p, int max_degree);

/// Finite free presentation 0 -> R^r --phi--> R^g -> M -> 0 of M = pi_* E.
struct Presentation {
  std::vector<Section> generators;
  std::vector<int> generator_degrees;
  std::vector<int> relation_degrees;
  /// phi[g][r]: coefficient of generator g in relation r.
  std::vector<std::vector<PlanePoly>> phi;
};

/// Filtered-Nakayama generators and relations up to the given bounds.
/// Certified by: relation count = generator count - 2, phi injective, and
/// the Hilbert function of R^g / im phi matching M up to rel_bound.
Presentation module_presentation(int j, const LaurentZU& p, const DirectImageBounds& bounds);

/// w = length of Ext^1(M, R) = length of coker(phi^T), which equals the length
/// of (pi_* E)^vv / pi_* E.
int width(int j, const LaurentZU& p, const DirectImageBounds& bounds);
int width_of_presentation(const Presentation& pres, const DirectImageBounds& bounds);

/// (w, h) with the bound checks j <= w + h <= j^2, h >= j - 1, w >= 1.
InstantonNumbers charge_report(int j, const LaurentZU& p, const DirectImageBounds& bounds);
InstantonNumbers charge_report(int j, const LaurentZU& p);

}  // namespace instanton
