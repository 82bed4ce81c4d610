#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "instanton/plane_poly.hpp"

namespace instanton {

/// Lowest total degree of a monomial. Throws ValidationError on the zero
/// polynomial or a curve missing the origin.
int multiplicity(const PlanePoly& g);

/// 2 * (max degree)^2 + 10
int default_jet_cap(const std::vector<PlanePoly>& gens);

/// Colength at the origin of the ideal generated by `gens`, certified by two
/// equal consecutive truncation dimensions. hard_cap < 0 selects the default.
/// Throws SingularityError when no certificate appears.
int jet_colength(const std::vector<PlanePoly>& gens, int hard_cap = -1);

struct MilnorTjurina {
  int milnor = 0;
  int tjurina = 0;
};

MilnorTjurina milnor_tjurina(const PlanePoly& g);

/// True iff g has no repeated factor over Q (equivalently over C).
bool reducedness_check(const PlanePoly& g);

struct ResolutionOptions {
  int max_depth = 64;
  int max_tower_levels = 4;
};

/// One infinitely near point, or a Galois orbit of them when the coordinates
/// are not rational.
struct ResolutionNode {
  int depth = 0;
  int parent = -1;  // index into ResolutionTree::nodes
  std::size_t orbit_degree = 1;
  int tower_levels = 0;  // nontrivial extensions needed for the coordinates
  int multiplicity = 0;
  std::string germ;
};

struct ResolutionTree {
  std::vector<ResolutionNode> nodes;
  int delta = 0;
  int branches = 0;
};

/// delta = sum of orbit_degree * m(m-1)/2 over the tree, branches = total
/// orbit degree of the smooth leaves. Throws SingularityError("curve not
/// reduced"), UnsupportedTowerError, or CertificationError past max_depth.
ResolutionTree delta_and_branches(const PlanePoly& g, const ResolutionOptions& options = {});

struct CurveInvariants {
  int multiplicity = 0;
  int milnor = 0;
  int tjurina = 0;
  int delta = 0;
  int branches = 0;
  /// 2 delta == milnor + branches - 1
  bool milnor_consistent = false;
};

/// All invariants at the origin; throws CertificationError when Milnor's
/// relation fails.
CurveInvariants curve_invariants(const PlanePoly& g, const ResolutionOptions& options = {});

}  // namespace instanton
