#pragma once

#include <cstddef>
#include <vector>

#include "instanton/plane_poly.hpp"

namespace instanton {

/// A vector in R^rank, R = Q[x, y].
using PolyVector = std::vector<PlanePoly>;

struct ColengthResult {
  int colength = 0;
  /// Truncation degree K at which the certificate was obtained.
  int certified_at = 0;
};

/// Colength at the origin of the submodule of R^rank generated by `gens`.
///
/// d_K = dim R^rank / (N + m^(K+1) R^rank) is computed from degree-K
/// truncations. Once d_K stays constant for `stable_steps` consecutive
/// increments of K, Nakayama gives m^(K+1) R^rank inside N locally and d_K is
/// the colength. Returns std::nullopt-like failure by throwing
/// CertificationError when no certificate appears up to `hard_cap`.
ColengthResult module_colength(const std::vector<PolyVector>& gens, std::size_t rank, int hard_cap,
                               int stable_steps = 1);

}  // namespace instanton
