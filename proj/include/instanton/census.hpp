#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "instanton/bundle.hpp"
#include "instanton/direct_image.hpp"

namespace instanton {

/// n canonical classes whose window coefficients are uniform integers in
/// [-range, range]. Sample i draws from its own stream seeded by (seed, i).
std::vector<CanonicalBundle> sample_polynomials(int j, std::size_t n, std::uint64_t seed, int range);

/// Every coefficient vector in [-range, range]^J, in lexicographic order.
std::vector<CanonicalBundle> exhaustive_polynomials(int j, int range);

struct CensusOptions {
  int j = 2;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  int range = 3;
  bool exhaustive = false;  // ignore samples/seed and sweep the whole box
  unsigned threads = 0;     // 0: hardware concurrency
  std::optional<int> max_degree;
};

struct CensusReport {
  int j = 0;
  std::size_t samples = 0;
  int range = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  /// (w, h) -> frequency
  std::map<std::pair<int, int>, std::size_t> histogram;
  std::vector<std::string> violations;
  InstantonNumbers split_probe;
  std::optional<InstantonNumbers> phi_probe;
  /// Samples of charge j^2 whose class is nonzero.
  std::size_t nonsplit_max_charge = 0;
};

/// Bound violations of (w, h) at splitting type j; empty when all hold.
std::vector<std::string> bound_violations(int j, const InstantonNumbers& n);

CensusReport census(const CensusOptions& options);

/// Violations empty, split probe at charge j^2, and no nonzero class there.
bool verify_stratification_bounds(const CensusReport& report);

}  // namespace instanton
