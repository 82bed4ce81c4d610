#include "doctest.h"
#include "instanton/census.hpp"

using namespace instanton;

TEST_CASE("sampling") {
  for (const auto& b : sample_polynomials(1, 4, 9, 3)) CHECK(b == CanonicalBundle(1, LaurentZU()));
  for (const auto& b : sample_polynomials(2, 30, 1, 3)) {
    for (const auto& [e, c] : b.p().terms()) {
      const bool allowed = (e.u == 1 && (e.z == 0 || e.z == 1)) || (e.u == 2 && e.z == 1);
      CHECK(allowed);
      CHECK(abs(c) <= 3);
    }
  }
  CHECK(sample_polynomials(3, 5, 42, 3) == sample_polynomials(3, 5, 42, 3));
  CHECK_FALSE(sample_polynomials(3, 5, 42, 3) == sample_polynomials(3, 5, 43, 3));
  // sample i does not depend on how many are drawn
  CHECK(sample_polynomials(3, 2, 42, 3)[1] == sample_polynomials(3, 5, 42, 3)[1]);
}

TEST_CASE("exhaustive sweep") {
  const auto all = exhaustive_polynomials(2, 1);
  CHECK(all.size() == 27);
  CHECK(all.front().p().coefficient(0, 1) == -1);
  CHECK(exhaustive_polynomials(1, 3).size() == 1);
}

TEST_CASE("census of the j = 2 box") {
  CensusOptions o;
  o.j = 2;
  o.range = 2;
  o.exhaustive = true;
  const CensusReport r = census(o);
  CHECK(r.samples == 125);
  std::map<std::pair<int, int>, std::size_t> expected{{{1, 1}, 120}, {{2, 1}, 4}, {{3, 1}, 1}};
  CHECK(r.histogram == expected);
  CHECK(r.violations.empty());
  CHECK(verify_stratification_bounds(r));
}

TEST_CASE("census at j = 1") {
  CensusOptions o;
  o.j = 1;
  o.samples = 10;
  const CensusReport r = census(o);
  CHECK(r.histogram.size() == 1);
  CHECK(r.histogram.begin()->first == std::pair{1, 0});
  CHECK(verify_stratification_bounds(r));
}

TEST_CASE("census is deterministic across thread counts") {
  CensusOptions o;
  o.j = 3;
  o.samples = 24;
  o.seed = 5;
  o.threads = 1;
  const CensusReport a = census(o);
  o.threads = 4;
  const CensusReport b = census(o);
  CHECK(a.histogram == b.histogram);
  CHECK(a.violations == b.violations);
  CHECK(a.phi_probe->width == b.phi_probe->width);
  CHECK(verify_stratification_bounds(a));
}

TEST_CASE("fabricated reports fail verification") {
  CensusReport r;
  r.j = 2;
  r.split_probe = InstantonNumbers{3, 1};
  r.histogram[{1, 1}] = 3;
  CHECK(verify_stratification_bounds(r));
  r.histogram[{0, 5}] = 1;
  CHECK_FALSE(verify_stratification_bounds(r));
  r.histogram.erase({0, 5});
  r.nonsplit_max_charge = 1;
  CHECK_FALSE(verify_stratification_bounds(r));
  r.nonsplit_max_charge = 0;
  r.split_probe = InstantonNumbers{2, 1};
  CHECK_FALSE(verify_stratification_bounds(r));
}

TEST_CASE("bound violations") {
  CHECK(bound_violations(3, InstantonNumbers{1, 2}).empty());
  CHECK(bound_violations(3, InstantonNumbers{0, 2}).size() == 2);
  CHECK(bound_violations(3, InstantonNumbers{7, 3}).size() == 1);
}
