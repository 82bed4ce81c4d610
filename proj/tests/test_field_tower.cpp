#include "doctest.h"
#include "instanton/field_tower.hpp"

using namespace instanton;

namespace {

TowerPoly q(const Tower& t, std::vector<long> coeffs) {
  std::vector<Rat> r(coeffs.begin(), coeffs.end());
  return rational_poly(t, r);
}

}  // namespace

TEST_CASE("inversion over the rationals") {
  Tower base;
  CHECK(base.inverse(base.from_rat(Rat(2))) == base.from_rat(Rat(1, 2)));
  CHECK_THROWS_WITH_AS(base.inverse(base.zero()), "division by zero", std::domain_error);
}

TEST_CASE("inversion in Q[t]/(t^2 - 2)") {
  Tower base;
  const Tower t = base.extend(q(base, {-2, 0, 1}));
  const TowerElem g = t.generator();
  const TowerElem inv = t.inverse(g);
  CHECK(inv == t.scale(g, Rat(1, 2)));
  CHECK(t.mul(g, inv) == t.one());
  CHECK(t.degree_over_q() == 2);
  CHECK(t.nontrivial_levels() == 1);
}

TEST_CASE("zero divisor splits the modulus") {
  Tower base;
  const Tower t = base.extend(q(base, {0, -1, 1}));  // t^2 - t
  const TowerElem e = t.sub(t.generator(), t.one());
  try {
    t.inverse(e);
    FAIL("expected a split");
  } catch (const TowerSplit& split) {
    CHECK(split.level() == 1);
    const TowerPoly a = split.factor(0), b = split.factor(1);
    const bool expected = (a == q(base, {0, 1}) && b == q(base, {-1, 1})) ||
                          (a == q(base, {-1, 1}) && b == q(base, {0, 1}));
    CHECK(expected);
    for (std::size_t i = 0; i < 2; ++i) {
      const Tower br = t.branch(split, i);
      CHECK(br.degree_over_q() == 1);
      CHECK(br.nontrivial_levels() == 0);
    }
  }
}

TEST_CASE("nested tower arithmetic") {
  Tower base;
  const Tower s2 = base.extend(q(base, {-2, 0, 1}));
  // t2^2 - t1 over Q(sqrt 2): a fourth root of 2
  TowerPoly mod{s2.neg(s2.generator()), s2.zero(), s2.one()};
  const Tower s4 = s2.extend(mod);
  const TowerElem r = s4.generator();
  CHECK(s4.pow(r, 4) == s4.from_rat(Rat(2)));
  const TowerElem x = s4.add(r, s4.one());
  CHECK(s4.mul(x, s4.inverse(x)) == s4.one());
  CHECK(s4.degree_over_q() == 4);
  CHECK(s4.nontrivial_levels() == 2);
}

TEST_CASE("univariate gcd and squarefree part") {
  Tower base;
  CHECK(base.poly_gcd(q(base, {0, 0, 1}), q(base, {0, 0, 0, 1})) == q(base, {0, 0, 1}));
  CHECK(base.poly_gcd(q(base, {-1, 0, 1}), q(base, {-1, 1})) == q(base, {-1, 1}));
  // t^3 (t - 1) -> t (t - 1)
  CHECK(base.poly_squarefree_part(q(base, {0, 0, 0, -1, 1})) == q(base, {0, -1, 1}));
  const auto [quo, rem] = base.poly_divmod(q(base, {-1, 0, 1}), q(base, {-1, 1}));
  CHECK(quo == q(base, {1, 1}));
  CHECK(base.poly_degree(rem) == -1);
}

TEST_CASE("gcd over an extension") {
  Tower base;
  const Tower t = base.extend(q(base, {-2, 0, 1}));
  const TowerElem s = t.generator();
  // (y - s)(y + 1) and (y - s)(y - 1) share y - s
  const TowerPoly a = t.poly_mul({t.neg(s), t.one()}, {t.one(), t.one()});
  const TowerPoly b = t.poly_mul({t.neg(s), t.one()}, {t.neg(t.one()), t.one()});
  CHECK(t.poly_gcd(a, b) == TowerPoly{t.neg(s), t.one()});
}
